"""Exact univariate polynomials over the integers, square-free decomposition and Sturm root counting."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Union

Rational = Union[int, Fraction]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntegerPolynomial:
    """Polynomial with exact integer coefficients, stored in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = _trim(int(a) for a in coeffs)
        self.coeffs: tuple[int, ...] = c

    @classmethod
    def x(cls) -> "IntegerPolynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, a: int) -> "IntegerPolynomial":
        return cls([a])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntegerPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntegerPolynomial([other])
        return isinstance(other, IntegerPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntegerPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntegerPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial([-a for a in self.coeffs])

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return _as_poly(other) - self

    def __mul__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntegerPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntegerPolynomial":
        out = IntegerPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: Rational) -> Rational:
        acc: Rational = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def compose(self, q: "IntegerPolynomial") -> "IntegerPolynomial":
        acc = IntegerPolynomial([])
        for a in reversed(self.coeffs):
            acc = acc * q + IntegerPolynomial([a])
        return acc

    def derivative(self) -> "IntegerPolynomial":
        return IntegerPolynomial([k * a for k, a in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        c = 0
        for a in self.coeffs:
            c = gcd(c, a)
        return c

    def primitive(self) -> "IntegerPolynomial":
        """Divide by the content and make the leading coefficient positive."""
        c = self.content()
        if c == 0:
            return self
        if self.lead < 0:
            c = -c
        return IntegerPolynomial([a // c for a in self.coeffs])

    def pseudo_divmod(self, d: "IntegerPolynomial") -> tuple["IntegerPolynomial", "IntegerPolynomial"]:
        """Return (q, r) with lead(d)**(deg self - deg d + 1) * self = q * d + r."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dd = d.degree
        lc = d.lead
        if len(r) - 1 < dd:
            return IntegerPolynomial([]), self
        steps = len(r) - 1 - dd + 1
        q = [0] * steps
        for k in range(len(r) - 1, dd - 1, -1):
            # multiply everything so far by lc, then cancel the top term
            a = r[k]
            q = [x * lc for x in q]
            r = [x * lc for x in r]
            q[k - dd] += a
            for i, b in enumerate(d.coeffs):
                r[k - dd + i] -= a * b
        return IntegerPolynomial(q), IntegerPolynomial(r[:dd])

    def exact_div(self, d: "IntegerPolynomial") -> "IntegerPolynomial":
        """Quotient over the integers; raises ValueError if ``d`` does not divide exactly."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dd = d.degree
        if len(r) - 1 < dd:
            if not r:
                return IntegerPolynomial([])
            raise ValueError("not divisible")
        q = [0] * (len(r) - dd)
        for k in range(len(r) - 1, dd - 1, -1):
            a, rem = divmod(r[k], d.lead)
            if rem:
                raise ValueError("not divisible over the integers")
            q[k - dd] = a
            for i, b in enumerate(d.coeffs):
                r[k - dd + i] -= a * b
        if any(r):
            raise ValueError("not divisible")
        return IntegerPolynomial(q)

    def divides(self, p: "IntegerPolynomial") -> bool:
        try:
            p.exact_div(self)
        except ValueError:
            return False
        return True

    def sign_at(self, x: Optional[Rational], at_infinity: int = 0) -> int:
        """Sign of the value at rational ``x``, or at +inf / -inf when ``at_infinity`` is +1 / -1."""
        if at_infinity:
            if not self.coeffs:
                return 0
            s = 1 if self.lead > 0 else -1
            if at_infinity < 0 and self.degree % 2:
                s = -s
            return s
        v = self(x if isinstance(x, int) else Fraction(x))
        return (v > 0) - (v < 0)


def _as_poly(p: Union[IntegerPolynomial, int]) -> IntegerPolynomial:
    return p if isinstance(p, IntegerPolynomial) else IntegerPolynomial([p])


def poly_gcd(a: IntegerPolynomial, b: IntegerPolynomial) -> IntegerPolynomial:
    """Primitive gcd over Z[x] via the primitive remainder sequence."""
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        _, r = a.pseudo_divmod(b)
        a, b = b, r.primitive()
    return a.primitive() if not a.is_zero() else a


def squarefree_decomposition(p: IntegerPolynomial) -> list[tuple[IntegerPolynomial, int]]:
    """``p = c * prod(f_i ** i)`` with pairwise coprime square-free primitive ``f_i``.

    Uses the gcd tower a_0 = p, a_{i+1} = gcd(a_i, a_i'): b_i = a_{i-1} / a_i is the product
    of the distinct factors of multiplicity >= i, and f_i = b_i / b_{i+1}. Every quotient is
    of primitive polynomials, hence exact over Z. Only non-constant ``f_i`` are returned.
    """
    return [(f, i) for i, f in enumerate(_split(_multiplicity_layers(p)), start=1) if f.degree > 0]


def _multiplicity_layers(p: IntegerPolynomial) -> list[IntegerPolynomial]:
    """[b_1, b_2, ...]: b_i is the square-free product of roots of multiplicity at least i."""
    if p.degree < 1:
        return []
    tower = [p.primitive()]
    while tower[-1].degree > 0:
        tower.append(poly_gcd(tower[-1], tower[-1].derivative()))
    return [tower[i - 1].exact_div(tower[i]) for i in range(1, len(tower))]


def _split(layers: list[IntegerPolynomial]) -> list[IntegerPolynomial]:
    return [b.exact_div(layers[i + 1]) if i + 1 < len(layers) else b for i, b in enumerate(layers)]


def sturm_chain(p: IntegerPolynomial) -> list[IntegerPolynomial]:
    """Sturm sequence p, p', -rem(p, p'), ... with each member scaled by a positive constant."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        _, r = a.pseudo_divmod(b)
        # prem = lc^e * rem; fix the sign so the result is a positive multiple of -rem
        e = a.degree - b.degree + 1
        if b.lead < 0 and e % 2:
            r = -r
        r = -r
        if r.is_zero():
            break
        c = r.content()
        chain.append(IntegerPolynomial([x // c for x in r.coeffs]))
    return [q for q in chain if not q.is_zero()]


def _variations(chain: Sequence[IntegerPolynomial], x: Optional[Rational], at_infinity: int = 0) -> int:
    signs = [s for s in (q.sign_at(x, at_infinity) for q in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_distinct_roots(q: IntegerPolynomial, lo: Optional[Rational], hi: Optional[Rational], lo_closed: bool, hi_closed: bool) -> int:
    """Distinct real roots of the square-free ``q`` in the interval; None endpoints are infinite."""
    if q.degree < 1:
        return 0
    if lo is not None and hi is not None and lo == hi:
        return int(lo_closed and hi_closed and q(Fraction(lo)) == 0)
    chain = sturm_chain(q)
    v_lo = _variations(chain, None, -1) if lo is None else _variations(chain, lo)
    v_hi = _variations(chain, None, 1) if hi is None else _variations(chain, hi)
    # V(a) - V(b) counts roots in (a, b] for square-free q
    count = v_lo - v_hi
    if lo is not None and lo_closed and q(Fraction(lo)) == 0:
        count += 1
    if hi is not None and not hi_closed and q(Fraction(hi)) == 0:
        count -= 1
    return count


def count_roots(p: IntegerPolynomial, lo: Optional[Rational], hi: Optional[Rational], lo_closed: bool = True, hi_closed: bool = True) -> int:
    """Real roots of ``p`` in the interval counted with multiplicity (exact)."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    return sum(count_distinct_roots(b, lo, hi, lo_closed, hi_closed) for b in _multiplicity_layers(p))


def root_multiplicity(p: IntegerPolynomial, r: Rational) -> int:
    return count_roots(p, r, r, True, True)
