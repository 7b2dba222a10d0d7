"""Rational intervals with open/closed ends, and the textual grammar used on the command line.

Grammar: ``[`` or ``(``, lower end, ``,``, upper end, ``]`` or ``)``. An end is a rational
(``4``, ``-1/2``, ``2.5``), ``inf``/``-inf``, or an arithmetic expression over the
variables ``n``, ``g`` and ``k`` (for instance ``n-g-k+4``) resolved against a graph.
"""

from __future__ import annotations

import ast
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

End = Optional[Fraction]


class IntervalError(ValueError):
    pass


@dataclass(frozen=True)
class IntervalSpec:
    lo: End
    hi: End
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        lo = None if self.lo is None else Fraction(self.lo)
        hi = None if self.hi is None else Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo is None and self.lo_closed or hi is None and self.hi_closed:
            raise IntervalError("an infinite end must be open")
        if lo is not None and hi is not None:
            if lo > hi:
                raise IntervalError(f"empty interval: {lo} > {hi}")
            if lo == hi and not (self.lo_closed and self.hi_closed):
                raise IntervalError("a degenerate interval must be closed on both ends")

    @classmethod
    def closed(cls, lo, hi) -> "IntervalSpec":
        return cls(lo, hi, True, True)

    @classmethod
    def point(cls, value) -> "IntervalSpec":
        return cls(value, value, True, True)

    @classmethod
    def at_least(cls, value) -> "IntervalSpec":
        return cls(value, None, True, False)

    @classmethod
    def greater_than(cls, value) -> "IntervalSpec":
        return cls(value, None, False, False)

    def contains(self, x: float, tol: float = 0.0) -> bool:
        if self.lo is not None:
            lo = float(self.lo)
            if x < lo - tol or (not self.lo_closed and x <= lo + tol):
                return False
        if self.hi is not None:
            hi = float(self.hi)
            if x > hi + tol or (not self.hi_closed and x >= hi - tol):
                return False
        return True

    def __str__(self) -> str:
        return "{}{},{}{}".format(
            "[" if self.lo_closed else "(",
            "-inf" if self.lo is None else _fmt(self.lo),
            "inf" if self.hi is None else _fmt(self.hi),
            "]" if self.hi_closed else ")",
        )


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}
_INTERVAL_RE = re.compile(r"^\s*([\[(])\s*([^,]+?)\s*,\s*([^,]+?)\s*([\])])\s*$")


def _eval(node: ast.AST, env: Mapping[str, Union[int, Fraction]]) -> Fraction:
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return Fraction(str(node.value))
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise IntervalError(f"unbound variable {node.id!r}")
        return Fraction(env[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, env)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    raise IntervalError(f"unsupported expression element {ast.dump(node)}")


def evaluate_end(text: str, env: Optional[Mapping[str, Union[int, Fraction]]] = None) -> End:
    t = text.strip().lower()
    if t in ("inf", "+inf", "-inf"):
        return None
    try:
        tree = ast.parse(t, mode="eval")
    except SyntaxError as exc:
        raise IntervalError(f"cannot parse interval end {text!r}") from exc
    try:
        return _eval(tree, env or {})
    except ZeroDivisionError as exc:
        raise IntervalError(f"division by zero in {text!r}") from exc


def parse_interval(text: str, env: Optional[Mapping[str, Union[int, Fraction]]] = None) -> IntervalSpec:
    m = _INTERVAL_RE.match(text)
    if not m:
        raise IntervalError(f"malformed interval {text!r}")
    left, lo_text, hi_text, right = m.groups()
    if lo_text.strip().lower() in ("inf", "+inf") or hi_text.strip().lower() == "-inf":
        raise IntervalError(f"infinite end on the wrong side in {text!r}")
    return IntervalSpec(evaluate_end(lo_text, env), evaluate_end(hi_text, env), left == "[", right == "]")


def is_relative(text: str) -> bool:
    return bool(re.search(r"[a-z]", text.lower().replace("inf", "")))
