"""Laplacian spectra: exact characteristic polynomials with Sturm counting, and a Jacobi eigensolver as the numeric oracle."""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .graph import Graph, GraphError, components, induced
from .interval import IntervalSpec
from .poly import IntegerPolynomial, count_roots

Matrix = list[list[int]]
Rational = Union[int, Fraction]

MAX_EXACT_ORDER = 12


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def laplacian(g: Graph) -> Matrix:
    n = g.order
    L = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        L[u][v] = L[v][u] = -1
        L[u][u] += 1
        L[v][v] += 1
    return L


def charpoly_matrix(M: Sequence[Sequence[int]]) -> IntegerPolynomial:
    """det(xI - M) for an integer matrix by the Faddeev-LeVerrier recurrence.

    With N_0 = I, c_n = 1 and N_k = M N_{k-1} + c_{n-k+1} I, the coefficients are
    c_{n-k} = -tr(M N_k) / k. For integer M every division is exact.
    """
    n = len(M)
    if n == 0:
        return IntegerPolynomial([1])
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    N = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        # MN = M @ N
        N_cols = list(zip(*N))
        MN = [[sum(a * b for a, b in zip(row, col)) for col in N_cols] for row in M]
        trace = sum(MN[i][i] for i in range(n))
        c, rem = divmod(-trace, k)
        assert rem == 0, "Faddeev-LeVerrier trace not divisible"
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                MN[i][i] += c
            N = MN
    return IntegerPolynomial(coeffs)


def _check_exact_order(g: Graph, bound: int) -> None:
    if g.order > bound:
        raise ValueError(f"exact path limited to order {bound}, got {g.order}")


def charpoly(g: Graph, bound: int = MAX_EXACT_ORDER) -> IntegerPolynomial:
    """Characteristic polynomial of L(g), exact."""
    _check_exact_order(g, bound)
    return charpoly_matrix(laplacian(g))


def principal_submatrix(M: Matrix, keep: Sequence[int]) -> Matrix:
    return [[M[i][j] for j in keep] for i in keep]


def charpoly_vertex_deleted(g: Graph, v: int, bound: int = MAX_EXACT_ORDER) -> IntegerPolynomial:
    """Characteristic polynomial of L(g) with row and column ``v`` removed (not the Laplacian of g - v)."""
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for order {g.order}")
    _check_exact_order(g, bound)
    keep = [u for u in range(g.order) if u != v]
    return charpoly_matrix(principal_submatrix(laplacian(g), keep))


def charpoly_via_cut_edge(g: Graph, edge: tuple[int, int]) -> IntegerPolynomial:
    """Phi(L(G)) from the two sides of a cut edge v1v2:

    Phi(G1) Phi(G2) - Phi(G1) Phi(L_v2(G2)) - Phi(L_v1(G1)) Phi(G2),
    where the vertex-deleted factor of a single vertex is 1.
    """
    v1, v2 = edge
    if not g.has_edge(v1, v2):
        raise GraphError(f"{edge} is not an edge")
    rest = Graph(g.order, g.edges - {(min(v1, v2), max(v1, v2))})
    side1 = side2 = None
    for comp in components(rest):
        if v1 in comp:
            side1 = comp
        if v2 in comp:
            side2 = comp
    if side1 is side2:
        raise GraphError(f"{edge} is not a cut edge")
    g1, g2 = induced(rest, side1), induced(rest, side2)
    if len(side1) + len(side2) != g.order:
        # other components are untouched by the identity; their factors multiply through
        others = [v for v in range(g.order) if v not in side1 and v not in side2]
        tail = charpoly(induced(rest, others))
    else:
        tail = IntegerPolynomial([1])
    w1, w2 = sorted(side1).index(v1), sorted(side2).index(v2)
    p1, p2 = charpoly(g1), charpoly(g2)
    q1 = charpoly_vertex_deleted(g1, w1) if g1.order > 1 else IntegerPolynomial([1])
    q2 = charpoly_vertex_deleted(g2, w2) if g2.order > 1 else IntegerPolynomial([1])
    return (p1 * p2 - p1 * q2 - q1 * p2) * tail


def count_in_interval(p: IntegerPolynomial, interval: IntervalSpec) -> int:
    """Number of roots of ``p`` in ``interval`` with multiplicity; exact, no floating point."""
    return count_roots(p, interval.lo, interval.hi, interval.lo_closed, interval.hi_closed)


def m_interval(g: Graph, interval: IntervalSpec) -> int:
    """Number of Laplacian eigenvalues of ``g`` in ``interval``."""
    return count_in_interval(charpoly(g), interval)


def multiplicity(g: Graph, value: Rational) -> int:
    return m_interval(g, IntervalSpec.point(value))


# --- numeric track ----------------------------------------------------------


def jacobi_eigenvalues(A, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted nonincreasing."""
    a = np.array(A, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if not np.allclose(a, a.T):
        raise ValueError("matrix is not symmetric")
    scale = max(1.0, float(np.abs(a).max()))
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.triu(a, 1) ** 2)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    return np.sort(np.diag(a))[::-1]


def eigenvalues_numeric(g: Graph) -> np.ndarray:
    """Laplacian eigenvalues mu_1 >= ... >= mu_n."""
    return jacobi_eigenvalues(laplacian(g))


def mu_k(g: Graph, k: int) -> float:
    """k-th largest Laplacian eigenvalue (1-based), numerically."""
    if not 1 <= k <= g.order:
        raise ValueError(f"k={k} out of range 1..{g.order}")
    return float(eigenvalues_numeric(g)[k - 1])


def mu_k_compare_poly(p: IntegerPolynomial, k: int, c: Rational) -> Ordering:
    """Exact comparison of the k-th largest root of ``p`` (all roots real) with ``c``."""
    if not 1 <= k <= p.degree:
        raise ValueError(f"k={k} out of range 1..{p.degree}")
    if count_in_interval(p, IntervalSpec.greater_than(c)) >= k:
        return Ordering.GREATER
    if count_in_interval(p, IntervalSpec.at_least(c)) >= k:
        return Ordering.EQUAL
    return Ordering.LESS


def mu_k_compare(g: Graph, k: int, c: Rational) -> Ordering:
    """Decide mu_k(g) <, = or > c exactly."""
    if not 1 <= k <= g.order:
        raise ValueError(f"k={k} out of range 1..{g.order}")
    return mu_k_compare_poly(charpoly(g), k, c)


def spectrum_is_valid(g: Graph, values: np.ndarray, tol: float = 1e-8) -> bool:
    """Basic Laplacian spectrum sanity: nonnegative, trace 2|E|, bounded by n, smallest zero."""
    n = g.order
    return bool(
        len(values) == n
        and np.all(np.diff(values) <= tol)
        and abs(values[-1]) <= tol
        and values.min() >= -tol
        and abs(values.sum() - 2 * g.size) <= tol * max(1, n)
        and values.max() <= n + tol
    )
