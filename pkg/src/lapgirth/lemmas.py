"""Sweeps of the auxiliary spectral facts the bounds rest on, over all small connected graphs.

Each check returns a list of counterexample descriptions; an empty list means the property
held on every instance examined. Exact checks go through Sturm counting, the purely
matrix-analytic ones (Weyl, interlacing) are numeric with a fixed tolerance.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .generate import enumerate_connected
from .graph import (
    Graph,
    complement,
    component_count,
    cut_edges,
    cycle,
    delete_edges,
    is_connected,
    path,
    stats,
)
from .graph6 import emit_graph6
from .poly import IntegerPolynomial, root_multiplicity
from .spectra import (
    Ordering,
    charpoly,
    charpoly_via_cut_edge,
    eigenvalues_numeric,
    jacobi_eigenvalues,
    laplacian,
    mu_k_compare_poly,
)

NUMERIC_TOL = 1e-8

# checks restricted to small orders because they are quadratic or worse per graph
NUMERIC_ORDER_CAP = 6


@dataclass
class LemmaReport:
    n_max: int
    counterexamples: dict[str, list[str]] = field(default_factory=dict)
    instances: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.counterexamples.values())

    def to_dict(self) -> dict:
        return {"n_max": self.n_max, "ok": self.ok, "counterexamples": self.counterexamples, "instances": self.instances}


def _tag(g: Graph, note: str = "") -> str:
    return emit_graph6(g) + (f" {note}" if note else "")


def _is_semiregular_bipartite(g: Graph) -> bool:
    side = [-1] * g.order
    for s in range(g.order):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    degs = g.degrees()
    return all(len({degs[v] for v in range(g.order) if side[v] == c}) <= 1 for c in (0, 1))


# --- per-graph properties (each returns a note on failure, None on success) ---


def max_degree_lower(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    """mu_1 >= Delta + 1, with equality exactly when Delta = n - 1."""
    delta = max(g.degrees())
    if delta < 1:
        return None
    cmp = mu_k_compare_poly(p, 1, delta + 1)
    if cmp is Ordering.LESS:
        return "mu_1 < Delta+1"
    if (cmp is Ordering.EQUAL) != (delta == g.order - 1):
        return "equality case mismatch"
    return None


def edge_degree_upper(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    if g.size < 2:
        return None
    st = stats(g)
    r, s = st.max_edge_degree_sum, st.second_edge_degree_sum
    bound = 2 + math.sqrt((r - 2) * (s - 2))
    mu1 = float(eigenvalues_numeric(g)[0])
    if mu1 > bound + NUMERIC_TOL:
        return f"mu_1={mu1:.6f} > {bound:.6f}"
    tight = abs(mu1 - bound) <= 1e-7
    is_p4 = g.order == 4 and g.size == 3 and sorted(g.degrees()) == [1, 1, 2, 2]
    if tight != (_is_semiregular_bipartite(g) or is_p4):
        return "equality case mismatch"
    return None


def second_degree_lower(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    """mu_2 >= d_2 + 1 when some max-degree u and second-degree v are non-adjacent with no common neighbour."""
    if g.order < 3:
        return None
    degs = g.degrees()
    order = sorted(range(g.order), key=lambda v: -degs[v])
    delta, d2 = degs[order[0]], degs[order[1]]
    masks = g.masks
    applies = any(
        u != v and not g.has_edge(u, v) and not masks[u] & masks[v]
        for u in range(g.order)
        if degs[u] == delta
        for v in range(g.order)
        if degs[v] == d2
    )
    if applies and mu_k_compare_poly(p, 2, d2 + 1) is Ordering.LESS:
        return f"mu_2 < d_2+1={d2 + 1}"
    return None


def complement_identity(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    """x Phi_G(n - x) = (-1)^(n-1) (n - x) Phi_Gbar(x), the polynomial form of mu_i(G) + mu_{n-i}(Gbar) = n."""
    n = g.order
    x = IntegerPolynomial.x()
    n_minus_x = IntegerPolynomial([n, -1])
    left = x * p.compose(n_minus_x)
    right = n_minus_x * charpoly(complement(g)) * (-1 if (n - 1) % 2 else 1)
    if left != right:
        return "polynomial identity fails"
    mu = eigenvalues_numeric(g)
    mubar = eigenvalues_numeric(complement(g))
    for i in range(1, n):
        if abs(mu[i - 1] + mubar[n - i - 1] - n) > NUMERIC_TOL:
            return f"index {i}"
    return None


def pendant_multiplicity(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    st = stats(g)
    m1 = root_multiplicity(p, 1)
    if m1 < st.pendant_count - st.quasi_pendant_count:
        return f"m(1)={m1} < p-q={st.pendant_count - st.quasi_pendant_count}"
    return None


def connectivity_upper(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    """mu_{n-1} <= kappa for non-complete graphs; equality forces a join (disconnected complement)."""
    n = g.order
    if n < 2 or g.size == n * (n - 1) // 2:
        return None
    kappa = stats(g).vertex_connectivity
    cmp = mu_k_compare_poly(p, n - 1, kappa)
    if cmp is Ordering.GREATER:
        return f"mu_(n-1) > kappa={kappa}"
    if cmp is Ordering.EQUAL and is_connected(complement(g)):
        return "equality but not a join"
    return None


def zero_multiplicity(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    if p(0) != 0 or root_multiplicity(p, 0) != component_count(g):
        return "multiplicity of 0 differs from component count"
    return None


def cut_edge_recursion(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    for e in cut_edges(g):
        if charpoly_via_cut_edge(g, e) != p:
            return f"edge {e}"
    return None


def edge_interlacing(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    mu = eigenvalues_numeric(g)
    for e in g.sorted_edges():
        nu = eigenvalues_numeric(delete_edges(g, [e]))
        for i in range(g.order):
            if nu[i] > mu[i] + NUMERIC_TOL:
                return f"edge {e}: mu_{i + 1}(G-e) > mu_{i + 1}(G)"
            if i + 1 < g.order and nu[i] < mu[i + 1] - NUMERIC_TOL:
                return f"edge {e}: mu_{i + 1}(G-e) < mu_{i + 2}(G)"
    return None


def cauchy_interlacing(g: Graph, p: IntegerPolynomial) -> Optional[str]:
    L = np.array(laplacian(g), dtype=float)
    n = g.order
    rho = jacobi_eigenvalues(L)
    for size in range(1, n):
        for keep in itertools.combinations(range(n), size):
            sub = jacobi_eigenvalues(L[np.ix_(keep, keep)])
            for i in range(size):
                if not rho[n - size + i] - NUMERIC_TOL <= sub[i] <= rho[i] + NUMERIC_TOL:
                    return f"submatrix {keep}, index {i + 1}"
    return None


EXACT_CHECKS: dict[str, Callable[[Graph, IntegerPolynomial], Optional[str]]] = {
    "max_degree_lower": max_degree_lower,
    "edge_degree_upper": edge_degree_upper,
    "second_degree_lower": second_degree_lower,
    "complement_identity": complement_identity,
    "pendant_multiplicity": pendant_multiplicity,
    "connectivity_upper": connectivity_upper,
    "zero_multiplicity": zero_multiplicity,
    "cut_edge_recursion": cut_edge_recursion,
}

SMALL_CHECKS: dict[str, Callable[[Graph, IntegerPolynomial], Optional[str]]] = {
    "edge_interlacing": edge_interlacing,
    "cauchy_interlacing": cauchy_interlacing,
}


# --- checks that are not per-graph ------------------------------------------


def closed_forms(orders: Iterable[int] = range(3, 13)) -> list[str]:
    """Cycle spectrum, largest path eigenvalue and the adjacency spectrum of a path."""
    bad = []
    for n in orders:
        got = np.sort(eigenvalues_numeric(cycle(n)))
        want = np.sort([2 - 2 * math.cos(2 * j * math.pi / n) for j in range(n)])
        if np.max(np.abs(got - want)) > NUMERIC_TOL:
            bad.append(f"C_{n} spectrum")
        if abs(eigenvalues_numeric(path(n))[0] - (2 + 2 * math.cos(math.pi / n))) > NUMERIC_TOL:
            bad.append(f"P_{n} mu_1")
        A = np.array(laplacian(path(n)), dtype=float)
        A = np.diag(np.diag(A)) - A
        got = np.sort(jacobi_eigenvalues(A))
        want = np.sort([2 * math.cos(j * math.pi / (n + 1)) for j in range(1, n + 1)])
        if np.max(np.abs(got - want)) > NUMERIC_TOL:
            bad.append(f"A(P_{n}) spectrum")
    return bad


def weyl(graphs_by_order: dict[int, list[Graph]], pairs_per_order: int = 200, seed: int = 0) -> tuple[list[str], int]:
    """rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B) on random Laplacian pairs of equal order."""
    rng = np.random.default_rng(seed)
    bad, count = [], 0
    for n, graphs in sorted(graphs_by_order.items()):
        if n > NUMERIC_ORDER_CAP or not graphs:
            continue
        for _ in range(pairs_per_order):
            g1 = graphs[rng.integers(len(graphs))]
            g2 = graphs[rng.integers(len(graphs))]
            A = np.array(laplacian(g1), dtype=float)
            B = np.array(laplacian(g2), dtype=float)
            ra, rb, rab = jacobi_eigenvalues(A), jacobi_eigenvalues(B), jacobi_eigenvalues(A + B)
            count += 1
            for i in range(n):
                for j in range(n - i):
                    if rab[i + j] > ra[i] + rb[j] + NUMERIC_TOL:
                        bad.append(f"{emit_graph6(g1)} + {emit_graph6(g2)} at ({i + 1},{j + 1})")
    return bad, count


def lemma_suite(n_max: int = 7, small_cap: int = NUMERIC_ORDER_CAP) -> LemmaReport:
    report = LemmaReport(n_max)
    names = list(EXACT_CHECKS) + list(SMALL_CHECKS)
    for name in names:
        report.counterexamples[name] = []
        report.instances[name] = 0
    by_order: dict[int, list[Graph]] = {}
    for n in range(2, n_max + 1):
        by_order[n] = list(enumerate_connected(n))
        for g in by_order[n]:
            p = charpoly(g)
            checks = dict(EXACT_CHECKS)
            if n <= small_cap:
                checks.update(SMALL_CHECKS)
            for name, check in checks.items():
                report.instances[name] += 1
                note = check(g, p)
                if note is not None:
                    report.counterexamples[name].append(_tag(g, note))
    report.counterexamples["closed_forms"] = closed_forms()
    report.instances["closed_forms"] = 10
    bad, count = weyl(by_order)
    report.counterexamples["weyl"] = bad
    report.instances["weyl"] = count
    return report
