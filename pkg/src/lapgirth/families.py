"""Named graphs and graph families, addressed by ``FamilySpec`` text such as ``Y(9,3)`` or ``K23Star``.

Labelling conventions: cycle vertices come first (``u_1`` is vertex 0), attached
pendant or extra vertices last. The figure-defined graphs are fixed edge lists
read off the drawings; tests pin each one against its quoted eigenvalues.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import ceil
from typing import Callable, Iterator

from .graph import (
    Graph,
    GraphError,
    complement,
    complete,
    complete_bipartite,
    cycle,
    delete_edges,
    empty,
    join,
    path,
    star,
    union,
)


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(map(str, self.params))})"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\(\s*([-0-9,\s]*)\))?\s*", text)
        if not m:
            raise FamilyError(f"malformed family spec {text!r}")
        name, args = m.groups()
        params = tuple(int(a) for a in args.split(",") if a.strip()) if args else ()
        return cls(name, params)


def _require(cond: bool, spec: str) -> None:
    if not cond:
        raise FamilyError(f"parameters out of domain for {spec}")


# --- definitional families --------------------------------------------------


def U(n: int) -> Graph:
    """C_{n-1} on 0..n-2 with a pendant n-1 at vertex 0."""
    _require(n >= 5, f"U({n})")
    return Graph(n, list(cycle(n - 1).edges) + [(0, n - 1)])


def U_prime(n: int) -> Graph:
    """C_{n-2} on 0..n-3, a K_2 on {n-2, n-1}, and the edge 0 -- n-2."""
    _require(n >= 6, f"Uprime({n})")
    return Graph(n, list(cycle(n - 2).edges) + [(n - 2, n - 1), (0, n - 2)])


def Y(n: int, i: int) -> Graph:
    """C_{n-2} = u_1..u_{n-2} on 0..n-3 with pendants w = n-2 at u_1 and z = n-1 at u_i."""
    _require(n >= 6 and 1 <= i <= ceil((n - 1) / 2), f"Y({n},{i})")
    return Graph(n, list(cycle(n - 2).edges) + [(0, n - 2), (i - 1, n - 1)])


def H(n: int, a: int | None = None) -> Graph:
    if a is None:
        # K_{n-1} on 0..n-2 minus the edge 01, plus vertex n-1 joined to 0
        _require(n >= 5, f"H({n})")
        return Graph(n, list(delete_edges(complete(n - 1), [(0, 1)]).edges) + [(0, n - 1)])
    # P_4 = v1 v2 v3 v4 on 0..3, K_{n-4} on 4..n-1; K joined to v2, v3;
    # the first a vertices of K joined to v1, the rest to v4
    _require(n >= 6 and 1 <= a <= (n - 4) // 2, f"H({n},{a})")
    edges = [(0, 1), (1, 2), (2, 3)]
    clique = list(range(4, n))
    edges += [(x, y) for k, x in enumerate(clique) for y in clique[k + 1 :]]
    edges += [(x, v) for x in clique for v in (1, 2)]
    edges += [(x, 0 if k < a else 3) for k, x in enumerate(clique)]
    return Graph(n, edges)


def Kn_minus_star(n: int, s: int) -> Graph:
    """K_n minus the edges v v_1..v v_s with v = 0, v_i = i."""
    _require(n >= 3 and 1 <= s <= n - 2, f"KnMinusStar({n},{s})")
    return delete_edges(complete(n), [(0, i) for i in range(1, s + 1)])


def family_a(n: int, s: int) -> Graph:
    """K_n - {v v_i : i <= s} - v_1 v_2 with v = 0, v_i = i (vertex 2 lies outside the star when s = 1)."""
    _require(n >= 4 and 1 <= s <= n - 2, f"FamilyA({n},{s})")
    return delete_edges(complete(n), [(0, i) for i in range(1, s + 1)] + [(1, 2)])


def family_b(n: int, s: int, t: int) -> Graph:
    """K_n - {v v_i : i <= s} - {u u_j : j <= t} with v = 0, v_i = 1..s, u = s+1, u_j = s+2..s+1+t."""
    _require(1 <= s <= n - 3 and 1 <= t <= min(s, n - 2 - s), f"FamilyB({n},{s},{t})")
    u = s + 1
    return delete_edges(complete(n), [(0, i) for i in range(1, s + 1)] + [(u, u + j) for j in range(1, t + 1)])


def family_c(n: int, s: int, t: int) -> Graph:
    """K_n - {v v_i : i <= s} - {v_1 u_j : j <= t} with v = 0, v_i = 1..s, u_j = s+1..s+t."""
    _require(2 <= s <= n - 2 and 1 <= t <= min(s - 1, n - 1 - s), f"FamilyC({n},{s},{t})")
    return delete_edges(complete(n), [(0, i) for i in range(1, s + 1)] + [(1, s + j) for j in range(1, t + 1)])


def star_plus(s: int) -> Graph:
    """K_{1,s} with the edge 0-1 subdivided by vertex s+1."""
    _require(s >= 1, f"StarPlus({s})")
    return Graph(s + 2, [(0, i) for i in range(2, s + 1)] + [(0, s + 1), (s + 1, 1)])


def star_plus_plus(s: int) -> Graph:
    """K_{1,s} and a K_2 on {s+1, s+2}, joined by the edge 1 -- s+1."""
    _require(s >= 1, f"StarPlusPlus({s})")
    return Graph(s + 3, list(star(s).edges) + [(s + 1, s + 2), (1, s + 1)])


def star_diamond(s: int, t: int) -> Graph:
    """K_{1,s} (centre 0, leaves 1..s) with the centre of a K_{1,t} identified with leaf 1."""
    _require(s >= 1 and t >= 1, f"StarDiamond({s},{t})")
    return Graph(s + t + 1, list(star(s).edges) + [(1, s + j) for j in range(1, t + 1)])


def join_3k1(n: int) -> Graph:
    _require(n >= 4, f"KJoin3K1({n})")
    return join(complete(n - 3), empty(3))


def join_k1_k2(n: int) -> Graph:
    _require(n >= 4, f"KJoinK1K2({n})")
    return join(complete(n - 3), union(empty(1), complete(2)))


def join_2k2(n: int) -> Graph:
    _require(n >= 5, f"KJoin2K2({n})")
    return join(complete(n - 4), union(complete(2), complete(2)))


def join_c4(n: int) -> Graph:
    """K_{n-4} joined with C_4, i.e. K_n minus two disjoint edges; its complement is (n-4)K_1 + 2K_2."""
    _require(n >= 5, f"KJoinC4({n})")
    return join(complete(n - 4), cycle(4))


# --- figure-defined graphs ---------------------------------------------------
#
# K_{2,3} has parts {0, 1} (top, bottom) and {2, 3, 4} (right, left, far right);
# the starred versions subdivide the edges from the bottom vertex 1.

_FIXED: dict[str, tuple[int, list[tuple[int, int]]]] = {
    # K_{2,3} with edge 1-4 subdivided by 5
    "K23Star": (6, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (4, 5), (5, 1)]),
    # ... and edge 1-2 subdivided by 6
    "K23DoubleStar": (7, [(0, 2), (0, 3), (0, 4), (1, 3), (4, 5), (5, 1), (2, 6), (6, 1)]),
    # ... and edge 1-3 subdivided by 7
    "K23TripleStar": (8, [(0, 2), (0, 3), (0, 4), (4, 5), (5, 1), (2, 6), (6, 1), (3, 7), (7, 1)]),
    # P_9 on 0..8 with pendants 9 at vertex 4 and 10 at vertex 2
    "F": (11, [(i, i + 1) for i in range(8)] + [(4, 9), (2, 10)]),
    # 2x3 grid: top row 0 1 2, bottom row 3 4 5
    "R1": (6, [(0, 1), (1, 2), (2, 5), (5, 4), (4, 3), (3, 0), (1, 4)]),
    # R1 plus vertex 6 joined to top-left 0 and bottom-right 5
    "R2": (7, [(0, 1), (1, 2), (2, 5), (5, 4), (4, 3), (3, 0), (1, 4), (0, 6), (6, 5)]),
    # square 0-1-2-3 (left, bottom, right, top), then 1-4-5-3 and 3-6-4
    "R3": (7, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 3), (3, 6), (6, 4)]),
    # C_5 = 0..4; 5 ~ 0, 6 ~ 2, 5 ~ 6; 7 ~ 5 and 3
    "F0": (8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 2), (5, 7), (7, 3)]),
    # C_6 = 0..5; path 0-6-7-3; pendant 8 at 0
    "F1": (9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 3), (0, 8)]),
    # C_6 = 0..5; path 0-6-7-3; pendant 8 at 5
    "F2": (9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 3), (5, 8)]),
    # C_5 = 0..4; u1=5 ~ 0, u2=6 ~ 1, u3=7 ~ 2; w=8 ~ u1, u2, u3
    "Q1": (9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (6, 1), (7, 2), (8, 5), (8, 6), (8, 7)]),
    # C_5 = 0..4; u1=5 ~ 0, u2=6 ~ 1, u3=7 ~ 3; w=8 ~ u1, u2, u3
    "Q2": (9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (6, 1), (7, 3), (8, 5), (8, 6), (8, 7)]),
    # C_6 = 0..5; u1=6 ~ 0, u2=7 ~ 2, u3=8 ~ 4; w=9 ~ u1, u2, u3
    "Q3": (10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (7, 2), (8, 4), (9, 6), (9, 7), (9, 8)]),
    # C_6 = 0..5; u1=6 ~ 0, u2=7 ~ 3, u1 ~ u2; z=8 ~ u1; u3=9 ~ z and 2
    "Q4": (10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (7, 3), (6, 7), (8, 6), (9, 8), (9, 2)]),
    # left 0; top row 1 3 5; bottom row 2 4 6; right middle 7
    "G1": (8, [(0, 1), (1, 3), (3, 5), (5, 7), (7, 0), (0, 2), (2, 4), (4, 6), (6, 7), (3, 4)]),
    # C_6 = top 0, right 1, 2, bottom 3, left 4, 5; 0-6-7; 7-8-4; 7-9-2
    "G2": (10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 8), (8, 4), (7, 9), (9, 2)]),
    # K_{2,4} (parts {0,1}, {2,3,4,5}) minus the edge 1-5
    "K24Minus": (6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4)]),
    # K_{2,4} with the edge 1-5 subdivided by 6
    "K24Sub": (7, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 6), (6, 5)]),
}


def _fixed(name: str) -> Callable[[], Graph]:
    order, edges = _FIXED[name]
    return lambda: Graph(order, edges)


def _complete_or_bipartite(*params: int) -> Graph:
    if len(params) == 1:
        _require(params[0] >= 1, f"K({params[0]})")
        return complete(params[0])
    p, q = params
    _require(p >= 1 and q >= 1, f"K({p},{q})")
    return complete_bipartite(p, q)


def _path(n: int) -> Graph:
    _require(n >= 1, f"P({n})")
    return path(n)


def _cycle(n: int) -> Graph:
    _require(n >= 3, f"C({n})")
    return cycle(n)


def _kn_minus_e(n: int) -> Graph:
    return Kn_minus_star(n, 1)


def _empty(n: int) -> Graph:
    _require(n >= 1, f"E({n})")
    return empty(n)


# name -> (constructor, allowed parameter counts)
CATALOG: dict[str, tuple[Callable[..., Graph], tuple[int, ...]]] = {
    "P": (_path, (1,)),
    "C": (_cycle, (1,)),
    "K": (_complete_or_bipartite, (1, 2)),
    "E": (_empty, (1,)),
    "Star": (star, (1,)),
    "U": (U, (1,)),
    "Uprime": (U_prime, (1,)),
    "Y": (Y, (2,)),
    "H": (H, (1, 2)),
    "KnMinusStar": (Kn_minus_star, (2,)),
    "KnMinusE": (_kn_minus_e, (1,)),
    "FamilyA": (family_a, (2,)),
    "FamilyB": (family_b, (3,)),
    "FamilyC": (family_c, (3,)),
    "StarPlus": (star_plus, (1,)),
    "StarPlusPlus": (star_plus_plus, (1,)),
    "StarDiamond": (star_diamond, (2,)),
    "KJoin3K1": (join_3k1, (1,)),
    "KJoinK1K2": (join_k1_k2, (1,)),
    "KJoin2K2": (join_2k2, (1,)),
    "KJoinC4": (join_c4, (1,)),
}
CATALOG.update({name: (_fixed(name), (0,)) for name in _FIXED})


def make(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    try:
        ctor, arities = CATALOG[spec.name]
    except KeyError:
        raise FamilyError(f"unknown family {spec.name!r}") from None
    if len(spec.params) not in arities:
        raise FamilyError(f"{spec.name} takes {' or '.join(map(str, arities))} parameters, got {len(spec.params)}")
    try:
        return ctor(*spec.params)
    except GraphError as exc:
        raise FamilyError(str(exc)) from exc


# --- parameter sweeps used by the verifier -----------------------------------


def equality_catalog_k1(n: int) -> list[FamilySpec]:
    """Graphs of order n with girth n - 1."""
    out = [FamilySpec("U", (n,))]
    if n == 5:
        out.insert(0, FamilySpec("K", (2, 3)))
    return out


def equality_catalog_k2(n: int) -> list[FamilySpec]:
    if n == 6:
        return [FamilySpec("K", (2, 4)), FamilySpec("K23Star")]
    if n == 7:
        return [FamilySpec("K23DoubleStar"), FamilySpec("Y", (7, 3))]
    if n == 8:
        return [FamilySpec("K23TripleStar"), FamilySpec("Y", (8, 4))]
    if n >= 9:
        return [FamilySpec("Y", (n, i)) for i in range(3, ceil((n - 1) / 2) + 1)]
    return []


def mult_n_catalog(n: int, corrected: bool = False) -> list[FamilySpec]:
    """Graphs claimed to have m_G(n) = n - 3.

    As stated, the list ends with K_{n-4} v 2K_2, whose complement has n - 3 components,
    so m_G(n) = n - 4 for it. The complement argument actually yields K_{n-4} v C_4;
    ``corrected=True`` substitutes that graph.
    """
    last = "KJoinC4" if corrected else "KJoin2K2"
    return [FamilySpec("KJoin3K1", (n,)), FamilySpec("KJoinK1K2", (n,)), FamilySpec(last, (n,))]


def top_minus_two_catalog(n: int) -> list[FamilySpec]:
    """Graphs with m_G[n-1, n] = n - 2."""
    return [FamilySpec("KnMinusStar", (n, s)) for s in range(1, n - 1)]


def top_minus_three_catalog(n: int, family_a_min_s: int = 2) -> list[FamilySpec]:
    """Graphs with m_G[n-1, n] = n - 3: H(n), H(n, a) and families (a), (b), (c)."""
    out = [FamilySpec("H", (n,))]
    out += [FamilySpec("H", (n, a)) for a in range(1, (n - 4) // 2 + 1)]
    out += [FamilySpec("FamilyA", (n, s)) for s in range(family_a_min_s, n - 1)]
    out += [FamilySpec("FamilyB", (n, s, t)) for s in range(1, n - 2) for t in range(1, min(s, n - 2 - s) + 1)]
    out += [FamilySpec("FamilyC", (n, s, t)) for s in range(2, n - 1) for t in range(1, min(s - 1, n - 1 - s) + 1)]
    return out


def all_specs(n: int) -> Iterator[FamilySpec]:
    """Every parameterised catalog member of order n (used by the classifier)."""
    yield FamilySpec("K", (n,))
    yield FamilySpec("KnMinusE", (n,))
    yield from mult_n_catalog(n)
    yield FamilySpec("KJoinC4", (n,))
    yield from top_minus_two_catalog(n)
    yield from top_minus_three_catalog(n, family_a_min_s=1)


__all__ = ["FamilySpec", "FamilyError", "make", "CATALOG", "complement"]
