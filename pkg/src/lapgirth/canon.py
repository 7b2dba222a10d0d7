"""Canonical labelling by colour refinement plus individualisation search.

The refinement is the usual 1-dimensional Weisfeiler-Leman step, which is
label-equivariant, so the maximum adjacency certificate over all leaves of the
search tree is an isomorphism invariant. Branches on vertices that are twins of
an already explored vertex in the same cell are skipped: swapping two twins is
an automorphism fixing everything individualised so far, so their subtrees
carry identical certificates.
"""

from __future__ import annotations

from .graph import Graph
from .graph6 import emit_graph6

MAX_CANON_ORDER = 16


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nb))) for v, nb in enumerate(nbrs)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return new
        colors, ncolors = new, len(ranking)


def _certificate(masks: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        m = masks[v]
        row = 0
        while m:
            low = m & -m
            row |= 1 << pos[low.bit_length() - 1]
            m ^= low
        rows.append(row)
    return tuple(rows)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` such that ``order[i]`` is the vertex placed at position ``i``."""
    n = g.order
    if n > MAX_CANON_ORDER:
        raise ValueError(f"canonical labelling limited to order {MAX_CANON_ORDER}")
    if n == 0:
        return []
    masks = g.masks
    nbrs = [g.neighbors(v) for v in range(n)]

    def twins(u: int, v: int) -> bool:
        bu, bv = 1 << u, 1 << v
        return masks[u] & ~bv == masks[v] & ~bu

    best_cert = None
    best_order: list[int] = []

    def search(colors: list[int]) -> None:
        nonlocal best_cert, best_order
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        split = [c for c, k in counts.items() if k > 1]
        if not split:
            order = sorted(range(n), key=colors.__getitem__)
            cert = _certificate(masks, order)
            if best_cert is None or cert > best_cert:
                best_cert, best_order = cert, order
            return
        target = min(split)
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        for v in cell:
            if any(twins(u, v) for u in explored):
                continue
            explored.append(v)
            base = [2 * c for c in colors]
            base[v] -= 1
            search(_refine(nbrs, base))

    search(_refine(nbrs, [0] * n))
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    pos = [0] * g.order
    for i, v in enumerate(order):
        pos[v] = i
    return Graph(g.order, ((pos[u], pos[v]) for u, v in g.edges))


def canonical_form(g: Graph) -> str:
    """graph6 text of the canonical relabelling; equal iff the graphs are isomorphic."""
    return emit_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
