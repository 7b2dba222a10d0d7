"""Isomorphism-free generation of connected graphs by vertex augmentation.

Every connected graph on n >= 2 vertices has a non-cut vertex, so each one arises
from a connected graph on n - 1 vertices by adding a vertex with a nonempty
neighbourhood. Minimum girth is hereditary under that deletion, which lets the
girth filter prune parents too.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .canon import canonical_graph, canonical_form
from .graph import Graph, distance_matrix
from .graph6 import parse_graph6

DEFAULT_MAX_ORDER = 9
HARD_MAX_ORDER = 10

# connected graphs on n = 1..10 vertices (OEIS A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571}


def _children(parent: Graph, min_girth: Optional[int]) -> Iterator[Graph]:
    n = parent.order
    dist = distance_matrix(parent) if min_girth else None
    masks = list(parent.masks)
    for mask in range(1, 1 << n):
        nbrs = [v for v in range(n) if mask >> v & 1]
        if dist is not None and any(dist[a][b] + 2 < min_girth for a, b in combinations(nbrs, 2)):
            continue
        child = masks + [mask]
        for v in nbrs:
            child[v] |= 1 << n
        yield Graph.from_adjacency_masks(child)


@lru_cache(maxsize=None)
def _level(n: int, min_girth: Optional[int]) -> tuple[str, ...]:
    if n == 1:
        return (canonical_form(Graph(1)),)
    seen: dict[str, None] = {}
    for text in _level(n - 1, min_girth):
        for child in _children(parse_graph6(text), min_girth):
            seen.setdefault(canonical_form(child), None)
    return tuple(seen)


def connected_graph6(
    n: int, min_girth: Optional[int] = None, *, max_order: int = DEFAULT_MAX_ORDER, forests: bool = False
) -> tuple[str, ...]:
    """Canonical graph6 strings, one per isomorphism class of connected graphs of order ``n``.

    ``min_girth`` keeps only graphs that have a cycle and girth at least that value; trees
    are added back with ``forests=True``. Without ``min_girth`` every connected graph is returned.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > min(max_order, HARD_MAX_ORDER):
        raise ValueError(f"order {n} above enumeration bound {min(max_order, HARD_MAX_ORDER)}")
    if min_girth is not None and min_girth <= 3:
        min_girth = None
    level = _level(n, min_girth)
    if min_girth is None or forests:
        return level
    # trees stay in the generation tree as parents but are not part of the answer
    return tuple(t for t in level if parse_graph6(t).size >= n)


def enumerate_connected(
    n: int, min_girth: Optional[int] = None, *, max_order: int = DEFAULT_MAX_ORDER, forests: bool = False
) -> Iterator[Graph]:
    for text in connected_graph6(n, min_girth, max_order=max_order, forests=forests):
        yield parse_graph6(text)


def enumerate_connected_bruteforce(n: int) -> list[Graph]:
    """All labelled graphs on n <= 7 vertices filtered to connected ones, deduplicated by canonical form.

    Independent of the augmentation path; used as a cross-check.
    """
    if n > 7:
        raise ValueError("brute force enumeration limited to n <= 7")
    from .graph import is_connected

    pairs = list(combinations(range(n), 2))
    seen: dict[str, Graph] = {}
    for bits in range(1 << len(pairs)):
        g = Graph(n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1))
        if is_connected(g):
            seen.setdefault(canonical_form(g), canonical_graph(g))
    return list(seen.values())
