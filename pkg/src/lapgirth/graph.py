"""Simple undirected graphs on vertices 0..n-1 and their structural queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Edges are stored as sorted pairs ``(u, v)`` with ``u < v``."""

    order: int
    edges: frozenset[Edge]
    _adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise GraphError(f"negative order {order}")
        normed = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            normed.add(_norm(u, v))
        adj = [0] * order
        for u, v in normed:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(normed))
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_adjacency_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        return cls(len(masks), ((u, v) for u, m in enumerate(masks) for v in range(u + 1, len(masks)) if m >> v & 1))

    @property
    def n(self) -> int:
        return self.order

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, ``masks[v] >> u & 1`` iff ``uv`` is an edge."""
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        m = self._adj[v]
        return [u for u in range(self.order) if m >> u & 1]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._adj]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.sorted_edges()})"


# --- connectivity -----------------------------------------------------------


def _components_masks(g: Graph, alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = g.masks[v] & alive & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph) -> list[list[int]]:
    return [[v for v in range(g.order) if c >> v & 1] for c in _components_masks(g, (1 << g.order) - 1)]


def component_count(g: Graph) -> int:
    return len(_components_masks(g, (1 << g.order) - 1))


def is_connected(g: Graph) -> bool:
    return component_count(g) <= 1


def distances_from(g: Graph, root: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.order
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list[Optional[int]]]:
    return [distances_from(g, v) for v in range(g.order)]


def diameter(g: Graph) -> Optional[int]:
    """Largest distance; None for a disconnected graph."""
    best = 0
    for row in distance_matrix(g):
        if any(d is None for d in row):
            return None
        best = max(best, max(row))
    return best


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest.

    A non-tree edge met during BFS from ``root`` at levels l1, l2 closes a walk of
    length l1 + l2 + 1 that contains a cycle no longer than it; a shortest cycle
    through ``root`` is found exactly this way, so the minimum over roots is exact.
    """
    best: Optional[int] = None
    n = g.order
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def cut_edges(g: Graph) -> list[Edge]:
    base = component_count(g)
    return [e for e in g.sorted_edges() if component_count(delete_edges(g, [e])) > base]


# --- statistics -------------------------------------------------------------


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    second_degree: int
    pendant_count: int
    quasi_pendant_count: int
    vertex_connectivity: Optional[int]
    max_edge_degree_sum: Optional[int]
    second_edge_degree_sum: Optional[int]


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects ``g``; ``n - 1`` for complete graphs.

    Brute force over vertex subsets by increasing size (fine for n <= 12).
    """
    n = g.order
    full = (1 << n) - 1
    if len(_components_masks(g, full)) > 1:
        return 0
    for size in range(1, n - 1):
        for cut in combinations(range(n), size):
            alive = full
            for v in cut:
                alive &= ~(1 << v)
            if len(_components_masks(g, alive)) > 1:
                return size
    return max(n - 1, 0)


def stats(g: Graph) -> GraphStats:
    deg = g.degrees()
    ordered = sorted(deg, reverse=True)
    delta = ordered[0] if ordered else 0
    d2 = ordered[1] if len(ordered) > 1 else 0
    pendants = {v for v in range(g.order) if deg[v] == 1}
    quasi = {u for v in pendants for u in g.neighbors(v)}
    r = s = None
    if g.size >= 2:
        sums = sorted((deg[u] + deg[v] for u, v in g.edges), reverse=True)
        r, s = sums[0], sums[1]
    kappa = vertex_connectivity(g) if is_connected(g) else None
    return GraphStats(delta, d2, len(pendants), len(quasi), kappa, r, s)


# --- constructions ----------------------------------------------------------


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for order {g.order}")


def complement(g: Graph) -> Graph:
    return Graph(g.order, (e for e in combinations(range(g.order), 2) if e not in g.edges))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; the vertices of ``h`` are shifted by ``g.order``."""
    k = g.order
    return Graph(k + h.order, list(g.edges) + [(u + k, v + k) for u, v in h.edges])


def join(g: Graph, h: Graph) -> Graph:
    k = g.order
    cross = [(u, k + v) for u in range(k) for v in range(h.order)]
    return add_edges(union(g, h), cross)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in increasing order."""
    keep = sorted(set(vertices))
    for v in keep:
        _check_vertex(g, v)
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), ((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos))


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return induced(g, (u for u in range(g.order) if u != v))


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    drop = set()
    for u, v in edges:
        e = _norm(u, v)
        if e not in g.edges:
            raise GraphError(f"edge {e} not in graph")
        drop.add(e)
    return Graph(g.order, g.edges - drop)


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    new = set()
    for u, v in edges:
        _check_vertex(g, u)
        _check_vertex(g, v)
        e = _norm(u, v)
        if e in g.edges:
            raise GraphError(f"edge {e} already present")
        new.add(e)
    return Graph(g.order, g.edges | new)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.order)):
        raise GraphError("relabel needs a permutation of 0..n-1")
    return Graph(g.order, ((perm[u], perm[v]) for u, v in g.edges))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def star(s: int) -> Graph:
    """K_{1,s} with centre 0."""
    return complete_bipartite(1, s)
