"""Simple undirected graphs, line graphs, powers and edge distances.

Edges are stored as sorted ``(u, v)`` pairs with ``u < v`` in lexicographic
order; the position of an edge in ``Graph.edges`` is its edge index and is the
vertex label it receives in :func:`line_graph`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .errors import GraphError

Edge = tuple[int, int]

#: Distance reported between edges lying in different components.
INFINITE = math.inf


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {(u, v)} is not a sorted pair of vertices below n={self.n}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge {(u, v)}")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges must be in canonical (lexicographic) order; use Graph.from_edges")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Build a graph from arbitrary endpoint pairs, rejecting loops and repeats."""
        canon = []
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            canon.append((u, v) if u < v else (v, u))
        if len(set(canon)) != len(canon):
            dup = next(e for e in canon if canon.count(e) > 1)
            raise GraphError(f"duplicate edge {dup}")
        return cls(n, tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbours)

    def index_of(self, e: Iterable[int]) -> int:
        u, v = sorted(int(x) for x in e)
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise GraphError(f"{(u, v)} is not an edge of the graph") from None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbours[u]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self.edges:
            idx = np.array(self.edges)
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        return a

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        perm = list(perm)
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def line_graph(g: Graph) -> Graph:
    """Line graph with vertex ``i`` standing for ``g.edges[i]``."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for star in incident:
        for a in range(len(star)):
            for b in range(a + 1, len(star)):
                pairs.add((star[a], star[b]))
    return Graph(g.m, tuple(sorted(pairs)))


def bfs_distances(g: Graph, source: int, limit: Optional[int] = None) -> dict[int, int]:
    """Distances from ``source`` to every vertex reachable within ``limit`` steps."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if limit is not None and d >= limit:
            continue
        for y in g.neighbours[x]:
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


def power_graph(g: Graph, t: int) -> Graph:
    """The ``t``-th power: ``u ~ v`` iff ``1 <= dist(u, v) <= t``."""
    if t < 1:
        raise GraphError(f"power must be a positive integer, got {t}")
    if t == 1:
        return g
    pairs = []
    for u in range(g.n):
        for v in bfs_distances(g, u, t):
            if v > u:
                pairs.append((u, v))
    return Graph(g.n, tuple(sorted(pairs)))


def edge_distance(g: Graph, e: Iterable[int], f: Iterable[int]) -> float:
    """Distance between two edges, i.e. their distance as vertices of L(g).

    Incident edges are at distance 1; edges in different components are at
    distance :data:`INFINITE`.
    """
    i, j = g.index_of(e), g.index_of(f)
    if i == j:
        return 0
    # Multi-source BFS over vertices: an edge touching a vertex at vertex
    # distance d from e's endpoints is at edge distance d + 1.
    dist = {x: 0 for x in g.edges[i]}
    queue = deque(g.edges[i])
    while queue:
        x = queue.popleft()
        for y in g.neighbours[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    a, b = g.edges[j]
    reach = [dist[x] for x in (a, b) if x in dist]
    if not reach:
        return INFINITE
    return min(reach) + 1


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree of the empty graph is undefined")
    return max(g.degrees)


def regularity(g: Graph) -> Optional[int]:
    """Common degree ``k`` if ``g`` is ``k``-regular, else ``None``."""
    if g.n == 0:
        return None
    k = g.degrees[0]
    return k if all(d == k for d in g.degrees) else None


def walk_count_diagonals(g: Graph, t: int) -> np.ndarray:
    """Integer array of shape ``(t + 1, n)`` holding ``diag(A**l)`` for ``l = 0..t``."""
    a = g.adjacency_matrix(np.int64)
    out = np.empty((t + 1, g.n), dtype=np.int64)
    power = np.eye(g.n, dtype=np.int64)
    for ell in range(t + 1):
        out[ell] = np.diag(power)
        if ell < t:
            power = power @ a
    return out


def is_t_partially_walk_regular(g: Graph, t: int, tol: float = 0.0) -> bool:
    """True iff every vertex has the same number of closed walks of each length ``<= t``.

    Walk counts are exact integers, so ``tol`` has no effect.
    """
    if t < 1:
        raise GraphError(f"t must be a positive integer, got {t}")
    return first_walk_irregular_power(g, t) is None


def first_walk_irregular_power(g: Graph, t: int) -> Optional[int]:
    """Smallest ``l <= t`` with non-constant ``diag(A**l)``, or ``None``."""
    if g.n == 0:
        return None
    diags = walk_count_diagonals(g, t)
    for ell in range(t + 1):
        if np.any(diags[ell] != diags[ell][0]):
            return ell
    return None
