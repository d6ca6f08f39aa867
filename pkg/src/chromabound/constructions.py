"""Graph families and certificate colourings.

Balanced bipartite products ``G1 x| G2`` live on ``V1 x V2  u  U1 x U2``. With
``r = |V1|`` the product vertex ``(v_a, v_j)`` gets index ``2 j r + a`` and
``(u_a, u_j)`` gets ``(2 j + 1) r + a`` (0-based ``a``, ``j``), so the
adjacency matrix comes out directly in the block layout ``V~_1, U~_1, V~_2, ...``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from .catalog import named  # noqa: F401  (re-exported)
from .errors import GraphError
from .graph import Graph, bfs_distances
from .spectral import DEFAULT_TOL, Spectrum


# --- basic families -------------------------------------------------------------------

def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both sides of a complete bipartite graph must be non-empty")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


# --- balanced bipartite product ---------------------------------------------------------

@dataclass(frozen=True)
class BipartiteOrdered:
    """Balanced bipartite graph with ordered sides ``V`` and ``U`` in matching order."""

    graph: Graph
    V: tuple[int, ...]
    U: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.V) != len(self.U):
            raise GraphError(f"sides differ in size: |V|={len(self.V)}, |U|={len(self.U)}")
        if sorted(self.V + self.U) != list(range(self.graph.n)):
            raise GraphError("V and U must partition the vertex set")
        side = set(self.V)
        for a, b in self.graph.edges:
            if (a in side) == (b in side):
                raise GraphError(f"edge {(a, b)} does not cross the bipartition")
        for j, (v, u) in enumerate(zip(self.V, self.U)):
            if not self.graph.has_edge(v, u):
                raise GraphError(f"ordering is not matching: (v_{j + 1}, u_{j + 1}) is not an edge")

    @property
    def r(self) -> int:
        return len(self.V)

    def biadjacency(self) -> np.ndarray:
        """``B[i, j] = 1`` iff ``(v_i, u_j)`` is an edge."""
        return np.array([[int(self.graph.has_edge(v, u)) for u in self.U] for v in self.V], dtype=np.int64)


def cycle_bipartite(q: int) -> BipartiteOrdered:
    """C_q traversed as v_1, u_1, v_2, u_2, ...: edges (v_j, u_j) and (u_j, v_{j+1})."""
    if q < 4 or q % 2:
        raise GraphError(f"need an even cycle length >= 4, got {q}")
    g = cycle(q)
    return BipartiteOrdered(g, tuple(range(0, q, 2)), tuple(range(1, q, 2)))


def _block_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Adjacency matrix assembled from the biadjacency blocks ``a`` (first factor) and ``b`` (second)."""
    r, rr = a.shape[0], b.shape[0]
    eye = np.eye(r, dtype=np.int64)
    big = np.zeros((2 * r * rr, 2 * r * rr), dtype=np.int64)
    for i in range(rr):
        for j in range(rr):
            block = a if i == j else b[i, j] * eye
            vi, uj = 2 * i * r, (2 * j + 1) * r
            big[vi:vi + r, uj:uj + r] = block
            big[uj:uj + r, vi:vi + r] = block.T
    return big


def balanced_bipartite_product(g1: BipartiteOrdered, g2: BipartiteOrdered, check: bool = True) -> Graph:
    r, rr = g1.r, g2.r
    pos1 = {x: i for i, x in enumerate(g1.V)} | {x: i for i, x in enumerate(g1.U)}
    pos2 = {x: i for i, x in enumerate(g2.V)} | {x: i for i, x in enumerate(g2.U)}
    vside1, vside2 = set(g1.V), set(g2.V)

    def vv(a: int, j: int) -> int:
        return 2 * j * r + a

    def uu(a: int, j: int) -> int:
        return (2 * j + 1) * r + a

    edges = set()
    for x, y in g2.graph.edges:  # (v_a, v2)(u_a, u2) for (v2, u2) in E2
        v2, u2 = (x, y) if x in vside2 else (y, x)
        for a in range(r):
            edges.add(tuple(sorted((vv(a, pos2[v2]), uu(a, pos2[u2])))))
    for x, y in g1.graph.edges:  # (v1, v_j)(u1, u_j) for (v1, u1) in E1
        v1, u1 = (x, y) if x in vside1 else (y, x)
        for j in range(rr):
            edges.add(tuple(sorted((vv(pos1[v1], j), uu(pos1[u1], j)))))
    h = Graph.from_edges(2 * r * rr, edges)
    if check:
        expected = _block_matrix(g1.biadjacency(), g2.biadjacency())
        if not np.array_equal(h.adjacency_matrix(), expected):
            raise AssertionError("product adjacency does not match the block form")
    return h


def product_vertex(r: int, side: str, a: int, j: int) -> int:
    """Index of ``(v_a, v_j)`` (side 'v') or ``(u_a, u_j)`` (side 'u'), 1-based ``a`` and ``j``."""
    if side not in ("v", "u"):
        raise ValueError("side must be 'v' or 'u'")
    return (2 * (j - 1) + (side == "u")) * r + (a - 1)


def cycle_product(q: int, q2: int) -> Graph:
    """C_q x| C_q2."""
    return balanced_bipartite_product(cycle_bipartite(q), cycle_bipartite(q2))


def guo_mohar(k: int) -> Graph:
    """GM(k) = C_4 x| C_2k."""
    if k < 2:
        raise GraphError(f"Guo-Mohar graphs need k >= 2, got {k}")
    return cycle_product(4, 2 * k)


def gm_spectrum_formula(k: int, tol: float = DEFAULT_TOL) -> Spectrum:
    if k < 2:
        raise GraphError(f"Guo-Mohar graphs need k >= 2, got {k}")
    vals = [1.0] * k + [-1.0] * k
    for j in range(k):
        s = math.sqrt(5 + 4 * math.cos(2 * math.pi * j / k))
        vals += [s, -s]
    return Spectrum.from_eigenvalues(vals, tol)


def minus_one_eigenvector(q: int, q2: int) -> np.ndarray:
    """Vector with u_i = -v_i = (1, -1, ..., 1, -1) on every block of C_q x| C_q2."""
    _require_mod4(q, q2)
    r, rr = q // 2, q2 // 2
    alt = np.array([(-1.0) ** a for a in range(r)])
    x = np.empty(2 * r * rr)
    for j in range(rr):
        x[2 * j * r: (2 * j + 1) * r] = -alt
        x[(2 * j + 1) * r: (2 * j + 2) * r] = alt
    return x


# --- certificate colourings ---------------------------------------------------------------

@dataclass(frozen=True)
class EdgeColouring:
    t: int
    colours: tuple[int, ...]  # indexed by the graph's canonical edge order

    @property
    def num_colours(self) -> int:
        return len(set(self.colours))

    @classmethod
    def from_map(cls, g: Graph, t: int, mapping: dict[tuple[int, int], int]) -> "EdgeColouring":
        missing = [e for e in g.edges if e not in mapping]
        if missing:
            raise GraphError(f"colouring is partial: edge {missing[0]} has no colour")
        return cls(t, tuple(mapping[e] for e in g.edges))

    def to_json(self, g: Graph) -> str:
        return json.dumps({"t": self.t, "colours": [[u, v, c] for (u, v), c in zip(g.edges, self.colours)]})

    @classmethod
    def from_json(cls, g: Graph, text: str) -> "EdgeColouring":
        data = json.loads(text)
        mapping = {}
        for u, v, c in data["colours"]:
            mapping[(min(u, v), max(u, v))] = int(c)
        return cls.from_map(g, int(data["t"]), mapping)


def _require_mod4(q: int, q2: int) -> None:
    if q % 4 or q2 % 4 or q < 4 or q2 < 4:
        raise GraphError(f"need q and q' to be positive multiples of 4, got ({q}, {q2})")


def six_colouring_cycles(q: int, q2: int) -> tuple[Graph, EdgeColouring]:
    """Distance-2 edge colouring of C_q x| C_q2 with six colours (q, q' multiples of 4)."""
    _require_mod4(q, q2)
    h = cycle_product(q, q2)
    r, rr = q // 2, q2 // 2
    V = lambda a, j: product_vertex(r, "v", (a - 1) % r + 1, (j - 1) % rr + 1)  # noqa: E731
    U = lambda a, j: product_vertex(r, "u", a, j)  # noqa: E731
    col: dict[tuple[int, int], int] = {}

    def put(x: int, y: int, c: int) -> None:
        e = (min(x, y), max(x, y))
        if not h.has_edge(*e):
            raise AssertionError(f"colour formula addresses the non-edge {e}")
        col[e] = c % 6

    for i in range(1, r + 1):
        for j in range(1, rr + 1):
            put(V(i, j), U(i, j), 3 * i + 3 * j)
            put(V(i + 1, j), U(i, j), 1 + 3 * i)
            put(V(i, j + 1), U(i, j), 2 + 3 * j)
    return h, EdgeColouring.from_map(h, 2, col)


def twelve_colouring_gm(k: int) -> tuple[Graph, EdgeColouring]:
    """Distance-3 edge colouring of GM(k) with twelve colours; ``k`` must be even."""
    if k < 2 or k % 2:
        raise GraphError(f"the twelve-colouring is defined for GM(k) with even k >= 2, got k={k}")
    h = guo_mohar(k)
    r, rr = 2, k
    V = lambda a, j: product_vertex(r, "v", a, (j - 1) % rr + 1)  # noqa: E731
    U = lambda a, j: product_vertex(r, "u", a, j)  # noqa: E731
    col: dict[tuple[int, int], int] = {}

    def put(x: int, y: int, c: int) -> None:
        e = (min(x, y), max(x, y))
        if not h.has_edge(*e):
            raise AssertionError(f"colour formula addresses the non-edge {e}")
        col[e] = c % 12

    for j in range(1, rr + 1):
        for i in (1, 2):
            put(V(i, j), U(i, j), i + 6 * j)
            put(V(i, j + 1), U(i, j), 4 + i + 6 * j)
        put(V(2, j), U(1, j), 3 + 6 * j)
        put(V(1, j), U(2, j), 4 + 6 * j)
    return h, EdgeColouring.from_map(h, 3, col)


def balbiprod_tight_predicate(q: int, q2: int, tol: float = 1e-7) -> bool:
    """True iff -2 is not an eigenvalue of C_q x| C_q2, or it is and q q' is not divisible by 5."""
    from .spectral import adjacency_spectrum

    _require_mod4(q, q2)
    has_minus_two = adjacency_spectrum(cycle_product(q, q2)).contains(-2.0, tol)
    return (not has_minus_two) or (q * q2) % 5 != 0


# --- extremal examples ---------------------------------------------------------------------

def t_critical_example(n: int, t: int) -> tuple[Graph, int]:
    """The graph G_t built around K_n, and its distinguished vertex w'.

    Layout: K_n on 0..n-1, then u_1..u_t, v_1..v_t, w_1..w_t, and w' last.
    """
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    if t < 2:
        raise GraphError(f"need t >= 2, got {t}")
    u = [n + i for i in range(t)]
    v = [n + t + i for i in range(t)]
    w = [n + 2 * t + i for i in range(t)]
    w_prime = n + 3 * t
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges += [(u[i], u[i + 1]) for i in range(t - 1)] + [(v[i], v[i + 1]) for i in range(t - 1)]
    edges += [(u[0], a) for a in range(n)] + [(v[-1], a) for a in range(n)]
    edges += [(w[i], u[i]) for i in range(t)] + [(w[i], v[i]) for i in range(t)]
    edges += [(w_prime, u[-1]), (w_prime, v[0])]
    return Graph.from_edges(n + 3 * t + 1, edges), w_prime


def distance_degree(g: Graph, v: int, t: int) -> int:
    """Number of vertices at distance 1..t from ``v``."""
    return len(bfs_distances(g, v, t)) - 1


# --- strongly regular graphs -------------------------------------------------------------

@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        if min(self.n, self.k, self.lam, self.mu) < 0:
            raise GraphError("SRG parameters must be non-negative")
        if self.k * (self.k - self.lam - 1) != (self.n - self.k - 1) * self.mu:
            raise GraphError(f"infeasible SRG parameters {self.astuple()}: k(k-lambda-1) != (n-k-1)mu")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


def srg_valency_formula(p: SrgParams) -> int:
    k, lam, mu = p.k, p.lam, p.mu
    return 2 * k * k + (1 + lam) * (mu - 1) - k * (1 + lam + mu)


def srg_wilf(p: SrgParams) -> int:
    """Wilf bound on chi'_2 from the SRG parameters alone.

    The count of edges within distance 2 behind this formula is exact for
    triangle-free SRGs (lambda = 0); with triangles it overcounts.
    """
    return srg_valency_formula(p) + 1


def srg_parameters(g: Graph) -> SrgParams | None:
    """Parameters of ``g`` if it is strongly regular (and neither complete nor empty), else None."""
    from .graph import regularity

    k = regularity(g)
    if k is None or k == 0 or k == g.n - 1:
        return None
    a = g.adjacency_matrix()
    a2 = a @ a
    adj = a.astype(bool)
    off = ~adj & ~np.eye(g.n, dtype=bool)
    lams, mus = set(a2[adj].tolist()), set(a2[off].tolist())
    if len(lams) != 1 or len(mus) != 1:
        return None
    return SrgParams(g.n, k, lams.pop(), mus.pop())


def e6_parameters(q: int) -> SrgParams:
    if q < 2:
        raise GraphError(f"need q >= 2, got {q}")
    n = (q ** 12 - 1) * (q ** 9 - 1) // ((q ** 4 - 1) * (q - 1))
    k = q * (q ** 3 + 1) * (q ** 8 - 1) // (q - 1)
    lam = k - 1 - q ** 7 * (q ** 5 - 1) // (q - 1)
    mu = (q ** 3 + 1) * (q ** 4 - 1) // (q - 1)
    return SrgParams(n, k, lam, mu)


def e6_wilf_ratio_exact(q: int) -> Fraction:
    p = e6_parameters(q)
    return Fraction(srg_valency_formula(p), p.k * p.k)


def e6_wilf_ratio(q: int) -> float:
    return float(e6_wilf_ratio_exact(q))

