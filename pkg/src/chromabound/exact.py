"""Exact distance-t chromatic index by colouring L(G)^t.

The solver brackets the chromatic number between a greedy clique and a DSATUR
colouring, then runs a DSATUR-ordered branch-and-bound for each smaller
colour count until one is proven impossible. Adjacency is held as Python int
bitsets.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .constructions import EdgeColouring
from .errors import GraphError
from .graph import Graph, line_graph, power_graph

DEFAULT_BUDGET_SECS = 300.0
BUDGET_ENV = "CHROMABOUND_BUDGET_SECS"
BRUTE_FORCE_MAX_VERTICES = 14


def default_budget() -> float:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET_SECS
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be a number of seconds, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
    return value


class Status(str, Enum):
    EXACT = "Exact"
    TIMED_OUT = "TimedOut"


@dataclass
class ExactResult:
    value: Optional[int]
    status: Status
    lower: int
    upper: int
    elapsed: float
    colouring: Optional[list[int]] = field(default=None, repr=False)

    @property
    def solved(self) -> bool:
        return self.status is Status.EXACT

    def display(self) -> str:
        return str(self.value) if self.solved else "time"

    def to_dict(self) -> dict:
        return {"value": self.value, "status": self.status.value, "lower": self.lower,
                "upper": self.upper, "elapsed": round(self.elapsed, 6)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# --- validation -----------------------------------------------------------------------------

@dataclass(frozen=True)
class ColouringCheck:
    valid: bool
    witness: Optional[tuple[tuple[int, int], tuple[int, int], int]] = None  # (e, f, shared colour)

    def __bool__(self) -> bool:
        return self.valid


def validate_colouring(g: Graph, c: EdgeColouring) -> ColouringCheck:
    """Check that edges within distance ``c.t`` never share a colour."""
    if len(c.colours) != g.m:
        raise GraphError(f"colouring covers {len(c.colours)} edges, graph has {g.m}")
    if c.t < 1:
        raise GraphError(f"distance parameter must be positive, got {c.t}")
    for i, j in power_graph(line_graph(g), c.t).edges:
        if c.colours[i] == c.colours[j]:
            return ColouringCheck(False, (g.edges[i], g.edges[j], c.colours[i]))
    return ColouringCheck(True)


def is_proper_vertex_colouring(gp: Graph, colours: Sequence[int]) -> bool:
    return len(colours) == gp.n and all(colours[u] != colours[v] for u, v in gp.edges)


# --- heuristics ---------------------------------------------------------------------------------

def _bitsets(gp: Graph) -> list[int]:
    adj = [0] * gp.n
    for u, v in gp.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _popcount(x: int) -> int:
    return bin(x).count("1")


def greedy_clique(gp: Graph) -> list[int]:
    """Largest of the cliques grown greedily from each vertex (by degree within the candidates)."""
    adj = _bitsets(gp)
    best: list[int] = []
    for start in range(gp.n):
        clique = [start]
        cand = adj[start]
        while cand:
            pick, pick_deg = -1, -1
            bits = cand
            while bits:
                low = bits & -bits
                v = low.bit_length() - 1
                deg = _popcount(adj[v] & cand)
                if deg > pick_deg:
                    pick, pick_deg = v, deg
                bits ^= low
            clique.append(pick)
            cand &= adj[pick]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur(gp: Graph) -> list[int]:
    """DSATUR greedy colouring (ties: higher degree, then lower index)."""
    n = gp.n
    adj = _bitsets(gp)
    colour = [-1] * n
    seen = [0] * n  # bitmask of neighbour colours
    degree = [_popcount(a) for a in adj]
    for _ in range(n):
        v = max((x for x in range(n) if colour[x] < 0), key=lambda x: (_popcount(seen[x]), degree[x], -x))
        c = 0
        while seen[v] >> c & 1:
            c += 1
        colour[v] = c
        bits = adj[v]
        while bits:
            low = bits & -bits
            seen[low.bit_length() - 1] |= 1 << c
            bits ^= low
    return colour


# --- branch and bound ---------------------------------------------------------------------------

class _Timeout(Exception):
    pass


def _k_colouring(adj: list[int], k: int, clique: Sequence[int], deadline: float) -> Optional[list[int]]:
    """A proper colouring with at most ``k`` colours, or None if none exists.

    The clique is precoloured 0..|clique|-1; afterwards a new colour may only be
    the smallest unused one, which removes colour permutations from the search.
    """
    n = len(adj)
    colour = [-1] * n
    counts = [[0] * k for _ in range(n)]
    forbidden = [0] * n
    degree = [_popcount(a) for a in adj]
    nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]
    full = (1 << k) - 1

    def assign(v: int, c: int) -> None:
        colour[v] = c
        for u in nbrs[v]:
            row = counts[u]
            row[c] += 1
            if row[c] == 1:
                forbidden[u] |= 1 << c

    def unassign(v: int, c: int) -> None:
        colour[v] = -1
        for u in nbrs[v]:
            row = counts[u]
            row[c] -= 1
            if row[c] == 0:
                forbidden[u] &= ~(1 << c)

    for c, v in enumerate(clique):
        assign(v, c)
    uncoloured = set(range(n)) - set(clique)
    nodes = 0

    def search(used: int) -> bool:
        nonlocal nodes
        if not uncoloured:
            return True
        nodes += 1
        if nodes & 1023 == 0 and time.monotonic() > deadline:
            raise _Timeout
        best, best_key = -1, (-1, -1)
        for x in uncoloured:
            sat = _popcount(forbidden[x] & full)
            if sat == k:
                return False
            key = (sat, degree[x])
            if key > best_key:
                best, best_key = x, key
        v = best
        limit = min(k, used + 1)
        choices = ~forbidden[v] & ((1 << limit) - 1)
        uncoloured.discard(v)
        while choices:
            low = choices & -choices
            c = low.bit_length() - 1
            assign(v, c)
            if search(max(used, c + 1)):
                return True
            unassign(v, c)
            choices ^= low
        uncoloured.add(v)
        return False

    import sys

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        if search(len(clique)):
            return colour
        return None
    finally:
        sys.setrecursionlimit(limit)


def chromatic_number(gp: Graph, budget: Optional[float] = None) -> ExactResult:
    """Exact chromatic number with a time budget (seconds)."""
    start = time.monotonic()
    budget = default_budget() if budget is None else budget
    deadline = start + budget
    if gp.n == 0:
        return ExactResult(0, Status.EXACT, 0, 0, 0.0, [])
    clique = greedy_clique(gp)
    best = dsatur(gp)
    lower, upper = len(clique), max(best) + 1
    adj = _bitsets(gp)
    try:
        while upper > lower:
            found = _k_colouring(adj, upper - 1, clique, deadline)
            if found is None:
                lower = upper
            else:
                best, upper = found, max(found) + 1
    except _Timeout:
        return ExactResult(None, Status.TIMED_OUT, lower, upper, time.monotonic() - start, best)
    return ExactResult(upper, Status.EXACT, upper, upper, time.monotonic() - start, best)


def exact_chi_t_prime(g: Graph, t: int, budget: Optional[float] = None) -> ExactResult:
    """chi'_t(g) as the chromatic number of L(g)^t."""
    if t < 1:
        raise GraphError(f"t must be a positive integer, got {t}")
    if g.m == 0:
        return ExactResult(0, Status.EXACT, 0, 0, 0.0, [])
    return chromatic_number(power_graph(line_graph(g), t), budget)


def exact_chi_t(g: Graph, t: int, budget: Optional[float] = None) -> ExactResult:
    """Vertex distance-t chromatic number chi_t(g) = chi(g^t)."""
    return chromatic_number(power_graph(g, t), budget)


def colouring_from_result(g: Graph, t: int, result: ExactResult) -> EdgeColouring:
    if result.colouring is None:
        raise ValueError("result carries no colouring")
    return EdgeColouring(t, tuple(result.colouring))


# --- independent oracle ------------------------------------------------------------------------

def brute_force_chi(gp: Graph, cap: int) -> int:
    """Smallest ``c <= cap`` admitting a proper colouring, by plain exhaustive search."""
    if gp.n > BRUTE_FORCE_MAX_VERTICES:
        raise GraphError(f"brute force is limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {gp.n}")
    if gp.n == 0:
        return 0
    earlier = [[u for u in gp.neighbours[v] if u < v] for v in range(gp.n)]
    for c in range(1, cap + 1):
        colour = [0] * gp.n

        def extend(v: int) -> bool:
            if v == gp.n:
                return True
            for x in range(c):
                if all(colour[u] != x for u in earlier[v]):
                    colour[v] = x
                    if extend(v + 1):
                        return True
            return False

        if extend(0):
            return c
    raise ValueError(f"no proper colouring with at most {cap} colours")
