"""Adjacency spectra with tolerance-grouped multiplicities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphError
from .graph import Graph, regularity

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues in decreasing order, each with its multiplicity."""

    values: tuple[tuple[float, int], ...]
    tol: float = DEFAULT_TOL

    @classmethod
    def from_eigenvalues(cls, eigenvalues: Iterable[float], tol: float = DEFAULT_TOL) -> "Spectrum":
        """Group sorted eigenvalues whose consecutive gaps are at most ``tol``."""
        if tol <= 0:
            raise ValueError("grouping tolerance must be positive")
        ev = sorted((float(x) for x in eigenvalues), reverse=True)
        groups: list[list[float]] = []
        for x in ev:
            if groups and groups[-1][-1] - x <= tol:
                groups[-1].append(x)
            else:
                groups.append([x])
        return cls(tuple((float(np.mean(g)), len(g)) for g in groups), tol)

    @property
    def distinct(self) -> list[float]:
        return [v for v, _ in self.values]

    @property
    def multiplicities(self) -> list[int]:
        return [k for _, k in self.values]

    @property
    def dim(self) -> int:
        return sum(self.multiplicities)

    @property
    def d(self) -> int:
        """Number of distinct eigenvalues minus one (the ``d`` in theta_0 > ... > theta_d)."""
        return len(self.values) - 1

    def eigenvalues(self) -> np.ndarray:
        """All eigenvalues, repeated by multiplicity, in decreasing order."""
        return np.repeat(self.distinct, self.multiplicities).astype(float)

    def contains(self, x: float, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return any(abs(v - x) <= tol for v in self.distinct)

    def multiplicity(self, x: float, tol: float | None = None) -> int:
        tol = self.tol if tol is None else tol
        return sum(k for v, k in self.values if abs(v - x) <= tol)

    def to_json(self) -> list[list[float]]:
        return [[v, k] for v, k in self.values]

    def __repr__(self) -> str:
        body = ", ".join(f"{v:.6g}" + (f"^{k}" if k > 1 else "") for v, k in self.values)
        return f"Spectrum({{{body}}})"


def adjacency_eigenvalues(g: Graph) -> np.ndarray:
    """Eigenvalues of the adjacency matrix, decreasing."""
    if g.n == 0:
        raise GraphError("the empty graph has no spectrum")
    return np.linalg.eigvalsh(g.adjacency_matrix(float))[::-1]


def adjacency_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return Spectrum.from_eigenvalues(adjacency_eigenvalues(g), tol)


def line_graph_spectrum_regular(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    """Spectrum of L(g) for a k-regular ``g``: shift by k - 2 and pad with -2."""
    k = regularity(g)
    if k is None:
        raise GraphError("line-graph spectrum shortcut needs a regular graph")
    if g.m < g.n:
        raise GraphError(f"shortcut needs m >= n (got m={g.m}, n={g.n})")
    shifted = adjacency_eigenvalues(g) + (k - 2)
    return Spectrum.from_eigenvalues(np.concatenate([shifted, np.full(g.m - g.n, -2.0)]), tol)


def interlacing_check(inner: Spectrum | Sequence[float], outer: Spectrum | Sequence[float],
                      tol: float = 1e-7) -> bool:
    """Cauchy interlacing: ``outer[i] >= inner[i] >= outer[i + N - p]`` for all ``i``."""
    a = inner.eigenvalues() if isinstance(inner, Spectrum) else np.sort(np.asarray(inner, float))[::-1]
    b = outer.eigenvalues() if isinstance(outer, Spectrum) else np.sort(np.asarray(outer, float))[::-1]
    p, big_n = len(a), len(b)
    if p > big_n:
        raise ValueError(f"inner spectrum has dimension {p} > outer dimension {big_n}")
    return bool(np.all(b[:p] + tol >= a) and np.all(a + tol >= b[big_n - p:]))
