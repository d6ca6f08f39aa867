"""Spectral bounds on the distance-t chromatic index.

All lower bounds work on the line graph L(G): its spectrum, and the diagonal
of ``p(A')`` for a real polynomial ``p`` of degree at most ``t``. The
diagonal is assembled from exact integer walk counts ``diag(A'**l)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from .errors import GraphError, InapplicableError
from .graph import Graph, line_graph, power_graph, regularity, walk_count_diagonals
from .spectral import DEFAULT_TOL, Spectrum, adjacency_eigenvalues, adjacency_spectrum

#: Slack added to "largest eigenvalue <= x" thresholds (ties go to inclusion).
THRESHOLD_SLACK = 1e-8
#: Slack used when rounding a real lower bound up to an integer.
CEIL_SLACK = 1e-9
#: Slack added before flooring ``m * ratio`` in the rounded Hoffman bounds.
FLOOR_SLACK = 1e-7


class Method(str, Enum):
    FIRST_INERTIAL = "FirstInertial"
    SECOND_INERTIAL = "SecondInertial"
    HOFFMAN_GENERAL = "HoffmanGeneral"
    HOFFMAN_REGULAR = "HoffmanRegular"
    CHI2_CLOSED = "Chi2Closed"
    CHI2_CLOSED_REGULAR = "Chi2ClosedRegular"
    CHI3_CLOSED_REGULAR = "Chi3ClosedRegular"
    WILF = "Wilf"

    @property
    def is_upper(self) -> bool:
        return self is Method.WILF


@dataclass(frozen=True)
class Poly:
    """Real polynomial ``c0 + c1 x + ... + ct x**t`` (degree at most ``t``)."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[float], t: Optional[int] = None) -> "Poly":
        """Monic product of ``(x - r)``, padded with zero coefficients to length ``t + 1``."""
        c = np.array([1.0])
        for r in roots:
            c = np.convolve(c, [-float(r), 1.0])
        coeffs = list(c)
        if t is not None:
            if len(coeffs) > t + 1:
                raise ValueError(f"{len(coeffs) - 1} roots exceed degree {t}")
            coeffs += [0.0] * (t + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @property
    def t(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out if out.ndim else float(out)

    def scaled(self, factor: float) -> "Poly":
        return Poly(tuple(factor * c for c in self.coeffs))

    def padded(self, t: int) -> "Poly":
        if t < self.t:
            raise ValueError("cannot pad to a smaller degree")
        return Poly(self.coeffs + (0.0,) * (t - self.t))


def diagonal_table(lg: Graph, t: int) -> np.ndarray:
    """``diag(A'**l)`` for ``l = 0..max(t, 3)``, as exact integers (rows are powers)."""
    return walk_count_diagonals(lg, max(t, 3))


@dataclass(frozen=True)
class DiagStats:
    """Per-edge diagonal of ``p(A')`` plus the extremes the bounds need."""

    diag: tuple[float, ...]
    W: float
    w: float
    delta3: Optional[int] = None
    line_regular: bool = False

    @classmethod
    def from_table(cls, table: np.ndarray, p: Poly) -> "DiagStats":
        if p.t >= len(table):
            raise ValueError(f"diagonal table has powers up to {len(table) - 1}, polynomial has degree {p.t}")
        coeffs = np.asarray(p.coeffs)
        diag = coeffs @ table[: p.t + 1].astype(float)
        delta3 = int(table[3].max()) if len(table) > 3 and table.shape[1] else None
        line_regular = len(table) > 2 and bool(np.all(table[2] == table[2][0])) if table.shape[1] else True
        return cls(tuple(float(x) for x in diag), float(diag.max()), float(diag.min()), delta3, line_regular)


@dataclass(frozen=True)
class BoundReport:
    method: Method
    raw: float
    integer_bound: int
    certificate: Optional[Poly] = None
    indices: dict[str, int] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        cert: dict[str, Any] = {}
        if self.certificate is not None:
            cert["poly"] = list(self.certificate.coeffs)
        if self.indices:
            cert["indices"] = dict(self.indices)
        out = {"method": self.method.value, "raw": self.raw, "integer_bound": self.integer_bound,
               "certificate": cert}
        if self.details:
            out["details"] = {k: (v if not isinstance(v, np.generic) else v.item()) for k, v in self.details.items()}
        return out


def _lower(method: Method, raw: float, **kw) -> BoundReport:
    return BoundReport(method, float(raw), math.ceil(raw - CEIL_SLACK), **kw)


@dataclass(frozen=True)
class LineData:
    """A graph together with its line graph, line spectrum and walk diagonals."""

    graph: Graph
    line: Graph
    spectrum: Spectrum
    table: np.ndarray

    @property
    def m(self) -> int:
        return self.graph.m

    def diag(self, p: Poly) -> DiagStats:
        return DiagStats.from_table(self.table, p)


@lru_cache(maxsize=64)
def line_data(g: Graph, t: int = 3, tol: float = DEFAULT_TOL) -> LineData:
    if g.m == 0:
        raise GraphError("graph has no edges; its line graph is empty")
    lg = line_graph(g)
    return LineData(g, lg, adjacency_spectrum(lg, tol), diagonal_table(lg, t))


def _eps(tol: float, *values) -> float:
    scale = max([1.0] + [float(np.max(np.abs(v))) for v in values if np.size(v)])
    return tol * scale


def _check_dim(spec_L: Spectrum, diag: DiagStats) -> None:
    if spec_L.dim != len(diag.diag):
        raise ValueError(f"spectrum has dimension {spec_L.dim} but diagonal has {len(diag.diag)} entries")


# --- polynomial-parameterised bounds ------------------------------------------------

def first_inertial(spec_L: Spectrum, p: Poly, diag: DiagStats, m: int,
                   tol: float = DEFAULT_TOL) -> BoundReport:
    """m / min(#{i : p(l_i) >= w'(p)}, #{i : p(l_i) <= W'(p)}), counted with multiplicity."""
    _check_dim(spec_L, diag)
    if m != spec_L.dim:
        raise ValueError(f"m={m} does not match spectrum dimension {spec_L.dim}")
    vals = p(spec_L.eigenvalues())
    eps = _eps(tol, vals, diag.W, diag.w)
    above = int(np.sum(vals >= diag.w - eps))
    below = int(np.sum(vals <= diag.W + eps))
    raw = m / min(above, below)
    return _lower(Method.FIRST_INERTIAL, raw, certificate=p,
                  details={"count_ge_w": above, "count_le_W": below, "W": diag.W, "w": diag.w})


def second_inertial(spec_L: Spectrum, p: Poly, walk_regular_ok: bool,
                    tol: float = DEFAULT_TOL) -> BoundReport:
    """1 + #{p(l_j) < 0} / #{p(l_j) > 0} for ``p`` with zero eigenvalue sum."""
    if not walk_regular_ok:
        raise InapplicableError("second inertial bound needs L(G) to be t-partially walk-regular")
    vals = p(spec_L.eigenvalues())
    total = float(np.sum(vals))
    if abs(total) > 1e-6 * spec_L.dim * max(1.0, float(np.max(np.abs(vals)))):
        raise InapplicableError(f"polynomial values must sum to zero over the spectrum (sum = {total:.3g})")
    eps = _eps(tol, vals)
    neg = int(np.sum(vals < -eps))
    pos = int(np.sum(vals > eps))
    if pos == 0:
        raise InapplicableError("no eigenvalue has a positive polynomial value")
    return _lower(Method.SECOND_INERTIAL, 1 + neg / pos, certificate=p,
                  details={"negative": neg, "positive": pos})


def _hoffman_parts(spec_L: Spectrum, p: Poly, diag: DiagStats, tol: float) -> tuple[float, float]:
    _check_dim(spec_L, diag)
    ev = spec_L.eigenvalues()
    if len(ev) < 2:
        raise InapplicableError("Hoffman-type bound needs at least two eigenvalues")
    vals = p(ev)
    top, rest = float(vals[0]), float(np.min(vals[1:]))
    if top <= rest + _eps(tol, vals):
        raise InapplicableError("p(lambda_1) must exceed min_{i>=2} p(lambda_i)")
    return top, rest


def hoffman_general(spec_L: Spectrum, p: Poly, diag: DiagStats,
                    tol: float = DEFAULT_TOL) -> BoundReport:
    """(p(l_1) - l'(p)) / (W'(p) - l'(p))."""
    top, rest = _hoffman_parts(spec_L, p, diag, tol)
    denom = diag.W - rest
    if denom <= 0:
        raise InapplicableError("W'(p) does not exceed lambda'(p)")
    return _lower(Method.HOFFMAN_GENERAL, (top - rest) / denom, certificate=p,
                  details={"p_lambda1": top, "lambda_p": rest, "W": diag.W})


def hoffman_regular(spec_L: Spectrum, p: Poly, diag: DiagStats, m: int,
                    tol: float = DEFAULT_TOL) -> BoundReport:
    """m / floor(m (W'(p) - l'(p)) / (p(l_1) - l'(p))); L(G) must be regular."""
    if not diag.line_regular:
        raise InapplicableError("rounded Hoffman bound needs a regular line graph")
    top, rest = _hoffman_parts(spec_L, p, diag, tol)
    inner = m * (diag.W - rest) / (top - rest)
    f = math.floor(inner + FLOOR_SLACK)
    if f <= 0:
        raise InapplicableError(f"degenerate rounding: floor({inner:.6g}) = {f}")
    return _lower(Method.HOFFMAN_REGULAR, m / f, certificate=p,
                  details={"p_lambda1": top, "lambda_p": rest, "W": diag.W, "floor": f})


# --- closed forms for t = 2, 3 ----------------------------------------------------

def _largest_at_most(theta: Sequence[float], x: float) -> Optional[int]:
    for i, v in enumerate(theta):
        if v <= x + THRESHOLD_SLACK:
            return i
    return None


def _require_regular(g: Graph) -> int:
    k = regularity(g)
    if k is None:
        raise GraphError("graph is not regular")
    return k


def chi2_closed(g: Graph) -> BoundReport:
    """Closed-form optimum of the general Hoffman-type bound for t = 2."""
    ld = line_data(g)
    theta = ld.spectrum.distinct
    if len(theta) < 3:
        raise InapplicableError(f"L(G) has {len(theta)} distinct eigenvalues; need at least 3")
    max_deg = int(ld.table[2].max())
    i = _largest_at_most(theta, -max_deg / theta[0])
    if i is None:
        raise InapplicableError("no eigenvalue of L(G) lies below -Delta'/theta'_0")
    ti, tj = theta[i], theta[i - 1]
    denom = max_deg + ti * tj
    if denom <= 0 or i - 1 == 0:
        raise InapplicableError("degenerate eigenvalue pair for the closed form")
    raw = (theta[0] - ti) * (theta[0] - tj) / denom
    return _lower(Method.CHI2_CLOSED, raw, certificate=Poly.from_roots([ti, tj]), indices={"i": i},
                  details={"theta0": theta[0], "theta_i": ti, "theta_i_minus_1": tj, "max_degree_line": max_deg})


def chi2_closed_regular(g: Graph) -> BoundReport:
    """Rounded closed-form Hoffman bound on chi'_2 for a k-regular graph."""
    k = _require_regular(g)
    ld = line_data(g)
    theta = ld.spectrum.distinct
    if len(theta) < 3:
        raise InapplicableError(f"L(G) has {len(theta)} distinct eigenvalues; need at least 3")
    i = _largest_at_most(theta, -1.0)
    if i is None or i - 1 == 0:
        raise InapplicableError("no usable eigenvalue pair around -1 in L(G)")
    t0, ti, tj = theta[0], theta[i], theta[i - 1]
    inner = ld.m * (t0 + ti * tj) / ((t0 - ti) * (t0 - tj))
    f = math.floor(inner + FLOOR_SLACK)
    if f <= 0:
        raise InapplicableError(f"degenerate rounding: floor({inner:.6g}) = {f}")
    return _lower(Method.CHI2_CLOSED_REGULAR, ld.m / f, certificate=Poly.from_roots([ti, tj]),
                  indices={"i": i},
                  details={"k": k, "theta0": t0, "theta_i": ti, "theta_i_minus_1": tj, "floor": f})


def chi3_closed_regular(g: Graph) -> BoundReport:
    """Rounded closed-form Hoffman bound on chi'_3 for a k-regular graph."""
    k = _require_regular(g)
    ld = line_data(g)
    theta = ld.spectrum.distinct
    if len(theta) < 4:
        raise InapplicableError(f"L(G) has {len(theta)} distinct eigenvalues; need at least 4")
    t0, td = theta[0], theta[-1]
    if abs(td + 2) > 1e-6:
        raise InapplicableError(f"smallest eigenvalue of L(G) is {td:.6g}, not -2")
    td = -2.0
    delta3 = int(ld.table[3].max())
    threshold = -(t0 * t0 + t0 * td - delta3) / (t0 * (td + 1))
    s = _largest_at_most(theta, threshold)
    if s is None or s == 0:
        raise InapplicableError(f"no eigenvalue of L(G) below the threshold {threshold:.6g}")
    if s - 1 == 0:
        raise InapplicableError("theta'_{s-1} coincides with theta'_0")
    ts, tr = theta[s], theta[s - 1]
    num = delta3 - t0 * (ts + tr + td) - ts * tr * td
    den = (t0 - ts) * (t0 - tr) * (t0 - td)
    inner = ld.m * num / den
    f = math.floor(inner + FLOOR_SLACK)
    if f <= 0:
        raise InapplicableError(f"degenerate rounding: floor({inner:.6g}) = {f}")
    return _lower(Method.CHI3_CLOSED_REGULAR, ld.m / f, certificate=Poly.from_roots([ts, tr, td]),
                  indices={"s": s},
                  details={"k": k, "theta0": t0, "theta_s": ts, "theta_s_minus_1": tr, "theta_d": td,
                           "delta3": delta3, "threshold": threshold, "floor": f})


# --- upper bound ----------------------------------------------------------------------

def wilf(g: Graph, t: int, tol: float = DEFAULT_TOL) -> BoundReport:
    """1 + largest eigenvalue of L(G)^t, an upper bound on chi'_t(G)."""
    if g.m == 0:
        raise GraphError("graph has no edges")
    lam = float(adjacency_eigenvalues(power_graph(line_graph(g), t))[0])
    raw = 1.0 + lam
    return BoundReport(Method.WILF, raw, math.floor(raw + tol), details={"lambda1_power": lam, "t": t})


# --- k+1 / k+2 classification ---------------------------------------------------------

class Chi2Class(str, Enum):
    K_PLUS_1 = "KPlus1"
    K_PLUS_2 = "KPlus2"
    INAPPLICABLE = "Inapplicable"


def chi2_behaviour_class(g: Graph, tol: float = DEFAULT_TOL) -> Chi2Class:
    """Which of k+1 / k+2 the rounded Hoffman bound on chi_2(g) guarantees, for k-regular ``g``.

    With theta_i the largest eigenvalue <= -1: theta_i = -1 gives the ratio
    1/(k+1) whatever theta_{i-1} is, so the bound is n / floor(n/(k+1)).
    For -2 <= theta_i < -1 the guarantee needs theta_{i-1} <= 0.
    """
    k = _require_regular(g)
    theta = adjacency_spectrum(g, tol).distinct
    i = _largest_at_most(theta, -1.0)
    if i is None or i == 0:
        return Chi2Class.INAPPLICABLE
    ti = theta[i]
    if abs(ti + 1) <= THRESHOLD_SLACK:
        return Chi2Class.K_PLUS_1 if g.n % (k + 1) == 0 else Chi2Class.K_PLUS_2
    if ti >= -2 - THRESHOLD_SLACK and theta[i - 1] <= THRESHOLD_SLACK:
        return Chi2Class.K_PLUS_2
    return Chi2Class.INAPPLICABLE


# --- certificate checking ---------------------------------------------------------------

def reevaluate(report: BoundReport, g: Graph, t: Optional[int] = None) -> float:
    """Recompute a report's raw value from its certificate alone."""
    if report.method is Method.WILF:
        return wilf(g, int(report.details.get("t", t))).raw
    p = report.certificate
    if p is None:
        raise ValueError(f"{report.method.value} report carries no polynomial certificate")
    ld = line_data(g, max(p.t, 3))
    diag = ld.diag(p)
    if report.method in (Method.HOFFMAN_GENERAL, Method.CHI2_CLOSED):
        return hoffman_general(ld.spectrum, p, diag).raw
    if report.method in (Method.HOFFMAN_REGULAR, Method.CHI2_CLOSED_REGULAR, Method.CHI3_CLOSED_REGULAR):
        return hoffman_regular(ld.spectrum, p, diag, ld.m).raw
    if report.method is Method.FIRST_INERTIAL:
        return first_inertial(ld.spectrum, p, diag, ld.m).raw
    if report.method is Method.SECOND_INERTIAL:
        return second_inertial(ld.spectrum, p, True).raw
    raise ValueError(f"unknown method {report.method}")
