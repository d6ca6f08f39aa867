"""Choosing the polynomial that maximizes each spectral bound.

Three routes:

* closed forms for t = 2 (any graph) and t = 3 (regular graphs);
* subset products ``p_S(x) = prod_{theta in S} (x - theta)`` over distinct
  eigenvalues of L(G), always available;
* exact mathematical programs (LP for the Hoffman ratio, MILPs for the
  inertial counts) solved through a small :class:`MilpSolver` interface.

Whatever route produces a polynomial, its value is recomputed by the plain
bound functions in :mod:`chromabound.bounds`, so a reported bound never relies
on solver tolerances.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Protocol, Sequence

import numpy as np

from .bounds import (
    BoundReport,
    LineData,
    Method,
    Poly,
    chi2_closed,
    chi2_closed_regular,
    chi3_closed_regular,
    first_inertial,
    hoffman_general,
    hoffman_regular,
    line_data,
    second_inertial,
)
from .errors import GraphError, InapplicableError
from .graph import Graph, first_walk_irregular_power, regularity

MAX_DISTINCT = 64
MAX_T = 6


class OptMethod(str, Enum):
    CLOSED_FORM = "ClosedForm"
    SUBSET_ENUMERATION = "SubsetEnumeration"
    MILP_EXACT = "MilpExact"


@dataclass
class OptResult:
    best: BoundReport
    search_log: list[tuple[str, float]]
    method: OptMethod
    timed_out: bool = False

    def to_dict(self) -> dict:
        return {"best": self.best.to_dict(), "method": self.method.value, "timed_out": self.timed_out,
                "candidates": len(self.search_log)}


# --- solver interface ---------------------------------------------------------------------

@dataclass
class MilpProblem:
    """minimize ``c @ x`` subject to ``lb <= A @ x <= ub`` and variable bounds."""

    c: np.ndarray
    A: np.ndarray
    lb: np.ndarray
    ub: np.ndarray
    var_lb: np.ndarray
    var_ub: np.ndarray
    integrality: np.ndarray  # 1 for integer variables, 0 for continuous


@dataclass
class MilpSolution:
    x: Optional[np.ndarray]
    objective: Optional[float]
    optimal: bool
    timed_out: bool
    message: str = ""


class MilpSolver(Protocol):
    def solve(self, problem: MilpProblem, time_limit: Optional[float] = None) -> MilpSolution: ...


class ScipyMilpSolver:
    """Adapter over :func:`scipy.optimize.milp` (HiGHS)."""

    def solve(self, problem: MilpProblem, time_limit: Optional[float] = None) -> MilpSolution:
        from scipy.optimize import Bounds, LinearConstraint, milp

        options = {"disp": False}
        if time_limit is not None:
            options["time_limit"] = max(float(time_limit), 0.1)
        res = milp(problem.c, integrality=problem.integrality,
                   bounds=Bounds(problem.var_lb, problem.var_ub),
                   constraints=[LinearConstraint(problem.A, problem.lb, problem.ub)], options=options)
        # status: 0 optimal, 1 iteration/time limit, 2 infeasible, 3 unbounded, 4 other
        return MilpSolution(None if res.x is None else np.asarray(res.x), res.fun,
                            res.status == 0, res.status == 1, str(res.message))


def default_solver() -> Optional[MilpSolver]:
    try:
        from scipy.optimize import milp  # noqa: F401
    except ImportError:  # pragma: no cover - scipy is a declared dependency
        return None
    return ScipyMilpSolver()


# --- helpers --------------------------------------------------------------------------------

def _check_caps(ld: LineData, t: int) -> None:
    if t < 1:
        raise GraphError(f"t must be a positive integer, got {t}")
    if t > MAX_T:
        raise GraphError(f"t={t} exceeds the supported maximum {MAX_T}")
    if ld.spectrum.d > MAX_DISTINCT:
        raise GraphError(f"L(G) has {ld.spectrum.d + 1} distinct eigenvalues; at most {MAX_DISTINCT + 1} supported")


def _scaled_data(ld: LineData, t: int) -> tuple[float, np.ndarray, np.ndarray, np.ndarray]:
    """Scale factor rho, scaled distinct eigenvalues, multiplicities and distinct diagonal columns.

    Working with ``x / rho`` keeps every power of an eigenvalue in [-1, 1].
    """
    theta = np.array(ld.spectrum.distinct)
    rho = max(1.0, float(np.max(np.abs(theta))))
    mult = np.array(ld.spectrum.multiplicities, dtype=float)
    cols = np.unique(ld.table[: t + 1].T, axis=0).astype(float)  # one row per distinct edge profile
    cols = cols / rho ** np.arange(t + 1)
    return rho, theta / rho, mult, cols


def _unscale(coeffs: Sequence[float], rho: float) -> Poly:
    return Poly(tuple(float(c) / rho ** l for l, c in enumerate(coeffs)))


def _vander(x: np.ndarray, t: int) -> np.ndarray:
    return np.vander(x, t + 1, increasing=True)


def _subsets(theta: Sequence[float], t: int, skip_first: bool) -> list[tuple[int, ...]]:
    idx = range(1 if skip_first else 0, len(theta))
    out: list[tuple[int, ...]] = []
    for size in range(1, t + 1):
        out.extend(itertools.combinations(idx, size))
    return out


def _label(theta: Sequence[float], subset: tuple[int, ...], sign: str = "") -> str:
    roots = ", ".join(f"{theta[i]:.6g}" for i in subset)
    return f"{sign}p_S S={{{roots}}}"


def _pick_best(candidates: list[tuple[str, BoundReport]]) -> tuple[str, BoundReport]:
    # first strictly larger value wins, so ties keep the earliest (lexicographically smallest) subset
    best = candidates[0]
    for cand in candidates[1:]:
        if cand[1].raw > best[1].raw + 1e-12:
            best = cand
    return best


# --- Hoffman-type ---------------------------------------------------------------------------

def _hoffman_eval(ld: LineData, p: Poly) -> BoundReport:
    diag = ld.diag(p)
    if diag.line_regular:
        return hoffman_regular(ld.spectrum, p, diag, ld.m)
    return hoffman_general(ld.spectrum, p, diag)


def enumerate_hoffman(g: Graph, t: int) -> OptResult:
    """Best Hoffman-type bound over subset-product polynomials of degree <= t."""
    ld = line_data(g, t)
    _check_caps(ld, t)
    theta = ld.spectrum.distinct
    found: list[tuple[str, BoundReport]] = []
    for subset in _subsets(theta, t, skip_first=True):
        p = Poly.from_roots([theta[i] for i in subset], t)
        try:
            found.append((_label(theta, subset), _hoffman_eval(ld, p)))
        except InapplicableError:
            continue
    if not found:
        raise InapplicableError("no subset polynomial satisfies the Hoffman-type hypotheses")
    _, best = _pick_best(found)
    return OptResult(best, [(lbl, r.raw) for lbl, r in found], OptMethod.SUBSET_ENUMERATION)


def lp_hoffman(g: Graph, t: int, solver: Optional[MilpSolver] = None) -> OptResult:
    """Exact optimum of the general Hoffman-type ratio over all polynomials of degree <= t.

    With the normalisation ``p(lambda_1) - L = 1`` the ratio is ``1 / (W - L)``,
    so it suffices to minimize ``W - L`` subject to ``p(theta_j) >= L`` on the
    remaining eigenvalues and ``W >= (p(A'))_ee`` on every edge.
    """
    solver = solver or default_solver()
    if solver is None:
        raise InapplicableError("no LP solver available")
    ld = line_data(g, t)
    _check_caps(ld, t)
    rho, x, mult, cols = _scaled_data(ld, t)
    if ld.m < 2:
        raise InapplicableError("Hoffman-type bound needs at least two eigenvalues")
    rest = x if mult[0] > 1 else x[1:]
    nv = t + 3  # c_0..c_t, L, W
    rows, lo, hi = [], [], []
    for xv in rest:  # p(x) - L >= 0
        rows.append(np.concatenate([_vander(np.array([xv]), t)[0], [-1.0, 0.0]]))
        lo.append(0.0)
        hi.append(np.inf)
    for col in cols:  # W - diag >= 0
        rows.append(np.concatenate([-col, [0.0, 1.0]]))
        lo.append(0.0)
        hi.append(np.inf)
    rows.append(np.concatenate([_vander(x[:1], t)[0], [-1.0, 0.0]]))  # p(theta_0) - L = 1
    lo.append(1.0)
    hi.append(1.0)
    objective = np.zeros(nv)
    objective[-2], objective[-1] = -1.0, 1.0
    sol = solver.solve(MilpProblem(objective, np.array(rows), np.array(lo), np.array(hi),
                                   np.full(nv, -np.inf), np.full(nv, np.inf), np.zeros(nv)))
    if sol.x is None:
        raise InapplicableError(f"Hoffman LP failed: {sol.message}")
    p = _unscale(sol.x[: t + 1], rho)
    report = _hoffman_eval(ld, p)
    return OptResult(report, [("lp-optimum", report.raw)], OptMethod.MILP_EXACT)


def optimize_hoffman(g: Graph, t: int) -> OptResult:
    """Closed form for t = 2 (and t = 3 on regular graphs), else subset enumeration."""
    ld = line_data(g, t)
    _check_caps(ld, t)
    regular = regularity(g) is not None
    closed: Optional[Callable[[Graph], BoundReport]] = None
    if t == 2:
        closed = chi2_closed_regular if regular else chi2_closed
    elif t == 3 and regular:
        closed = chi3_closed_regular
    if closed is not None:
        try:
            report = closed(g)
            return OptResult(report, [(report.method.value, report.raw)], OptMethod.CLOSED_FORM)
        except InapplicableError:
            pass
    return enumerate_hoffman(g, t)


# --- first inertial -------------------------------------------------------------------------

def _first_inertial_eval(ld: LineData, p: Poly) -> BoundReport:
    return first_inertial(ld.spectrum, p, ld.diag(p), ld.m)


def enumerate_first_inertial(g: Graph, t: int) -> OptResult:
    """Best first inertial bound over +-p_S for subsets S of at most t distinct eigenvalues."""
    ld = line_data(g, t)
    _check_caps(ld, t)
    theta = ld.spectrum.distinct
    found: list[tuple[str, BoundReport]] = []
    for subset in _subsets(theta, t, skip_first=False):
        p = Poly.from_roots([theta[i] for i in subset], t)
        for sign, q in (("+", p), ("-", p.scaled(-1.0))):
            found.append((_label(theta, subset, sign), _first_inertial_eval(ld, q)))
    _, best = _pick_best(found)
    return OptResult(best, [(lbl, r.raw) for lbl, r in found], OptMethod.SUBSET_ENUMERATION)


def _first_inertial_milp(ld: LineData, t: int, solver: MilpSolver, time_limit: Optional[float],
                         sep: float) -> tuple[Optional[np.ndarray], bool]:
    """Minimize the number of eigenvalues (with multiplicity) where p is >= min diag p(A').

    Variables: c_0..c_t in [-1, 1], w free, one binary b_j per distinct
    eigenvalue. ``w <= diag_e(p)`` for every edge profile keeps w below the
    minimum diagonal entry; ``b_j = 0`` forces ``p(theta_j) <= w - sep``.
    """
    rho, x, mult, cols = _scaled_data(ld, t)
    nd = len(x)
    nv = t + 2 + nd
    big = 2.0 * (t + 1) * max(1.0, float(np.max(np.abs(cols)))) + 1.0 + sep
    V = _vander(x, t)
    rows, lo, hi = [], [], []
    for col in cols:  # w - diag_e <= 0
        r = np.zeros(nv)
        r[: t + 1] = -col
        r[t + 1] = 1.0
        rows.append(r)
        lo.append(-np.inf)
        hi.append(0.0)
    for j in range(nd):  # p(theta_j) - w - M b_j <= -sep
        r = np.zeros(nv)
        r[: t + 1] = V[j]
        r[t + 1] = -1.0
        r[t + 2 + j] = -big
        rows.append(r)
        lo.append(-np.inf)
        hi.append(-sep)
    objective = np.concatenate([np.zeros(t + 2), mult])
    var_lb = np.concatenate([-np.ones(t + 1), [-big], np.zeros(nd)])
    var_ub = np.concatenate([np.ones(t + 1), [big], np.ones(nd)])
    integrality = np.concatenate([np.zeros(t + 2), np.ones(nd)])
    sol = solver.solve(MilpProblem(objective, np.array(rows), np.array(lo), np.array(hi),
                                   var_lb, var_ub, integrality), time_limit)
    if sol.x is None:
        return None, sol.timed_out
    support = np.round(sol.x[t + 2:]) > 0.5
    polished = _polish_first_inertial(x, cols, support, t, solver)
    coeffs = polished if polished is not None else sol.x[: t + 1]
    return _unscale(coeffs, rho).coeffs, sol.timed_out


def _polish_first_inertial(x: np.ndarray, cols: np.ndarray, support: np.ndarray, t: int,
                           solver: MilpSolver) -> Optional[np.ndarray]:
    """For a fixed set of eigenvalues allowed above w, maximize the separation of the others."""
    outside = np.flatnonzero(~support)
    if not len(outside):
        return None
    nv = t + 3  # c, w, gap
    V = _vander(x, t)
    rows, lo, hi = [], [], []
    for col in cols:
        rows.append(np.concatenate([-col, [1.0, 0.0]]))
        lo.append(-np.inf)
        hi.append(0.0)
    for j in outside:
        rows.append(np.concatenate([V[j], [-1.0, 1.0]]))
        lo.append(-np.inf)
        hi.append(0.0)
    objective = np.zeros(nv)
    objective[-1] = -1.0
    var_lb = np.concatenate([-np.ones(t + 1), [-np.inf, 0.0]])
    var_ub = np.concatenate([np.ones(t + 1), [np.inf, 1.0]])
    sol = solver.solve(MilpProblem(objective, np.array(rows), np.array(lo), np.array(hi),
                                   var_lb, var_ub, np.zeros(nv)))
    if sol.x is None or sol.x[-1] <= 1e-9:
        return None
    return sol.x[: t + 1]


def optimize_first_inertial(g: Graph, t: int, budget: Optional[float] = None,
                            solver: Optional[MilpSolver] = None, use_milp: bool = True) -> OptResult:
    """Maximize the first inertial bound; exact MILP when a solver is available."""
    ld = line_data(g, t)
    _check_caps(ld, t)
    enum = enumerate_first_inertial(g, t)
    solver = solver or (default_solver() if use_milp else None)
    if solver is None:
        return enum
    start = time.monotonic()
    coeffs, timed_out = _first_inertial_milp(ld, t, solver, budget, sep=1e-4)
    log = list(enum.search_log)
    best = enum.best
    if coeffs is not None:
        report = _first_inertial_eval(ld, Poly(coeffs))
        log.append(("milp-optimum", report.raw))
        if report.raw > best.raw + 1e-12:
            best = report
    if budget is not None and time.monotonic() - start > budget:
        timed_out = True
    return OptResult(best, log, OptMethod.MILP_EXACT, timed_out)


# --- second inertial ------------------------------------------------------------------------

def _require_walk_regular(ld: LineData, t: int) -> None:
    bad = first_walk_irregular_power(ld.line, t)
    if bad is not None:
        raise InapplicableError(f"L(G) is not {t}-partially walk-regular: diag(A'^{bad}) is not constant")


def _second_inertial_eval(ld: LineData, p: Poly) -> BoundReport:
    return second_inertial(ld.spectrum, p, True)


def _sum_zero_shift(ld: LineData, p: Poly) -> Poly:
    vals = p(ld.spectrum.eigenvalues())
    coeffs = list(p.coeffs)
    coeffs[0] -= float(np.mean(vals))
    return Poly(tuple(coeffs))


def enumerate_second_inertial(g: Graph, t: int) -> OptResult:
    """+-p_S shifted by a constant so the values sum to zero over the spectrum."""
    ld = line_data(g, t)
    _check_caps(ld, t)
    _require_walk_regular(ld, t)
    theta = ld.spectrum.distinct
    found: list[tuple[str, BoundReport]] = []
    for subset in _subsets(theta, t, skip_first=False):
        p = Poly.from_roots([theta[i] for i in subset], t)
        for sign, q in (("+", p), ("-", p.scaled(-1.0))):
            try:
                found.append((_label(theta, subset, sign), _second_inertial_eval(ld, _sum_zero_shift(ld, q))))
            except InapplicableError:
                continue
    if not found:
        raise InapplicableError("no candidate polynomial has both signs on the spectrum")
    _, best = _pick_best(found)
    return OptResult(best, [(lbl, r.raw) for lbl, r in found], OptMethod.SUBSET_ENUMERATION)


def _second_inertial_milp(ld: LineData, t: int, ratio: float, solver: MilpSolver,
                          time_limit: Optional[float], sep: float) -> Optional[np.ndarray]:
    """Maximize ``N - ratio * P`` over sign patterns of a sum-zero polynomial.

    ``n_j = 1`` forces ``p(theta_j) <= -sep``; ``pi_j = 0`` forces ``p(theta_j) <= 0``.
    """
    rho, x, mult, _ = _scaled_data(ld, t)
    nd = len(x)
    nv = t + 1 + 2 * nd
    big = 2.0 * (t + 1) + 1.0 + sep
    V = _vander(x, t)
    rows, lo, hi = [], [], []
    r = np.zeros(nv)
    r[: t + 1] = mult @ V
    rows.append(r)
    lo.append(0.0)
    hi.append(0.0)
    for j in range(nd):
        r = np.zeros(nv)  # p + M n_j <= M - sep
        r[: t + 1] = V[j]
        r[t + 1 + j] = big
        rows.append(r)
        lo.append(-np.inf)
        hi.append(big - sep)
        r = np.zeros(nv)  # p - M pi_j <= 0
        r[: t + 1] = V[j]
        r[t + 1 + nd + j] = -big
        rows.append(r)
        lo.append(-np.inf)
        hi.append(0.0)
        r = np.zeros(nv)  # n_j + pi_j <= 1
        r[t + 1 + j] = r[t + 1 + nd + j] = 1.0
        rows.append(r)
        lo.append(-np.inf)
        hi.append(1.0)
    r = np.zeros(nv)
    r[t + 1: t + 1 + nd] = 1.0
    rows.append(r)
    lo.append(1.0)
    hi.append(np.inf)
    objective = np.concatenate([np.zeros(t + 1), -mult, ratio * mult])
    var_lb = np.concatenate([-np.ones(t + 1), np.zeros(2 * nd)])
    var_ub = np.ones(t + 1 + 2 * nd)
    integrality = np.concatenate([np.zeros(t + 1), np.ones(2 * nd)])
    sol = solver.solve(MilpProblem(objective, np.array(rows), np.array(lo), np.array(hi),
                                   var_lb, var_ub, integrality), time_limit)
    if sol.x is None:
        return None
    return np.array(_unscale(sol.x[: t + 1], rho).coeffs)


def optimize_second_inertial(g: Graph, t: int, budget: Optional[float] = None,
                             solver: Optional[MilpSolver] = None, use_milp: bool = True) -> OptResult:
    """Maximize the second inertial bound (Dinkelbach iterations over a MILP)."""
    ld = line_data(g, t)
    _check_caps(ld, t)
    _require_walk_regular(ld, t)
    enum = enumerate_second_inertial(g, t)
    solver = solver or (default_solver() if use_milp else None)
    if solver is None:
        return enum
    start = time.monotonic()
    log = list(enum.search_log)
    best = enum.best
    timed_out = False
    for _ in range(50):
        ratio = best.raw - 1.0
        remaining = None if budget is None else budget - (time.monotonic() - start)
        if remaining is not None and remaining <= 0:
            timed_out = True
            break
        coeffs = _second_inertial_milp(ld, t, ratio, solver, remaining, sep=1e-4)
        if coeffs is None:
            break
        try:
            report = _second_inertial_eval(ld, _sum_zero_shift(ld, Poly(tuple(coeffs))))
        except InapplicableError:
            break
        log.append((f"milp ratio>{ratio:.6g}", report.raw))
        if report.raw <= best.raw + 1e-9:
            break
        best = report
    return OptResult(best, log, OptMethod.MILP_EXACT, timed_out)
