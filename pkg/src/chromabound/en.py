"""Erdős–Nešetřil screening: conjectured maxima and forbidden spectral intervals.

If the t = 2 Hoffman-type bound of a k-regular graph exceeded ``c k**2`` with
``c > 1``, the graph would have to avoid an explicit eigenvalue interval.
:func:`screen_counterexample` computes the best ``c`` the bound certifies and
checks that necessary condition.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .bounds import chi2_closed, chi2_closed_regular
from .errors import GraphError
from .graph import Graph, regularity
from .spectral import adjacency_spectrum


def en_conjecture_value(delta: int) -> Fraction:
    """Conjectured maximum of chi'_2 over graphs of maximum degree ``delta``."""
    if delta < 1:
        raise ValueError(f"maximum degree must be positive, got {delta}")
    if delta % 2 == 0:
        return Fraction(5 * delta * delta, 4)
    return Fraction(5 * delta * delta - 2 * delta + 1, 4)


@dataclass(frozen=True)
class Interval:
    """Open interval ``(lo, hi)``."""

    lo: float
    hi: float

    @property
    def empty(self) -> bool:
        return not self.lo < self.hi

    @property
    def length(self) -> float:
        return max(0.0, self.hi - self.lo)

    def contains(self, x: float, tol: float = 0.0) -> bool:
        """Membership in the interval shrunk by ``tol`` at both ends."""
        return self.lo + tol < x < self.hi - tol

    def __str__(self) -> str:
        return f"({self.lo:.6g}, {self.hi:.6g})"


def _check_c(c: float) -> None:
    if not c > 1:
        raise ValueError(f"the forbidden intervals need c > 1, got {c}")


def forbidden_interval_regular(k: int, c: float) -> Interval:
    """Interval free of eigenvalues of a k-regular graph whose bound exceeds ``c k**2``."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    _check_c(c)
    if k == 2:
        return Interval(-1.0, -2.0 + 4.0 * math.sqrt(8 * c * c - 6 * c) / (4 * c - 1))
    return Interval(float(1 - k), (c * k - k) / (c * k - 1))


def regular_interval_claim(k: int, c: float) -> dict:
    """The k >= 3 interval against the claim that its length is at least k.

    The length is ``k - 1 + (ck - k)/(ck - 1)``, strictly below ``k`` for every
    finite ``c``, so the claim never holds; the actual length is reported.
    """
    iv = forbidden_interval_regular(k, c)
    return {"k": k, "c": c, "interval": [iv.lo, iv.hi], "length": iv.length,
            "length_at_least_k": iv.length >= k}


def forbidden_interval_general(delta: int, c: float) -> Interval:
    """Interval free of eigenvalues of L(G) when the bound exceeds ``c Delta**2`` (stated form)."""
    if delta < 2:
        raise ValueError(f"need Delta >= 2, got {delta}")
    _check_c(c)
    d = float(delta)
    if delta < 5:
        root = math.sqrt(c * d ** 3 * (c * d * d - (c + 1) * d + 1))
        return Interval(-1.0, 2.0 * root / (c * d * d - 1) - 2.0)
    return Interval(-1.0, (c * d ** 3 - (c + 1) * d * d + 1) / (2 * c * d * d - d - 1))


@dataclass
class ScreenReport:
    name: str
    k: int
    bound: float  # un-rounded closed-form bound
    bound_rounded: float  # m / floor(...) variant
    c_star: float
    c_star_rounded: float
    interval: Optional[Interval]
    spectrum_clear: Optional[bool]
    offending: list[float]
    en_value: Fraction
    exceeds_en: bool

    @property
    def candidate(self) -> bool:
        return self.c_star > 1

    @property
    def status(self) -> str:
        if self.exceeds_en:
            return "conjecture-violating candidate"
        return "screened" if self.candidate else "not a candidate"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["interval"] = None if self.interval is None else [self.interval.lo, self.interval.hi]
        out["en_value"] = str(self.en_value)
        out["status"] = self.status
        return out

    def csv_row(self) -> list[str]:
        iv = "" if self.interval is None else f"({self.interval.lo:.10g};{self.interval.hi:.10g})"
        clear = "" if self.spectrum_clear is None else str(self.spectrum_clear).lower()
        return [self.name, str(self.k), f"{self.bound:.10g}", f"{self.c_star:.10g}", iv, clear]


CSV_HEADER = ["name", "k", "bound", "c_star", "interval", "spectrum_clear"]


def screen_counterexample(g: Graph, name: str = "", tol: float = 1e-8) -> ScreenReport:
    """Screen a regular graph against the t = 2 forbidden-interval condition.

    ``c*`` is the un-rounded closed-form bound over ``k**2``; the rounded
    variant is reported alongside but not used for the interval test, because
    the interval is derived from the un-rounded expression. Raises
    InapplicableError when the closed form does not apply (for instance when
    L(g) has fewer than three distinct eigenvalues).
    """
    k = regularity(g)
    if k is None:
        raise GraphError("screening needs a regular graph")
    if k < 2:
        raise GraphError(f"screening needs k >= 2, got k={k}")
    raw = chi2_closed(g)
    rounded = chi2_closed_regular(g)
    c_star = raw.raw / (k * k)
    interval = None
    clear = None
    offending: list[float] = []
    if c_star > 1:
        interval = forbidden_interval_regular(k, c_star)
        offending = [v for v in adjacency_spectrum(g).distinct if interval.contains(v, tol)]
        clear = not offending
    en_value = en_conjecture_value(k)
    return ScreenReport(name, k, raw.raw, rounded.raw, c_star, rounded.raw / (k * k), interval, clear,
                        offending, en_value, rounded.integer_bound > en_value)


def screen_csv(reports: Iterable[ScreenReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def screen_json(reports: Iterable[ScreenReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)
