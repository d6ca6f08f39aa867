"""Bound comparison tables over the named-graph catalog."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import catalog
from .bounds import wilf
from .errors import InapplicableError
from .exact import default_budget, exact_chi_t_prime
from .polyopt import optimize_first_inertial, optimize_hoffman

Cell = Union[int, str]
TIME = "time"
NA = "n/a"
CSV_COLUMNS = ["name", "hoffman_closed", "inertial1", "wilf", "exact", "tight"]


@dataclass
class TableRow:
    name: str
    hoffman_closed: Cell
    inertial1: Cell
    wilf: Cell
    exact: Cell

    @property
    def tight(self) -> bool:
        if not isinstance(self.exact, int):
            return False
        return any(isinstance(b, int) and b == self.exact for b in (self.hoffman_closed, self.inertial1))

    def cells(self) -> list[str]:
        return [self.name, str(self.hoffman_closed), str(self.inertial1), str(self.wilf), str(self.exact),
                "tight" if self.tight else ""]

    def to_dict(self) -> dict:
        return {"name": self.name, "hoffman_closed": self.hoffman_closed, "inertial1": self.inertial1,
                "wilf": self.wilf, "exact": self.exact, "tight": self.tight}


def compute_row(name: str, t: int, budget: Optional[float] = None, use_milp: bool = True) -> TableRow:
    """One table row; the inertial MILP and the exact solver share the row budget."""
    budget = default_budget() if budget is None else budget
    start = time.monotonic()
    g = catalog.named(name)
    try:
        hoff: Cell = optimize_hoffman(g, t).best.integer_bound
    except InapplicableError:
        hoff = NA
    inert = optimize_first_inertial(g, t, budget=budget / 2, use_milp=use_milp)
    inertial: Cell = TIME if inert.timed_out else inert.best.integer_bound
    upper = wilf(g, t).integer_bound
    remaining = max(budget - (time.monotonic() - start), 0.1)
    ex = exact_chi_t_prime(g, t, remaining)
    return TableRow(catalog.display_name(name), hoff, inertial, upper, ex.value if ex.solved else TIME)


def _row_job(args: tuple) -> TableRow:
    return compute_row(*args)


def build_table(t: int, names: Optional[Sequence[str]] = None, budget: Optional[float] = None,
                jobs: int = 1, use_milp: bool = True) -> list[TableRow]:
    if t not in (2, 3):
        raise ValueError(f"tables are defined for t in {{2, 3}}, got {t}")
    keys = [catalog.canonical_name(n) for n in (names or catalog.names())]
    budget = default_budget() if budget is None else budget
    work = [(k, t, budget, use_milp) for k in keys]
    if jobs <= 1:
        return [_row_job(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_job, work))  # map keeps input order


def table_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.cells())
    return buf.getvalue()


def table_json(rows: Sequence[TableRow]) -> str:
    return json.dumps([r.to_dict() for r in rows], indent=2)
