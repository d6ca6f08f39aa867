"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 a method or construction whose
preconditions do not hold (argparse usage errors also exit 2).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import catalog
from .bounds import BoundReport, chi2_closed, chi2_closed_regular, chi3_closed_regular, wilf
from .constructions import (
    cycle,
    cycle_product,
    guo_mohar,
    six_colouring_cycles,
    t_critical_example,
    twelve_colouring_gm,
)
from .en import screen_counterexample, screen_csv, screen_json
from .errors import GraphError, InapplicableError, ParseError
from .exact import default_budget, exact_chi_t_prime, validate_colouring
from .graph import Graph, regularity
from .io import from_edge_list, from_graph6, to_edge_list, to_graph6
from .polyopt import lp_hoffman, optimize_first_inertial, optimize_hoffman, optimize_second_inertial
from .tables import build_table, table_csv, table_json

EXIT_OK, EXIT_PARSE, EXIT_INAPPLICABLE = 0, 1, 2
METHODS = ("hoffman", "hoffman-closed", "inertial1", "inertial2", "wilf", "exact")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number of seconds, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"budget must be positive, got {value}")
    return value


def _read(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    with open(source, "rb") as fh:
        return fh.read()


def _load_graph(args: argparse.Namespace) -> tuple[str, Graph]:
    if args.name is not None:
        key = catalog.canonical_name(args.name)
        return catalog.display_name(key), catalog.named(key)
    if args.graph6 is not None:
        data = sys.stdin.buffer.read().strip() if args.graph6 == "-" else args.graph6.encode()
        return "graph6", from_graph6(data)
    return "edge-list", from_edge_list(_read(args.edges))


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--name", help="catalog graph name")
    src.add_argument("--graph6", metavar="STRING", help="graph6 string, or '-' to read it from stdin")
    src.add_argument("--edges", metavar="FILE", help="edge-list file, or '-' for stdin")


# --- bound ----------------------------------------------------------------------------------

def _closed_form(g: Graph, t: int) -> BoundReport:
    regular = regularity(g) is not None
    if t == 2:
        return chi2_closed_regular(g) if regular else chi2_closed(g)
    if t == 3 and regular:
        return chi3_closed_regular(g)
    raise InapplicableError(f"no closed form for t={t}" + ("" if regular else " on a non-regular graph"))


def _hoffman(g: Graph, t: int) -> BoundReport:
    best = optimize_hoffman(g, t).best
    if t > 3 or (t == 3 and regularity(g) is None):
        try:
            lp = lp_hoffman(g, t).best
            if lp.raw > best.raw:
                best = lp
        except InapplicableError:
            pass
    return best


def _run_method(method: str, g: Graph, t: int, budget: float) -> dict:
    if method == "hoffman":
        return _hoffman(g, t).to_dict()
    if method == "hoffman-closed":
        return _closed_form(g, t).to_dict()
    if method == "inertial1":
        res = optimize_first_inertial(g, t, budget=budget)
        return res.best.to_dict() | {"search": res.method.value, "timed_out": res.timed_out}
    if method == "inertial2":
        res = optimize_second_inertial(g, t, budget=budget)
        return res.best.to_dict() | {"search": res.method.value, "timed_out": res.timed_out}
    if method == "wilf":
        return wilf(g, t).to_dict()
    if method == "exact":
        ex = exact_chi_t_prime(g, t, budget)
        return {"method": "Exact", "integer_bound": ex.value, "result": ex.to_dict()}
    raise ValueError(method)


def cmd_bound(args: argparse.Namespace) -> int:
    label, g = _load_graph(args)
    budget = args.budget or default_budget()
    methods = METHODS if args.method == "all" else (args.method,)
    results, failures = [], 0
    for method in methods:
        try:
            out = _run_method(method, g, args.t, budget)
        except InapplicableError as exc:
            failures += 1
            out = {"method": method, "error": str(exc)}
        out["requested"] = method
        results.append(out)
    if args.json:
        print(json.dumps({"graph": label, "t": args.t, "results": results}, indent=2))
    elif args.csv:
        print("graph,t,method,integer_bound,raw")
        for r in results:
            value = r.get("integer_bound", "inapplicable")
            if r.get("result", {}).get("status") == "TimedOut":
                value = "time"
            print(f"{label},{args.t},{r['requested']},{value},{r.get('raw', '')}")
    else:
        for r in results:
            if "error" in r:
                print(f"{r['requested']}: inapplicable: {r['error']}")
            elif r["method"] == "Exact":
                print(f"{r['requested']}: {r['integer_bound'] if r['integer_bound'] is not None else 'time'}")
            else:
                print(f"{r['requested']}: {r['integer_bound']} ({r['method']}, raw={r['raw']:.10g})")
    return EXIT_INAPPLICABLE if failures == len(methods) else EXIT_OK


# --- table ----------------------------------------------------------------------------------

def cmd_table(args: argparse.Namespace) -> int:
    rows = build_table(args.t, args.names or None, args.budget or default_budget(), args.jobs)
    text = table_json(rows) + "\n" if args.json else table_csv(rows)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- construct ------------------------------------------------------------------------------

def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise GraphError(f"family {args.family!r} needs {' '.join(missing)}")


def cmd_construct(args: argparse.Namespace) -> int:
    colouring = None
    note = None
    if args.family == "cycle":
        _need(args, "n")
        g = cycle(args.n)
    elif args.family == "balbiprod":
        _need(args, "q", "q2")
        if args.colour:
            g, colouring = six_colouring_cycles(args.q, args.q2)
        else:
            g = cycle_product(args.q, args.q2)
    elif args.family == "guo-mohar":
        _need(args, "k")
        if args.colour:
            g, colouring = twelve_colouring_gm(args.k)
        else:
            g = guo_mohar(args.k)
    elif args.family == "t-critical":
        _need(args, "n", "t")
        g, w_prime = t_critical_example(args.n, args.t)
        note = f"w' = {w_prime}"
    else:
        _need(args, "name")
        g = catalog.named(args.name)
    if args.colour and colouring is None:
        raise GraphError(f"family {args.family!r} has no certificate colouring")
    if args.format == "edge-list":
        sys.stdout.write(to_edge_list(g).decode())
    else:
        print(to_graph6(g).decode())
    if note:
        print(note, file=sys.stderr)
    if colouring is not None:
        check = validate_colouring(g, colouring)
        print(colouring.to_json(g))
        if not check:
            e, f, c = check.witness
            print(f"colouring INVALID: edges {e} and {f} share colour {c}", file=sys.stderr)
            return EXIT_INAPPLICABLE
        print(f"colouring valid at t={colouring.t} with {colouring.num_colours} colours", file=sys.stderr)
    return EXIT_OK


# --- en-screen ------------------------------------------------------------------------------

def cmd_en_screen(args: argparse.Namespace) -> int:
    items: list[tuple[str, Graph]] = []
    if args.catalog:
        items = [(catalog.display_name(k), catalog.named(k)) for k in catalog.names()]
    else:
        for lineno, line in enumerate(_read(args.input).splitlines(), 1):
            line = line.strip()
            if not line or line.startswith(b"#"):
                continue
            try:
                items.append((f"line{lineno}", from_graph6(line)))
            except (ParseError, GraphError) as exc:
                print(f"line {lineno}: skipped malformed graph6: {exc}", file=sys.stderr)
    reports = []
    for label, g in items:
        try:
            reports.append(screen_counterexample(g, label))
        except (GraphError, InapplicableError) as exc:
            print(f"{label}: skipped: {exc}", file=sys.stderr)
    if not reports:
        print("no graph could be screened", file=sys.stderr)
        return EXIT_PARSE
    text = screen_json(reports) + "\n" if args.json else screen_csv(reports)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    flagged = [r.name for r in reports if r.exceeds_en or r.spectrum_clear is False]
    for name in flagged:
        print(f"{name}: flagged for inspection", file=sys.stderr)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    for key in catalog.names():
        g = catalog.named(key)
        print(f"{catalog.display_name(key)}\t{g.n}\t{g.m}\t{catalog.graph6_of(key)}")
    return EXIT_OK


# --- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromabound",
                                     description="Spectral bounds and exact values for distance-t chromatic indices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="compute bounds for one graph")
    _add_source(p)
    p.add_argument("--t", type=_positive_int, required=True, help="distance parameter (>= 1)")
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument("--budget", type=_positive_float, help="seconds for MILP / exact search")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="reproduce the catalog comparison table")
    p.add_argument("--t", type=int, choices=(2, 3), required=True)
    p.add_argument("--budget", type=_positive_float, help="seconds per row")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--names", nargs="+", metavar="NAME", help="restrict to these catalog graphs")
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="build a graph family member, optionally with its colouring")
    p.add_argument("--family", required=True, choices=("cycle", "balbiprod", "guo-mohar", "t-critical", "named"))
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--q2", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--name")
    p.add_argument("--colour", "--color", action="store_true", help="emit and validate the certificate colouring")
    p.add_argument("--format", choices=("graph6", "edge-list"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("en-screen", help="screen regular graphs against the forbidden-interval condition")
    p.add_argument("--input", default="-", help="file of graph6 lines, '-' for stdin")
    p.add_argument("--catalog", action="store_true", help="screen the embedded catalog instead")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_en_screen)

    p = sub.add_parser("catalog", help="list the embedded named graphs")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GraphError, InapplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE


if __name__ == "__main__":
    sys.exit(main())
