"""Command line front end.

Subcommands: profile, family, critical, scan, probe, enumerate. Machine
output (JSONL, graph6) goes to stdout, one record per line; summaries and
diagnostics go to stderr. Exit codes: 0 clean, 2 a checked statement failed
or a counterexample was found, 3 bad input, 4 a search budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from .domination import (
    DisconnectedGraphError,
    IsolatedVertexError,
    is_k_gamma_c_critical,
    is_k_gamma_t_critical,
)
from .enumeration import enumerate_connected_graphs
from .families import FamilyParameterError, build_family, parse_family_spec
from .graphs import BudgetExceededError, Graph6Error, parse_graph6, to_dot, to_graph6
from .invariants import profile
from .scan import (
    DEFAULT_CHECKS,
    DEFAULT_RECORD_CHUNK,
    EXIT_BUDGET,
    EXIT_INPUT,
    EXIT_OK,
    ScanInputError,
    probe_enumeration,
    probe_stream,
    record_line,
    scan_enumeration,
    scan_stream,
)
from .theorems import (
    CHECKS,
    CUT_ENUM_LIMIT_DEFAULT,
    HAM_BUDGET_DEFAULT,
    SCATTER_BUDGET_DEFAULT,
)


def _open_input(path: str | None):
    if path in (None, "-"):
        return nullcontext(sys.stdin)
    return open(path, "r", encoding="ascii", errors="replace")


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _parse_lines_strict(lines):
    """(line_no, text, graph) triples; raises ScanInputError on a bad line."""
    line_no = 0
    for raw in lines:
        line_no += 1
        text = raw.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except (Graph6Error, ValueError) as exc:
            raise ScanInputError(line_no, text, str(exc)) from exc
        yield line_no, text, g


def _cmd_profile(args) -> int:
    count = 0
    try:
        with _open_input(args.input) as fh:
            for _, text, g in _parse_lines_strict(fh):
                record = {"graph6": text, "profile": profile(g).to_dict()}
                print(json.dumps(record, sort_keys=True, separators=(",", ":")))
                count += 1
    except ScanInputError as exc:
        _err(f"profile: {exc}")
        return EXIT_INPUT
    _err(f"profiled {count} graphs")
    return EXIT_OK


def _cmd_family(args) -> int:
    try:
        spec = parse_family_spec(args.spec)
        g, layout = build_family(spec)
    except FamilyParameterError as exc:
        _err(f"family: {exc}")
        return EXIT_INPUT
    print(to_graph6(g))
    sidecar = {"family": str(spec), "n": g.n, "layout": layout.to_dict()}
    _err(json.dumps(sidecar, sort_keys=True, separators=(",", ":")))
    if args.dot:
        text = to_dot(g, labels=layout.labels(), name=spec.family.replace("-", "_"))
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(text)
        _err(f"dot written to {args.dot}")
    return EXIT_OK


def _cmd_critical(args) -> int:
    checker = is_k_gamma_t_critical if args.total else is_k_gamma_c_critical
    count = 0
    hits = 0
    try:
        with _open_input(args.input) as fh:
            for _, text, g in _parse_lines_strict(fh):
                try:
                    report_dict = checker(g, args.k).to_dict()
                    if not args.witnesses:
                        report_dict.pop("witnesses")
                except (DisconnectedGraphError, IsolatedVertexError):
                    # the invariant is undefined here, so criticality fails
                    report_dict = {"k": args.k, "base": None, "is_critical": False}
                count += 1
                hits += bool(report_dict["is_critical"])
                record = {"graph6": text, "report": report_dict}
                print(json.dumps(record, sort_keys=True, separators=(",", ":")))
    except ScanInputError as exc:
        _err(f"critical: {exc}")
        return EXIT_INPUT
    variant = "gamma_t" if args.total else "gamma_c"
    _err(f"{hits} of {count} graphs are {args.k}-{variant}-critical")
    return EXIT_OK


def _budgets(args) -> dict:
    return {
        "ham": args.budget_ham,
        "scatter": args.budget_scatter,
        "cuts": args.budget_cuts,
    }


def _parse_checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return tuple(CHECKS)
    return tuple(part.strip() for part in text.split(",") if part.strip())


def _emit_records(args):
    """Sink that prints records and optionally retains them for figures."""
    kept: list[dict] = []

    def sink(record: dict) -> None:
        print(record_line(record))
        if args.figures:
            kept.append(record)

    return sink, kept


def _finish_sweep(args, summary, kept) -> int:
    for line in summary.lines():
        _err(line)
    if args.figures:
        from .figures import render_figures

        for path in render_figures(kept, args.figures):
            _err(f"figure {path}")
    return summary.exit_code


def _cmd_scan(args) -> int:
    check_ids = _parse_checks(args.checks)
    sink, kept = _emit_records(args)
    try:
        if args.enumerate is not None:
            summary = scan_enumeration(
                args.enumerate,
                check_ids=check_ids,
                budgets=_budgets(args),
                filter_spec=args.filter,
                dedup=args.dedup,
                jobs=args.jobs,
                chunk=args.chunk,
                sink=sink,
            )
        else:
            with _open_input(args.input) as fh:
                summary = scan_stream(
                    fh,
                    check_ids=check_ids,
                    budgets=_budgets(args),
                    filter_spec=args.filter,
                    jobs=args.jobs,
                    chunk=args.chunk,
                    skip_bad=args.skip_bad,
                    sink=sink,
                )
    except ScanInputError as exc:
        _err(f"scan: {exc}")
        return EXIT_INPUT
    except BudgetExceededError as exc:
        _err(f"scan: {exc}")
        return EXIT_BUDGET
    except ValueError as exc:
        _err(f"scan: {exc}")
        return EXIT_INPUT
    return _finish_sweep(args, summary, kept)


def _cmd_probe(args) -> int:
    sink, kept = _emit_records(args)
    try:
        if args.enumerate is not None:
            summary = probe_enumeration(
                args.enumerate,
                budgets=_budgets(args),
                jobs=args.jobs,
                chunk=args.chunk,
                sink=sink,
            )
        else:
            with _open_input(args.input) as fh:
                summary = probe_stream(
                    fh,
                    budgets=_budgets(args),
                    jobs=args.jobs,
                    chunk=args.chunk,
                    skip_bad=args.skip_bad,
                    sink=sink,
                )
    except ScanInputError as exc:
        _err(f"probe: {exc}")
        return EXIT_INPUT
    except (BudgetExceededError, ValueError) as exc:
        _err(f"probe: {exc}")
        return EXIT_BUDGET if isinstance(exc, BudgetExceededError) else EXIT_INPUT
    return _finish_sweep(args, summary, kept)


def _cmd_enumerate(args) -> int:
    count = 0
    try:
        for g in enumerate_connected_graphs(args.n, dedup=args.dedup):
            print(to_graph6(g))
            count += 1
    except BudgetExceededError as exc:
        _err(f"enumerate: {exc}")
        return EXIT_BUDGET
    _err(f"{count} graphs")
    return EXIT_OK


def _add_input_arg(sub) -> None:
    sub.add_argument(
        "input",
        nargs="?",
        default=None,
        help="graph6 file, one line per graph; default stdin",
    )


def _add_sweep_args(sub) -> None:
    sub.add_argument("--enumerate", type=int, metavar="N", default=None,
                     help="scan all connected labeled graphs on N vertices instead of a stream")
    sub.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub.add_argument("--chunk", type=int, default=DEFAULT_RECORD_CHUNK,
                     help="graphs per work chunk")
    sub.add_argument("--skip-bad", action="store_true",
                     help="skip unparsable lines instead of aborting")
    sub.add_argument("--budget-ham", type=int, default=HAM_BUDGET_DEFAULT,
                     help="max vertices for the Hamiltonian path search")
    sub.add_argument("--budget-scatter", type=int, default=SCATTER_BUDGET_DEFAULT,
                     help="max cut size for the scattering check")
    sub.add_argument("--budget-cuts", type=int, default=CUT_ENUM_LIMIT_DEFAULT,
                     help="max minimum cut sets to enumerate")
    sub.add_argument("--figures", metavar="DIR", default=None,
                     help="render summary charts into DIR")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdcrit",
        description="Connected-domination criticality toolkit",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("profile", help="invariant profiles for graph6 input")
    _add_input_arg(p)
    p.set_defaults(handler=_cmd_profile)

    p = subs.add_parser("family", help="construct a named family member")
    p.add_argument("spec", help="family spec, e.g. classG1:1,1,1,1")
    p.add_argument("--dot", metavar="PATH", default=None,
                   help="also write a DOT rendering with role labels")
    p.set_defaults(handler=_cmd_family)

    p = subs.add_parser("critical", help="criticality reports for graph6 input")
    _add_input_arg(p)
    p.add_argument("--k", type=int, default=3, help="target invariant value")
    p.add_argument("--total", action="store_true",
                   help="test total domination instead of connected domination")
    p.add_argument("--witnesses", action="store_true",
                   help="include per-non-edge drop witnesses")
    p.set_defaults(handler=_cmd_critical)

    p = subs.add_parser("scan", help="run structure checks over graphs")
    _add_input_arg(p)
    p.add_argument("--checks", default=",".join(DEFAULT_CHECKS),
                   help="comma-separated check ids, or 'all'")
    p.add_argument("--filter", default="none", choices=("none", "critical3"),
                   help="emit only records passing this predicate")
    p.add_argument("--dedup", action="store_true",
                   help="with --enumerate, one representative per isomorphism class")
    _add_sweep_args(p)
    p.set_defaults(handler=_cmd_scan)

    p = subs.add_parser("probe", help="open-problem probe over graphs")
    _add_input_arg(p)
    _add_sweep_args(p)
    p.set_defaults(handler=_cmd_probe)

    p = subs.add_parser("enumerate", help="emit connected labeled graphs as graph6")
    p.add_argument("n", type=int, help="vertex count")
    p.add_argument("--dedup", action="store_true",
                   help="one representative per isomorphism class")
    p.set_defaults(handler=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
