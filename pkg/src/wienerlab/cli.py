"""Command-line interface: analyze / construct / verify / search.

Exit codes are part of the contract:

* ``analyze``   0 ok, 1 parse failure, 2 disconnected input.
* ``construct`` 0 ok, 1 invalid or infeasible parameters.
* ``verify``    0 all cases pass, 3 any case failed (a counterexample
  certificate is printed: the graph6 record and the offending check).
* ``search``    0 on clean scans (even with zero matches), 1 on a malformed
  filter or, with ``--on-malformed abort``, a malformed record.

Options resolve as flags > environment (``WIENERLAB_<NAME>``) > defaults.
Human-readable tables are printed on a terminal; JSON lines when piped or
with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from . import constructions
from .analysis import analyze
from .errors import (
    DisconnectedGraphError,
    EdgeListError,
    Graph6Error,
    InvalidParamsError,
    MalformedRecordError,
    OrderTooLargeError,
    WienerLabError,
)
from .formats import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .graph import Graph
from .search import ScanSummary, SearchFilter, enumerate_connected, scan_stream


def _env(name: str, default: Optional[str]) -> Optional[str]:
    return os.environ.get(f"WIENERLAB_{name}", default)


def _want_json(args) -> bool:
    return bool(args.json) or not sys.stdout.isatty()


def _read_input(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _parse_single(text: str, fmt: str) -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    for line in text.splitlines():
        if line.strip():
            return parse_graph6(line.strip())
    raise Graph6Error("no graph6 record in input")


def _print_table(rows, header) -> None:
    table = [tuple(str(c) for c in row) for row in [header, *rows]]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    for r, row in enumerate(table):
        print("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if r == 0:
            print("  ".join("-" * w for w in widths))


# -- analyze ----------------------------------------------------------------

def cmd_analyze(args) -> int:
    try:
        text = _read_input(args.input)
        g = _parse_single(text, args.format)
    except (Graph6Error, EdgeListError, OSError, WienerLabError) as exc:
        print(f"error: cannot parse input: {exc}", file=sys.stderr)
        return 1
    try:
        report = analyze(g)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if _want_json(args):
        print(json.dumps(report.to_json_dict(), separators=(",", ":")))
        return 0
    prop = report.good_proportion
    print(f"order       {report.n}")
    print(f"wiener      {report.wiener}")
    print(f"good        {report.good_count} of {report.n}")
    print(f"proportion  {prop.numerator}/{prop.denominator}")
    print()
    rows = []
    for rec in report.per_vertex:
        delta = "disconnects" if rec.delta is None else rec.delta
        rows.append((rec.vertex, rec.label or "-", rec.transmission, delta))
    _print_table(rows, ("vertex", "label", "transmission", "delta"))
    return 0


# -- construct ----------------------------------------------------------------

def _build_from_args(args) -> Graph:
    family = args.family
    if family == "bunch":
        return constructions.build_bunch(args.k)
    if family == "lily":
        if args.z:
            return constructions.build_lily_general(args.k, args.m, args.z)
        return constructions.build_lily(args.k, args.m)
    if family == "chorded12":
        return constructions.build_chorded_cycle_12()
    if family == "cycle":
        return constructions.build_cycle(args.n)
    if family == "path":
        return constructions.build_path(args.n)
    return constructions.build_complete(args.n)


def cmd_construct(args) -> int:
    try:
        g = _build_from_args(args)
    except InvalidParamsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out_format == "edgelist":
        sys.stdout.write(emit_edgelist(g))
    else:
        print(emit_graph6(g).decode("ascii"))
    if args.labels:
        payload = json.dumps(
            {"labels": {str(v): lab for v, lab in sorted(g.labels.items())}},
            separators=(",", ":"),
        )
        if args.labels == "-":
            print(payload)
        else:
            with open(args.labels, "w", encoding="ascii") as fh:
                fh.write(payload + "\n")
    return 0


# -- verify -------------------------------------------------------------------

def _parse_k_range(spec: str):
    ks = []
    for part in spec.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            ks.extend(range(int(lo), int(hi) + 1))
        elif part:
            ks.append(int(part))
    return ks


def _parse_lily_cases(spec: str):
    cases = []
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        nums = [int(x) for x in part.split(",")]
        if len(nums) == 2:
            nums.append(0)
        if len(nums) != 3:
            raise InvalidParamsError(f"lily case must be k,m[,z]: {part!r}")
        cases.append(tuple(nums))
    return cases


def cmd_verify(args) -> int:
    try:
        if args.family == "bunch":
            results = constructions.verify_bunch_family(_parse_k_range(args.k))
        else:
            results = constructions.verify_lily_family(_parse_lily_cases(args.cases))
    except (InvalidParamsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    as_json = _want_json(args)
    failed = [r for r in results if not r.passed]
    if as_json:
        for r in results:
            print(
                json.dumps(
                    {
                        "case": r.name,
                        "order": r.order,
                        "count": r.matched_count,
                        "proportion": {
                            "num": r.proportion.numerator,
                            "den": r.proportion.denominator,
                        },
                        "passed": r.passed,
                        "failures": list(r.failures),
                        "graph6": r.graph6,
                    },
                    separators=(",", ":"),
                )
            )
    else:
        rows = [
            (
                r.name,
                r.order,
                r.matched_count,
                f"{r.proportion.numerator}/{r.proportion.denominator}",
                "PASS" if r.passed else "FAIL",
            )
            for r in results
        ]
        _print_table(rows, ("case", "order", "count", "proportion", "result"))
    for r in failed:
        print(f"counterexample {r.name}: {r.graph6}", file=sys.stderr)
        for msg in r.failures:
            print(f"  {msg}", file=sys.stderr)
    return 3 if failed else 0


# -- search -------------------------------------------------------------------

def _filter_from_args(args) -> SearchFilter:
    proportion = None
    if args.min_proportion is not None:
        proportion = Fraction(args.min_proportion)
    delta_target = None
    if args.delta is not None:
        delta_target = (args.delta, args.min_count if args.min_count else 1)
    elif args.min_count:
        raise InvalidParamsError("--min-count requires --delta")
    return SearchFilter(
        min_good_count=args.min_good_count,
        min_good_proportion=proportion,
        require_all_good=args.all_good,
        delta_target=delta_target,
        max_order=args.max_order,
    )


def cmd_search(args) -> int:
    try:
        filt = _filter_from_args(args)
    except (InvalidParamsError, ValueError, ZeroDivisionError) as exc:
        print(f"error: invalid filter: {exc}", file=sys.stderr)
        return 1
    if args.enumerate is not None:
        try:
            records = enumerate_connected(args.enumerate)
        except (OrderTooLargeError, InvalidParamsError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    elif args.input is None or args.input == "-":
        records = (line.rstrip("\n") for line in sys.stdin)
    else:
        try:
            fh = open(args.input, "r", encoding="ascii")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        records = (line.rstrip("\n") for line in fh)
    summary = ScanSummary()
    try:
        for result in scan_stream(
            records,
            filt,
            workers=args.threads,
            on_malformed=args.on_malformed,
            summary=summary,
        ):
            print(json.dumps(result.to_json_dict(), separators=(",", ":")))
    except MalformedRecordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit_summary(summary, args)
        return 1
    _emit_summary(summary, args)
    return 0


def _emit_summary(summary: ScanSummary, args) -> None:
    payload = json.dumps(summary.to_json_dict(), separators=(",", ":"))
    if args.summary_file:
        with open(args.summary_file, "w", encoding="ascii") as fh:
            fh.write(payload + "\n")
    else:
        print(payload, file=sys.stderr)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wienerlab",
        description="Wiener-index vertex-deletion analysis, constructions, and search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze one graph")
    p_an.add_argument("input", nargs="?", help="input path or - for stdin")
    p_an.add_argument(
        "--format",
        choices=("graph6", "edgelist"),
        default=_env("FORMAT", "graph6"),
    )
    p_an.add_argument("--json", action="store_true", help="force JSON output")
    p_an.set_defaults(func=cmd_analyze)

    p_co = sub.add_parser("construct", help="emit a constructed graph")
    fam = p_co.add_subparsers(dest="family", required=True)
    p_bunch = fam.add_parser("bunch")
    p_bunch.add_argument("--k", type=int, required=True)
    p_lily = fam.add_parser("lily")
    p_lily.add_argument("--k", type=int, required=True)
    p_lily.add_argument("--m", type=int, required=True)
    p_lily.add_argument("--z", type=int, default=0)
    fam.add_parser("chorded12")
    for name in ("cycle", "path", "complete"):
        p = fam.add_parser(name)
        p.add_argument("--n", type=int, required=True)
    for p in (p_bunch, p_lily, *(fam.choices[n] for n in ("chorded12", "cycle", "path", "complete"))):
        p.add_argument(
            "--out-format",
            choices=("graph6", "edgelist"),
            default=_env("OUT_FORMAT", "graph6"),
        )
        p.add_argument("--labels", help="write label map JSON to PATH (- for stdout)")
        p.set_defaults(func=cmd_construct)

    p_ve = sub.add_parser("verify", help="verify construction families")
    vfam = p_ve.add_subparsers(dest="family", required=True)
    p_vb = vfam.add_parser("bunch")
    p_vb.add_argument("--k", required=True, help="range like 2..20 or list like 2,5,9")
    p_vl = vfam.add_parser("lily")
    p_vl.add_argument("--cases", required=True, help="semicolon-separated k,m[,z] triples")
    for p in (p_vb, p_vl):
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=cmd_verify)

    p_se = sub.add_parser("search", help="scan a graph6 stream")
    p_se.add_argument("input", nargs="?", help="input path or - for stdin")
    p_se.add_argument("--enumerate", type=int, metavar="N",
                      help="scan the internal enumeration of connected graphs on N vertices")
    p_se.add_argument("--all-good", action="store_true")
    p_se.add_argument("--min-proportion", metavar="P/Q")
    p_se.add_argument("--min-good-count", type=int)
    p_se.add_argument("--delta", type=int, metavar="Z")
    p_se.add_argument("--min-count", type=int)
    p_se.add_argument("--max-order", type=int)
    p_se.add_argument(
        "--threads",
        type=int,
        default=int(_env("THREADS", str(os.cpu_count() or 1))),
    )
    p_se.add_argument("--summary-file", default=_env("SUMMARY_FILE", None))
    p_se.add_argument(
        "--on-malformed",
        choices=("skip", "abort"),
        default=_env("ON_MALFORMED", "abort"),
    )
    p_se.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
