"""Command-line front end.

Subcommands:

- ``residue``: trace the degree-sequence reduction and print the residue;
- ``analyze``: per-graph records (residue, alpha, Maxine sizes, class
  memberships, witnesses) for a stream of graph6 lines, as JSON lines or
  CSV;
- ``verify``: run one enumeration-based check and emit its JSON report.

Exit codes: 0 success/verified, 1 violation or non-graphical input, 2
usage or parse errors. Output is byte-deterministic for fixed inputs and
flags. Fields whose exact computation is out of scale for the input are
reported as the explicit string "skipped: scale", never silently omitted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .degseq import ALL_ZERO, NEGATIVE_TERM, hh_reduce
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .graphs import Graph
from .harness import THEOREM_CHECKS
from .independence import (
    ALPHA_MAX_N,
    BRANCH_MAX_N,
    independence_number,
    maxine_all_branches,
    maxine_run,
)
from .recognition import (
    find_matrogenic_config,
    is_threshold,
    strong_hh_witness,
)

# Class-membership scans are polynomial but steep (subset scans up to size
# 6); records for larger inputs mark them skipped.
CLASS_SCAN_MAX_N = 20
SKIPPED = "skipped: scale"

CSV_COLUMNS = (
    "graph6",
    "n",
    "degree_sequence",
    "residue",
    "alpha",
    "maxine_min",
    "maxine_max",
    "in_s",
    "matrogenic_config_free",
    "threshold",
    "witness",
    "error",
)


@dataclass
class AnalysisRecord:
    """Per-graph analysis row; numeric fields hold the string "skipped:
    scale" when the input exceeds the documented exact-computation bounds."""

    graph6: str
    n: int
    degree_sequence: tuple[int, ...]
    residue: int
    alpha: int | str
    maxine_min: int | str
    maxine_max: int | str
    in_s: bool | str
    matrogenic_config_free: bool | str
    threshold: bool | str
    witness: str | None

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "degree_sequence": list(self.degree_sequence),
            "residue": self.residue,
            "alpha": self.alpha,
            "maxine_min": self.maxine_min,
            "maxine_max": self.maxine_max,
            "in_s": self.in_s,
            "matrogenic_config_free": self.matrogenic_config_free,
            "threshold": self.threshold,
            "witness": self.witness,
        }

    def to_csv_row(self) -> list[str]:
        return [
            self.graph6,
            str(self.n),
            " ".join(map(str, self.degree_sequence)),
            str(self.residue),
            str(self.alpha),
            str(self.maxine_min),
            str(self.maxine_max),
            str(self.in_s),
            str(self.matrogenic_config_free),
            str(self.threshold),
            self.witness or "",
            "",
        ]


def analyze_graph(g: Graph, strategy: str = "all-branches", seed: int | None = None) -> AnalysisRecord:
    """Compute one record; exact alpha and Maxine branching respect their
    scale bounds, single-run Maxine strategies have none."""
    trace = hh_reduce(g.degree_sequence())
    r = trace.residue

    alpha: int | str = SKIPPED
    if g.n <= ALPHA_MAX_N:
        alpha = independence_number(g)

    maxine_min: int | str
    maxine_max: int | str
    if strategy == "all-branches":
        if g.n <= BRANCH_MAX_N:
            summary = maxine_all_branches(g)
            maxine_min, maxine_max = summary.min_size, summary.max_size
        else:
            maxine_min = maxine_max = SKIPPED
    else:
        outcome = maxine_run(g, strategy=strategy, seed=seed)
        maxine_min = maxine_max = outcome.size

    in_s: bool | str = SKIPPED
    config_free: bool | str = SKIPPED
    threshold: bool | str = SKIPPED
    witness = None
    if g.n <= CLASS_SCAN_MAX_N:
        w = strong_hh_witness(g)
        in_s = w is None
        if w is not None:
            witness = f"{w.name}:{','.join(map(str, w.vertices))}"
        config_free = find_matrogenic_config(g) is None
        threshold = is_threshold(g)

    return AnalysisRecord(
        graph6=emit_graph6(g),
        n=g.n,
        degree_sequence=g.degree_sequence(),
        residue=r,
        alpha=alpha,
        maxine_min=maxine_min,
        maxine_max=maxine_max,
        in_s=in_s,
        matrogenic_config_free=config_free,
        threshold=threshold,
        witness=witness,
    )


def _format_step(step: tuple[int, ...]) -> str:
    return "(" + ", ".join(map(str, step)) + ")"


def cmd_residue(args: argparse.Namespace, out) -> int:
    try:
        terms = [int(tok) for tok in args.sequence.replace(",", " ").split()]
        if any(t < 0 for t in terms):
            raise ValueError("negative term")
    except ValueError:
        print(f"error: {args.sequence!r} is not a comma-separated list of "
              "nonnegative integers", file=sys.stderr)
        return 2
    trace = hh_reduce(terms)
    if trace.outcome == ALL_ZERO:
        shown = trace.steps
    elif trace.outcome == NEGATIVE_TERM:
        shown = trace.steps[:-1]
    else:
        shown = trace.steps
    for i, step in enumerate(shown):
        print(f"d^{i}: {_format_step(step)}", file=out)
    if trace.outcome == ALL_ZERO:
        print(f"residue: {trace.residue}", file=out)
        return 0
    if trace.outcome == NEGATIVE_TERM:
        k = len(trace.steps) - 1
        print(
            f"not graphical: reducing d^{k - 1} = {_format_step(trace.steps[k - 1])} "
            "produces a negative term",
            file=out,
        )
    else:
        k = len(trace.steps) - 1
        last = trace.steps[k]
        print(
            f"not graphical: d^{k} = {_format_step(last)} has largest term {last[0]} "
            f"but only {len(last) - 1} remaining terms",
            file=out,
        )
    return 1


def cmd_analyze(args: argparse.Namespace, out) -> int:
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input, encoding="ascii") as fh:
            lines = fh.read().splitlines()

    records: list[tuple[int, AnalysisRecord | None, str, str | None]] = []
    had_errors = False
    for lineno, raw in enumerate(lines, start=1):
        token = raw.strip()
        if not token:
            continue
        try:
            g = parse_graph6(token)
        except Graph6Error as exc:
            records.append((lineno, None, token, str(exc)))
            had_errors = True
            continue
        records.append((lineno, analyze_graph(g, args.strategy, args.seed), token, None))

    out_lines: list[str] = []
    if args.format == "json":
        for lineno, rec, token, err in records:
            if rec is None:
                payload: dict = {"line": lineno, "graph6": token, "error": err}
            else:
                payload = {"line": lineno, **rec.to_dict()}
            out_lines.append(json.dumps(payload))
    else:
        out_lines.append(",".join(CSV_COLUMNS))
        for lineno, rec, token, err in records:
            if rec is None:
                row = [token] + [""] * (len(CSV_COLUMNS) - 2) + [err or "parse error"]
            else:
                row = rec.to_csv_row()
            out_lines.append(",".join(_csv_quote(cell) for cell in row))
    print("\n".join(out_lines), file=out)

    if had_errors:
        for lineno, rec, token, err in records:
            if rec is None:
                print(f"line {lineno}: {err}", file=sys.stderr)
        return 2
    return 0


def _csv_quote(cell: str) -> str:
    if any(ch in cell for ch in ',"\n'):
        return '"' + cell.replace('"', '""') + '"'
    return cell


def cmd_verify(args: argparse.Namespace, out) -> int:
    check, default_n = THEOREM_CHECKS[args.theorem]
    n_max = args.max_n if args.max_n is not None else default_n
    try:
        report = check(n_max)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(report.to_dict(), indent=2), file=out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhresidue",
        description="Degree-sequence residues, strong Havel-Hakimi recognition, "
        "independent sets, and enumeration-based checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_res = sub.add_parser("residue", help="trace the reduction of a degree sequence")
    p_res.add_argument("sequence", help='comma-separated terms, e.g. "3,2,2,2,2,1"')

    p_an = sub.add_parser("analyze", help="analyze a stream of graph6 lines")
    p_an.add_argument("--input", default="-", help="graph6 file, or - for stdin")
    p_an.add_argument("--format", choices=("json", "csv"), default="json")
    p_an.add_argument("--out", default=None, help="write the report here instead of stdout")
    p_an.add_argument(
        "--strategy",
        choices=("first", "last", "random", "all-branches"),
        default="all-branches",
        help="Maxine tie-breaking; all-branches explores every choice",
    )
    p_an.add_argument("--seed", type=int, default=0, help="seed for --strategy random")

    p_ver = sub.add_parser("verify", help="run one enumeration-based check")
    p_ver.add_argument("theorem", choices=sorted(THEOREM_CHECKS))
    p_ver.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_ver.add_argument("--out", default=None, help="write the JSON report here")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            return _dispatch(args, fh)
    return _dispatch(args, sys.stdout)


def _dispatch(args: argparse.Namespace, out) -> int:
    if args.command == "residue":
        return cmd_residue(args, out)
    if args.command == "analyze":
        return cmd_analyze(args, out)
    return cmd_verify(args, out)


def run() -> None:
    sys.exit(main())
