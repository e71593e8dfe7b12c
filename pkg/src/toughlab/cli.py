"""Command-line front end: ``toughlab <subcommand>``.

Exit codes: 0 success, 1 a check failed, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import families as fam
from .graph import Graph, maximum_independent_set, popcount, vertex_connectivity
from .io import read_graph, write_graph
from .report import (
    DEFAULT_TIMEOUT,
    PASS,
    ReportFormatError,
    certify_document,
    format_table,
    labels,
    minimality_json,
    report_document,
    run_verification,
    toughness_json,
)
from .sweep import default_jobs
from .engine import is_minimally_tough, toughness

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_k_range(text: str) -> list[int]:
    """``"5"`` or ``"3..8"`` (inclusive) -> list of k."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad k range {text!r}; use K or A..B") from None
    if b < a:
        raise UsageError(f"empty k range {text!r}")
    return list(range(a, b + 1))


def _read_input(path: Optional[str]) -> Graph:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
    return read_graph(text)


def _graph_from_args(args: argparse.Namespace) -> tuple[Graph, Optional[fam.FamilyId]]:
    if getattr(args, "kind", None):
        if args.k is None:
            raise UsageError("--kind needs --k")
        ks = parse_k_range(args.k)
        if len(ks) != 1:
            raise UsageError("this command takes a single k")
        fid = fam.family_id(args.kind, ks[0])
        return fam.family_graph(fid), fid
    return _read_input(args.input), None


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_family(args: argparse.Namespace) -> int:
    if args.k is None:
        raise UsageError("--k is required")
    ks = parse_k_range(args.k)
    if len(ks) != 1:
        raise UsageError("family takes a single k")
    text = write_graph(fam.family_graph(fam.family_id(args.kind, ks[0])), args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_toughness(args: argparse.Namespace) -> int:
    g, _ = _graph_from_args(args)
    t0 = time.perf_counter()
    result = toughness(g, jobs=args.jobs)
    _emit(toughness_json(result, g.n, (time.perf_counter() - t0) * 1000))
    return EXIT_OK


def cmd_alpha(args: argparse.Namespace) -> int:
    g, _ = _graph_from_args(args)
    mis = maximum_independent_set(g)
    _emit({"alpha": popcount(mis), "n": g.n, "witness": labels(mis)})
    return EXIT_OK


def cmd_kappa(args: argparse.Namespace) -> int:
    g, _ = _graph_from_args(args)
    _emit({"kappa": vertex_connectivity(g), "n": g.n})
    return EXIT_OK


def cmd_minimal(args: argparse.Namespace) -> int:
    g, fid = _graph_from_args(args)
    hint = fam.canonical_hints(fid) if fid is not None and not args.no_canonical else None
    report = is_minimally_tough(g, witness_hint=hint, jobs=args.jobs)
    _emit(minimality_json(report))
    return EXIT_OK if report.minimally_tough else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    k_text = args.k_range or args.k
    if k_text is None:
        raise UsageError("verify needs --k or --k-range")
    kind = fam.FamilyKind.parse(args.kind)
    ks = parse_k_range(k_text)
    for k in ks:
        fam.family_id(kind, k)
    canonical = not args.no_canonical
    reports = run_verification(kind, ks, canonical=canonical, jobs=args.jobs, timeout=args.timeout)
    doc = report_document(kind, ks, canonical, reports)
    report_path = Path(args.report or f"verify-{kind.value}-k{ks[0]}-{ks[-1]}.json")
    report_path.write_text(json.dumps(doc, indent=2) + "\n")
    print(format_table(reports))
    print(f"report written to {report_path}")
    return EXIT_OK if doc["all_pass"] else EXIT_FAIL


def cmd_certify(args: argparse.Namespace) -> int:
    try:
        doc = json.loads(Path(args.report_file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ReportFormatError(f"cannot load {args.report_file}: {exc}") from exc
    failures = certify_document(doc)
    n_entries = len(doc["reports"])
    if failures:
        for line in failures:
            print(f"FAIL {line}")
        print(f"{len(failures)} certificate failure(s) across {n_entries} report(s)")
        return EXIT_FAIL
    print(f"{PASS}: all certificates in {n_entries} report(s) check")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toughlab",
        description="Exact toughness computation and verification of minimally t-tough circulant families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def jobs_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--jobs", type=int, default=None,
                       help="worker processes (default: $TOUGHLAB_JOBS or 1)")

    def graph_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", help="graph6 or edge-list file; '-' or omitted for stdin")
        p.add_argument("--kind", choices=["4reg", "6reg"], help="use a family graph instead of input")
        p.add_argument("--k", help="family parameter")

    p = sub.add_parser("family", help="write a family graph")
    p.add_argument("--kind", choices=["4reg", "6reg"], required=True)
    p.add_argument("--k", help="family parameter (k >= 3)")
    p.add_argument("--format", choices=["graph6", "edgelist", "dot"], default="graph6")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("toughness", help="exact toughness with a witness cut (JSON)")
    graph_source(p)
    jobs_flag(p)
    p.set_defaults(func=cmd_toughness)

    p = sub.add_parser("alpha", help="independence number (JSON)")
    graph_source(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("kappa", help="vertex connectivity (JSON)")
    graph_source(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("minimal", help="minimal toughness check with per-edge certificates (JSON)")
    graph_source(p)
    jobs_flag(p)
    p.add_argument("--no-canonical", action="store_true", help="ignore family witnesses; search every edge")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("verify", help="verify a family theorem over a range of k")
    p.add_argument("--kind", choices=["4reg", "6reg"], required=True)
    p.add_argument("--k", help="K or A..B")
    p.add_argument("--k-range", help="A..B (same as --k A..B)")
    jobs_flag(p)
    p.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT,
                   help="seconds per k; 0 disables (default %(default)g)")
    p.add_argument("--report", help="JSON report path")
    p.add_argument("--no-canonical", action="store_true",
                   help="search every edge instead of trying the family's witnesses first")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="re-check a verify report without the toughness engine")
    p.add_argument("report_file")
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        try:
            args.jobs = default_jobs()
        except ValueError as exc:
            print(f"toughlab: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        print("toughlab: error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"toughlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
