"""Command-line front end: construct, verify, analyze, bound and search.

Exit codes: 0 success (member / SAT), 1 verification failure or UNSAT,
2 argument or input errors, 3 search budget exhaustion.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .bounds import bound, corollary_band
from .errors import AchromError
from .families import FAMILIES, ConstructionSpec, construct_best
from .matrix import ColourMatrix, read_matrix, verify_membership, write_matrix
from .search import SearchProblem, SearchStatus, achromatic_exact, exists_matrix
from .stats import stats_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DEFAULT_SEARCH_BUDGET = 5_000_000


def _load_matrix(path: str) -> ColourMatrix:
    return read_matrix(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_construct(args: argparse.Namespace) -> int:
    partition = None
    if args.partition:
        parts = [int(x) for x in args.partition.split(",")]
        if len(parts) != 4:
            raise ValueError("--partition needs four comma-separated integers")
        partition = tuple(parts)
    if args.family:
        spec = ConstructionSpec(args.family, args.q, partition)
        m = spec.build()
    elif partition is not None:
        m = ConstructionSpec("block_16_40", args.q, partition).build()
    else:
        m = construct_best(args.q)
    _emit(write_matrix(m), args.output)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    m = _load_matrix(args.file)
    report = verify_membership(m)
    payload = report.to_dict(m)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"matrix: {m.p} x {m.q}, {len(m.palette)} colours")
        print(f"proper: {report.proper}")
        for v in report.row_violations:
            cols = ", ".join(str(c + 1) for c in v.positions)
            print(f"  row {v.line + 1}: colour {m.palette.token(v.colour)} repeats at columns {cols}")
        for v in report.col_violations:
            rows = ", ".join(str(r + 1) for r in v.positions)
            print(f"  column {v.line + 1}: colour {m.palette.token(v.colour)} repeats at rows {rows}")
        print(f"complete: {report.complete}")
        for a, b in report.missing_pairs[:20]:
            print(f"  missing pair: {m.palette.token(a)}, {m.palette.token(b)}")
        if len(report.missing_pairs) > 20:
            print(f"  ... and {len(report.missing_pairs) - 20} more missing pairs")
        print(f"good pairs: {report.good_pair_count}")
        print(f"member: {report.member}")
    return EXIT_OK if report.member else EXIT_FAIL


def _parse_suite(value: str | None) -> tuple[bool, int | None]:
    if value is None:
        return False, None
    if value == "auto":
        return True, None
    if value.startswith("s="):
        return True, int(value[2:])
    raise ValueError(f"--suite expects 'auto' or 's=<int>', got {value!r}")


def _cmd_analyze(args: argparse.Namespace) -> int:
    m = _load_matrix(args.file)
    run_suite, suite_s = _parse_suite(args.suite)
    extra = []
    for spec in args.cov or []:
        tokens = [t for t in spec.split(",") if t]
        extra.append(frozenset(m.palette.id_of(t) for t in tokens))
    report = stats_report(m, suite_s=suite_s, run_suite=run_suite, extra_coverage=extra)
    if args.report_dir:
        _write_analysis_reports(m, report, Path(args.report_dir))
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        _print_analysis_text(report)
    return EXIT_OK


def _print_analysis_text(report: dict) -> None:
    print(f"matrix: {report['p']} x {report['q']}, {report['palette_size']} colours")
    sizes = report["frequency"]["class_sizes"]
    print("frequency classes:", ", ".join(f"c_{l}={n}" for l, n in sizes.items()))
    print(f"min frequency: {report['frequency']['min_frequency']}")
    print(f"matrix excess: {report['excess']['matrix_excess']}")
    neg = report["excess"]["negative_colours"]
    if neg:
        print(f"colours with negative excess (non-member certificate): {neg}")
    pairs = report["line_stats"]["row_pair_two_colour_counts"]
    busiest = max(pairs, key=lambda e: e["count"], default=None)
    if busiest:
        print(
            f"max two-colour row pair: rows {busiest['rows']} share {busiest['count']}"
        )
    print(f"x-configurations: {len(report['x_configurations'])}")
    graph = report["aux_graph"]
    print(
        f"row graph: {len(graph['edges'])} edges, degree sequence {graph['degree_sequence']}"
    )
    if graph["bipartition"]:
        print(f"  balanced bipartition: {graph['bipartition']}")
        weights = [mt["weight"] for mt in graph["perfect_matchings"]]
        print(f"  perfect matching weights: {weights}")
    suite = report["lemma_plus_m"]
    if suite:
        print(f"surplus checklist (s={suite['s']}):")
        for check in suite["assertions"]:
            flag = "pass" if check["holds"] else "FAIL"
            print(
                f"  [{flag}] {check['name']}: {check['observed']} "
                f"{check['relation']} {check['bound']}"
            )
        print(f"all hold: {suite['all_hold']}")


def _write_analysis_reports(m: ColourMatrix, report: dict, out_dir: Path) -> None:
    from . import figures

    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "stats.json").write_text(
        json.dumps(report, indent=2) + "\n", encoding="utf-8"
    )
    with (out_dir / "frequency.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["token", "frequency", "excess"])
        freq = report["frequency"]["per_colour"]
        exc = report["excess"]["per_colour"]
        for token in freq:
            writer.writerow([token, freq[token], exc[token]])
    figures.save_matrix_figure(m, out_dir / "matrix.png")
    figures.save_profile_figure(m, out_dir / "profile.png")


def _cmd_bound(args: argparse.Namespace) -> int:
    result = bound(args.p, args.q)
    if args.report_dir:
        _write_bound_reports(args.p, args.q, Path(args.report_dir))
    if args.format == "json":
        print(json.dumps(result.to_dict(), indent=2))
    else:
        print(f"p={result.p} q={result.q}")
        print(f"lower: {result.lower}  ({result.lower_source})")
        print(f"upper: {result.upper}  ({result.upper_source})")
        if result.exact is not None:
            print(f"exact: {result.exact}")
            if 6 in (args.p, args.q):
                lo, hi = corollary_band(result.q if args.p == 6 else result.p)
                print(f"band: [{lo}, {hi}]")
        else:
            print("exact: unknown")
    return EXIT_OK


def _write_bound_reports(p: int, q: int, out_dir: Path) -> None:
    from . import figures

    out_dir.mkdir(parents=True, exist_ok=True)
    side = q if p == 6 else p
    hi = max(50, side + 10)
    with (out_dir / "bounds.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["p", "q", "lower", "upper", "exact", "lower_source", "upper_source"])
        for qq in range(1, hi + 1):
            r = bound(6, qq) if p == 6 or q == 6 else bound(p, qq)
            writer.writerow(
                [r.p, r.q, r.lower, r.upper, r.exact, r.lower_source, r.upper_source]
            )
    if p == 6 or q == 6:
        figures.save_bound_sweep_figure(1, hi, out_dir / "bounds.png")


def _cmd_search(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else DEFAULT_SEARCH_BUDGET
    deterministic = not args.nondeterministic
    if args.max:
        result = achromatic_exact(
            args.p, args.q, node_budget=budget, jobs=args.jobs, deterministic=deterministic
        )
        witness_text = write_matrix(result.witness)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "value": result.value,
                        "certified": result.certified,
                        "nodes_explored": result.nodes_explored,
                        "witness": witness_text,
                    },
                    indent=2,
                )
            )
        else:
            status = "certified" if result.certified else "lower bound (budget exhausted)"
            print(f"achromatic number: {result.value} ({status})")
            print(f"nodes explored: {result.nodes_explored}")
            print("witness:")
            sys.stdout.write(witness_text)
        if args.output:
            Path(args.output).write_text(witness_text, encoding="utf-8")
        return EXIT_OK if result.certified else EXIT_BUDGET

    problem = SearchProblem(
        args.p, args.q, args.n, node_budget=budget, deterministic=deterministic
    )
    outcome = exists_matrix(problem, jobs=args.jobs)
    witness_text = write_matrix(outcome.witness) if outcome.witness else None
    if args.format == "json":
        print(
            json.dumps(
                {
                    "status": outcome.status.value,
                    "nodes_explored": outcome.nodes_explored,
                    "branch_nodes": list(outcome.branch_nodes),
                    "witness": witness_text,
                },
                indent=2,
            )
        )
    else:
        print(f"status: {outcome.status.value}")
        print(f"nodes explored: {outcome.nodes_explored}")
        if witness_text:
            print("witness:")
            sys.stdout.write(witness_text)
    if outcome.status is SearchStatus.SAT:
        if args.output and witness_text:
            Path(args.output).write_text(witness_text, encoding="utf-8")
        return EXIT_OK
    if outcome.status is SearchStatus.UNSAT:
        return EXIT_FAIL
    return EXIT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="achrom",
        description="Complete colourings of rook graphs: construct, verify, analyze, bound, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_con = sub.add_parser("construct", help="generate an optimal matrix for q columns")
    p_con.add_argument("--q", type=int, required=True)
    p_con.add_argument("--family", choices=FAMILIES)
    p_con.add_argument("--partition", help="four comma-separated widths for block_16_40")
    p_con.add_argument("-o", "--output", help="write the matrix to this file")
    p_con.set_defaults(func=_cmd_construct)

    p_ver = sub.add_parser("verify", help="check a matrix file for membership")
    p_ver.add_argument("file")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.set_defaults(func=_cmd_verify)

    p_ana = sub.add_parser("analyze", help="full diagnostics report for a matrix file")
    p_ana.add_argument("file")
    p_ana.add_argument(
        "--suite",
        nargs="?",
        const="auto",
        help="run the six-row surplus checklist ('auto' or 's=<int>')",
    )
    p_ana.add_argument(
        "--cov",
        action="append",
        help="extra coverage query: comma-separated colour tokens (repeatable)",
    )
    p_ana.add_argument("--format", choices=("text", "json"), default="text")
    p_ana.add_argument(
        "--report-dir",
        help="write stats.json, frequency.csv and figures into this directory",
    )
    p_ana.set_defaults(func=_cmd_analyze)

    p_bnd = sub.add_parser("bound", help="achromatic bounds for a p x q grid")
    p_bnd.add_argument("--p", type=int, required=True)
    p_bnd.add_argument("--q", type=int, required=True)
    p_bnd.add_argument("--format", choices=("text", "json"), default="text")
    p_bnd.add_argument(
        "--report-dir", help="write bounds.csv and a sweep figure into this directory"
    )
    p_bnd.set_defaults(func=_cmd_bound)

    p_sea = sub.add_parser("search", help="exact existence search / maximum palette")
    p_sea.add_argument("--p", type=int, required=True)
    p_sea.add_argument("--q", type=int, required=True)
    group = p_sea.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="decide existence for exactly n colours")
    group.add_argument("--max", action="store_true", help="find the maximum palette size")
    p_sea.add_argument("--budget", type=int, help=f"node budget (default {DEFAULT_SEARCH_BUDGET})")
    p_sea.add_argument("--jobs", type=int, default=1)
    p_sea.add_argument(
        "--nondeterministic",
        action="store_true",
        help="allow parallel branch exploration with jobs > 1",
    )
    p_sea.add_argument("--format", choices=("text", "json"), default="text")
    p_sea.add_argument("-o", "--output", help="write the witness to this file")
    p_sea.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except (AchromError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
