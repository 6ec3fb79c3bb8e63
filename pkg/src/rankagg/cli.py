"""Command-line front end.

Subcommands: ``distance`` (between two rankings), ``aggregate`` (one method),
``compare`` (all applicable methods side by side), and ``repro-table1``
(replay the built-in comparison example against its stored expectations).

Exit codes: 0 on success, 1 on validation errors, 2 when a reproduction
check mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from rankagg import table1
from rankagg.baselines import best_input_vote, borda, exhaustive_opt, plurality
from rankagg.core import VoteProfile
from rankagg.distances import (
    EXACT_CAP,
    ExactSizeError,
    footrule_path_metric,
    kendall_tau,
    kendall_tau_metric,
    profile_objective,
    spearman_footrule_metric,
    weighted_kendall_metric,
)
from rankagg.markov import mc_aggregate
from rankagg.matching import aggregate_matching, bmls
from rankagg.results import AggregationResult
from rankagg.votefiles import load_votes, parse_ranking_text
from rankagg.weights import PathTable, WeightVector, expand_weights

METHODS = (
    "opt",
    "matching",
    "bmls",
    "mc",
    "mc1",
    "mc2",
    "mc3",
    "best-input",
    "plurality",
    "borda",
    "all",
)

_METRICS = ("kendall", "tau", "footrule", "footrule-d")


class _Parser(argparse.ArgumentParser):
    """Argument errors exit 1 with a single machine-parsable line."""

    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rankagg",
        description="Weighted-distance rank aggregation over full rankings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--weights",
            default="uniform",
            help="weight spec: explicit list '1,0.5,0,0', 'uniform', 'arithmetic', "
            "'geometric:C' (weights C**(i-1), 0 <= C < 1), or 'topk:K'",
        )
        p.add_argument(
            "--space",
            choices=("ranks", "elements"),
            default="ranks",
            help="apply weights to rank positions (default) or to elements, "
            "i.e. compute on inverted rankings",
        )
        p.add_argument(
            "--format", choices=("json", "table"), default="table", dest="fmt"
        )
        p.add_argument(
            "--exact-cap",
            type=int,
            default=EXACT_CAP,
            help=f"largest size for exact distance search (default {EXACT_CAP}); "
            "bigger elections report path-table bounds",
        )

    d = sub.add_parser("distance", help="distance between two rankings")
    d.add_argument("ranking_a", help="first ranking, e.g. '1,2,3,4,5'")
    d.add_argument("ranking_b", help="second ranking")
    d.add_argument(
        "--metric",
        choices=_METRICS,
        default="kendall",
        help="kendall = exact weighted distance from --weights; tau and footrule "
        "are the classical unweighted distances; footrule-d sums path-table "
        "weights between each candidate's two ranks",
    )
    common(d)

    def votes_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--votes", required=True, help="vote file path")
        p.add_argument("--layout", choices=("rows", "matrix"), default="rows")

    a = sub.add_parser("aggregate", help="aggregate a profile with one method")
    votes_args(a)
    a.add_argument("--method", choices=METHODS, default="bmls")
    common(a)

    c = sub.add_parser("compare", help="run every applicable method and tabulate")
    votes_args(c)
    common(c)

    r = sub.add_parser(
        "repro-table1",
        help="replay the built-in 11-vote example and diff against expectations",
    )
    r.add_argument("--format", choices=("json", "table"), default="table", dest="fmt")
    return parser


def _metric_for(name: str, w: WeightVector, exact_cap: int):
    if name == "kendall":
        return weighted_kendall_metric(w, cap=exact_cap)
    if name == "tau":
        return kendall_tau_metric()
    if name == "footrule":
        return spearman_footrule_metric()
    return footrule_path_metric(PathTable.from_adjacent(w))


def _invert_profile(profile: VoteProfile) -> VoteProfile:
    return VoteProfile(tuple(vote.inverse() for vote in profile.votes))


def _run_method(
    name: str, profile: VoteProfile, w: WeightVector, exact_cap: int
) -> AggregationResult:
    if name == "opt":
        objective = profile_objective(profile, w, exact_cap=exact_cap)
        return exhaustive_opt(profile, objective.metric, exact=objective.exact)
    if name == "matching":
        return aggregate_matching(profile, w, exact_cap=exact_cap)
    if name == "bmls":
        return bmls(profile, w, exact_cap=exact_cap)
    if name == "mc":
        return mc_aggregate(profile, w, "weighted", exact_cap=exact_cap)
    if name in ("mc1", "mc2", "mc3"):
        return mc_aggregate(profile, w, int(name[2]), exact_cap=exact_cap)
    if name == "best-input":
        objective = profile_objective(profile, w, exact_cap=exact_cap)
        return best_input_vote(profile, objective.metric, exact=objective.exact)
    if name in ("plurality", "borda"):
        ranking = plurality(profile) if name == "plurality" else borda(profile)
        objective = profile_objective(profile, w, exact_cap=exact_cap)
        cumulative, average = objective.evaluate(ranking)
        return AggregationResult(
            method=name,
            ranking=ranking,
            cumulative=cumulative,
            average=average,
            exact=objective.exact,
            diagnostics={},
        )
    raise ValueError(f"unknown method {name!r}")


def _run_in_space(
    name: str, profile: VoteProfile, w: WeightVector, exact_cap: int, space: str
) -> AggregationResult:
    """Run one method; in element space the votes are inverted first and the
    resulting ranking inverted back, which leaves objective values intact."""
    if space == "ranks":
        return _run_method(name, profile, w, exact_cap)
    result = _run_method(name, _invert_profile(profile), w, exact_cap)
    diagnostics = dict(result.diagnostics)
    diagnostics["space"] = "elements"
    return AggregationResult(
        method=result.method,
        ranking=result.ranking.inverse(),
        cumulative=result.cumulative,
        average=result.average,
        exact=result.exact,
        diagnostics=diagnostics,
    )


def _fmt_avg(value: float) -> str:
    return f"{value:.6g}"


def _print_results_table(results: list[AggregationResult], skipped: dict[str, str]) -> None:
    rows = [("method", "ranking", "average", "cumulative", "objective")]
    for res in results:
        rows.append(
            (
                res.method,
                "[" + ",".join(str(c) for c in res.ranking.seq) + "]",
                _fmt_avg(res.average),
                _fmt_avg(res.cumulative),
                "exact" if res.exact else "bound",
            )
        )
    for name, reason in skipped.items():
        rows.append((name, "-", "-", "-", f"skipped: {reason}"))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    for row in rows:
        print("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())


def _report(
    profile: VoteProfile,
    w: WeightVector,
    space: str,
    results: list[AggregationResult],
    skipped: dict[str, str],
    agreement: dict[str, int] | None = None,
) -> dict:
    report: dict = {
        "n": profile.n,
        "m": profile.m,
        "weights": list(w.w),
        "space": space,
        "results": [res.to_dict() for res in results],
    }
    if skipped:
        report["skipped"] = skipped
    if agreement is not None:
        report["agreement"] = agreement
    return report


def _cmd_distance(args: argparse.Namespace) -> int:
    a = parse_ranking_text(args.ranking_a)
    b = parse_ranking_text(args.ranking_b)
    if a.n != b.n:
        raise ValueError(f"rankings have different sizes: {a.n} vs {b.n}")
    w = expand_weights(args.weights, a.n)
    metric = _metric_for(args.metric, w, args.exact_cap)
    if args.space == "elements":
        a, b = a.inverse(), b.inverse()
    value = metric.distance(a, b)
    if args.fmt == "json":
        print(
            json.dumps(
                {"metric": metric.name, "space": args.space, "distance": value}
            )
        )
    else:
        print(_fmt_avg(value))
    return 0


def _cmd_aggregate(args: argparse.Namespace) -> int:
    profile = load_votes(args.votes, args.layout)
    w = expand_weights(args.weights, profile.n)
    if args.method == "all":
        return _compare(profile, w, args)
    result = _run_in_space(args.method, profile, w, args.exact_cap, args.space)
    if args.fmt == "json":
        print(json.dumps(_report(profile, w, args.space, [result], {}), indent=2))
    else:
        _print_results_table([result], {})
    return 0


def _compare(profile: VoteProfile, w: WeightVector, args: argparse.Namespace) -> int:
    results: list[AggregationResult] = []
    skipped: dict[str, str] = {}
    for name in METHODS[:-1]:
        try:
            results.append(_run_in_space(name, profile, w, args.exact_cap, args.space))
        except ExactSizeError as exc:
            skipped[name] = str(exc)
    agreement = {
        f"{x.method}|{y.method}": kendall_tau(x.ranking, y.ranking)
        for i, x in enumerate(results)
        for y in results[i + 1 :]
    }
    if args.fmt == "json":
        print(
            json.dumps(
                _report(profile, w, args.space, results, skipped, agreement), indent=2
            )
        )
    else:
        _print_results_table(results, skipped)
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    profile = load_votes(args.votes, args.layout)
    w = expand_weights(args.weights, profile.n)
    return _compare(profile, w, args)


def _cmd_repro(args: argparse.Namespace) -> int:
    profile = table1.profile()
    cells = []
    ok_all = True
    for wi, weights in enumerate(table1.WEIGHT_VECTORS):
        w = WeightVector(weights)
        for method in ("opt", "bmls", "mc"):
            result = _run_method(method, profile, w, EXACT_CAP)
            expected = table1.EXPECTED_AVERAGE[method][wi]
            ok = abs(result.average - expected) <= table1.AVERAGE_TOLERANCE
            ok_all = ok_all and ok
            cells.append(
                {
                    "method": method,
                    "weights": list(weights),
                    "ranking": list(result.ranking.seq),
                    "average": result.average,
                    "expected": expected,
                    "ok": ok,
                }
            )
    if args.fmt == "json":
        print(json.dumps({"ok": ok_all, "cells": cells}, indent=2))
    else:
        header = ("method", "weights", "ranking", "average", "expected", "status")
        rows = [header]
        for cell in cells:
            rows.append(
                (
                    cell["method"],
                    "[" + ",".join(str(int(x)) for x in cell["weights"]) + "]",
                    "[" + ",".join(str(c) for c in cell["ranking"]) + "]",
                    _fmt_avg(cell["average"]),
                    _fmt_avg(cell["expected"]),
                    "ok" if cell["ok"] else "MISMATCH",
                )
            )
        widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
        for row in rows:
            print("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        print(f"{sum(c['ok'] for c in cells)}/{len(cells)} cells match")
    return 0 if ok_all else 2


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "distance":
            return _cmd_distance(args)
        if args.command == "aggregate":
            return _cmd_aggregate(args)
        if args.command == "compare":
            return _cmd_compare(args)
        return _cmd_repro(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
