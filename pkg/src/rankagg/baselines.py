"""Ground-truth optimum and classical baselines for comparison output."""

from __future__ import annotations

import itertools
import math

from rankagg.core import Ranking, VoteProfile
from rankagg.distances import ExactSizeError, Metric
from rankagg.results import AggregationResult

OPT_CAP = 8


def exhaustive_opt(
    profile: VoteProfile,
    metric: Metric,
    *,
    cap: int = OPT_CAP,
    exact: bool = True,
) -> AggregationResult:
    """Global minimizer of the cumulative distance over every possible ranking.

    One distance table per vote is built up front, so the factorial scan is a
    table sum. Among tied optima the lexicographically smallest ranking wins.
    ``exact`` only labels the result; pass False when the metric is a bound.
    """
    n = profile.n
    if n > cap:
        raise ExactSizeError(
            f"exhaustive search unavailable at this size (n={n} exceeds cap {cap})"
        )
    tables = [metric.table_from(vote) for vote in profile.votes]
    best_perm = None
    best_total = math.inf
    optima = 0
    for perm in itertools.permutations(range(1, n + 1)):
        total = 0.0
        for table in tables:
            total += table[perm]
        if total < best_total:
            best_total = total
            best_perm = perm
            optima = 1
        elif total == best_total:
            optima += 1
    assert best_perm is not None
    return AggregationResult(
        method="opt",
        ranking=Ranking(best_perm),
        cumulative=float(best_total),
        average=float(best_total) / profile.m,
        exact=exact,
        diagnostics={"optima": optima},
    )


def best_input_vote(
    profile: VoteProfile,
    metric: Metric,
    *,
    exact: bool = True,
) -> AggregationResult:
    """The vote closest in cumulative distance to all votes (ties: earliest).

    Because the distances satisfy the triangle inequality, this vote's
    cumulative distance is at most twice the optimum.
    """
    best_index = 0
    best_total = math.inf
    for i, vote in enumerate(profile.votes):
        total = 0.0
        for other in profile.votes:
            total += metric.distance(vote, other)
        if total < best_total:
            best_total = total
            best_index = i
    return AggregationResult(
        method="best-input",
        ranking=profile.votes[best_index],
        cumulative=float(best_total),
        average=float(best_total) / profile.m,
        exact=exact,
        diagnostics={"vote_index": best_index + 1},
    )


def plurality(profile: VoteProfile) -> Ranking:
    """Candidates ordered by how often they appear at rank 1; ties by id."""
    counts = [0] * profile.n
    for vote in profile.votes:
        counts[vote.seq[0] - 1] += 1
    order = sorted(range(1, profile.n + 1), key=lambda c: (-counts[c - 1], c))
    return Ranking(tuple(order))


def borda(profile: VoteProfile) -> Ranking:
    """Candidates ordered by total positional score ``n - rank``; ties by id."""
    n = profile.n
    scores = [0] * n
    for vote in profile.votes:
        for c in range(1, n + 1):
            scores[c - 1] += n - vote.pos[c - 1]
    order = sorted(range(1, n + 1), key=lambda c: (-scores[c - 1], c))
    return Ranking(tuple(order))
