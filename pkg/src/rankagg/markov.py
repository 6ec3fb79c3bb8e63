"""Chain-based aggregation: candidates are states, votes shape the transitions.

Three count-based transition rules (cases 1 to 3) plus a weighted rule that
feeds adjacent-swap weights into the chain. Under the weighted rule a vote
moves from candidate ``i`` to a better-ranked candidate ``j`` with rate

    beta_ij = max over l in [rank(j), rank(i)) of w(l : rank(i)) / (rank(i) - l)

where ``w(k : l)`` sums the swap weights between ranks ``k`` and ``l``; the
self rate ``beta_ii`` collects the rates of everyone ranked below ``i``. Rows
are normalized per vote and averaged across the profile.

Candidates that every vote keeps near the top can become absorbing states
(averaged self-transition exactly 1). They are peeled: removed from every
vote, the chain is rebuilt over the survivors, and the peeled candidates are
prepended to the final ranking. Survivors keep their original rank positions
while peeling, so the swap weights stay attached to the ranks they describe.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from rankagg.core import Ranking, VoteProfile
from rankagg.distances import EXACT_CAP, profile_objective
from rankagg.results import AggregationResult
from rankagg.weights import WeightVector

# (candidate, rank) pairs ordered by rank; ranks keep their original values
# after candidates are peeled, so the sequence may skip positions.
PositionedVote = tuple[tuple[int, int], ...]

ABSORBING_TOL = 1e-12

_CASES = (1, 2, 3, "weighted")


def _positioned(profile: VoteProfile) -> list[PositionedVote]:
    return [
        tuple((cand, rank) for rank, cand in enumerate(vote.seq, start=1))
        for vote in profile.votes
    ]


def alpha_counts(profile: VoteProfile) -> np.ndarray:
    """``alpha[i-1, j-1]`` counts votes ranking candidate ``j`` at least as high as ``i``."""
    pos = np.array([vote.pos for vote in profile.votes])
    return (pos[:, None, :] <= pos[:, :, None]).sum(axis=0)


def _beta_one(pvote: PositionedVote, w: WeightVector, index: dict[int, int]) -> np.ndarray:
    size = len(index)
    beta = np.zeros((size, size))
    for ci, ri in pvote:
        i = index[ci]
        for cj, rj in pvote:
            if rj < ri:
                beta[i, index[cj]] = max(
                    w.weight_between(l, ri) / (ri - l) for l in range(rj, ri)
                )
    for ci, ri in pvote:
        i = index[ci]
        beta[i, i] = sum(beta[index[ck], i] for ck, rk in pvote if rk > ri)
    return beta


def beta_matrix(vote: Ranking, w: WeightVector) -> np.ndarray:
    """Weighted transition rates of a single vote, rows indexed by candidate id."""
    if w.n != vote.n:
        raise ValueError(f"weight vector spans {w.n} ranks, vote has {vote.n}")
    pvote = tuple((cand, rank) for rank, cand in enumerate(vote.seq, start=1))
    index = {cand: cand - 1 for cand in range(1, vote.n + 1)}
    return _beta_one(pvote, w, index)


def _chain(
    pvotes: Sequence[PositionedVote],
    candidates: Sequence[int],
    case,
    w: WeightVector | None,
) -> np.ndarray:
    """Row-stochastic transition matrix over ``candidates`` for the given rule."""
    index = {c: i for i, c in enumerate(candidates)}
    size = len(candidates)
    m = len(pvotes)
    ranks = np.empty((m, size))
    for v, pvote in enumerate(pvotes):
        for cand, rank in pvote:
            ranks[v, index[cand]] = rank

    if case == 1:
        weakly_above = (ranks[:, None, :] <= ranks[:, :, None]).sum(axis=0)
        indicator = (weakly_above > 0).astype(float)
        return indicator / indicator.sum(axis=1, keepdims=True)

    if case == 2:
        # Per vote, each candidate moves uniformly over everyone ranked
        # weakly above it (itself included), then votes are averaged.
        acc = np.zeros((size, size))
        for v in range(m):
            above = (ranks[v][None, :] <= ranks[v][:, None]).astype(float)
            acc += above / above.sum(axis=1, keepdims=True)
        return acc / m

    if case == 3:
        # Per vote, move to each strictly better candidate with probability
        # 1/size and stay otherwise.
        acc = np.zeros((size, size))
        for v in range(m):
            strictly_above = (ranks[v][None, :] < ranks[v][:, None]).astype(float)
            row = strictly_above / size
            np.fill_diagonal(row, 0.0)
            np.fill_diagonal(row, 1.0 - row.sum(axis=1))
            acc += row
        return acc / m

    if case == "weighted":
        if w is None:
            raise ValueError("the weighted rule needs a weight vector")
        acc = np.zeros((size, size))
        for pvote in pvotes:
            beta = _beta_one(pvote, w, index)
            sums = beta.sum(axis=1)
            rows = np.zeros_like(beta)
            for i in range(size):
                if sums[i] == 0.0:
                    rows[i, i] = 1.0  # degenerate all-zero row: stay put
                else:
                    rows[i] = beta[i] / sums[i]
            acc += rows
        return acc / m

    raise ValueError(f"unknown transition rule {case!r}; expected one of {_CASES}")


def transitions_case1(profile: VoteProfile) -> np.ndarray:
    """Uniform moves over every candidate anyone ever ranked weakly above."""
    return _chain(_positioned(profile), range(1, profile.n + 1), 1, None)


def transitions_case2(profile: VoteProfile) -> np.ndarray:
    """Per-vote uniform moves over the weakly-above prefix, averaged."""
    return _chain(_positioned(profile), range(1, profile.n + 1), 2, None)


def transitions_case3(profile: VoteProfile) -> np.ndarray:
    """Per-vote 1/n moves to strictly better candidates, averaged."""
    return _chain(_positioned(profile), range(1, profile.n + 1), 3, None)


def transitions_weighted(profile: VoteProfile, w: WeightVector) -> np.ndarray:
    """Swap-weight driven transitions, normalized per vote and averaged."""
    if w.n != profile.n:
        raise ValueError(f"weight vector spans {w.n} ranks, profile has {profile.n}")
    return _chain(_positioned(profile), range(1, profile.n + 1), "weighted", w)


def stationary(P: np.ndarray, *, tol: float = 1e-9, max_iter: int = 10**6) -> np.ndarray:
    """Equilibrium distribution of a row-stochastic chain.

    Power iteration from the uniform vector, so reducible chains yield a
    deterministic result. Alongside the plain iterates a running average is
    tracked to cover periodic chains; whichever first reaches a residual
    below ``tol`` is returned. Raises after ``max_iter`` steps without
    convergence.
    """
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ValueError(f"transition matrix must be square, got {P.shape}")
    n = P.shape[0]
    check = tol / 2.0
    x = np.full(n, 1.0 / n) @ P  # first iterate
    first = x.copy()
    acc = x.copy()  # running sum of iterates 1..t
    t = 1
    while t <= max_iter:
        x_next = x @ P
        # each check measures the residual of the vector it returns; the
        # averaged iterate's residual telescopes to |x_next - first| / t
        if np.max(np.abs(x_next - x)) < check:
            return x / x.sum()
        if np.max(np.abs(x_next - first)) / t < check:
            out = acc / t
            return out / out.sum()
        acc += x_next
        x = x_next
        t += 1
    raise RuntimeError(f"stationary distribution did not converge in {max_iter} iterations")


def _mean_ranks(pvotes: Sequence[PositionedVote]) -> dict[int, float]:
    totals: dict[int, float] = {}
    for pvote in pvotes:
        for cand, rank in pvote:
            totals[cand] = totals.get(cand, 0.0) + rank
    return {cand: total / len(pvotes) for cand, total in totals.items()}


def mc_aggregate(
    profile: VoteProfile,
    w: WeightVector,
    case=("weighted"),
    *,
    exact_cap: int = EXACT_CAP,
    absorbing_tol: float = ABSORBING_TOL,
) -> AggregationResult:
    """Rank candidates by stationary probability, peeling absorbing states.

    Builds the selected chain, detects candidates whose averaged
    self-transition equals 1, peels them all at once (ordered by mean rank
    across votes, ties by id), rebuilds the chain over the survivors, and
    repeats. Once no absorbing state remains, survivors are ordered by
    descending stationary probability with ties by ascending candidate id.
    ``w`` always drives the reported objective; the chain uses it only under
    the weighted rule.
    """
    if case not in _CASES:
        raise ValueError(f"unknown transition rule {case!r}; expected one of {_CASES}")
    if w.n != profile.n:
        raise ValueError(f"weight vector spans {w.n} ranks, profile has {profile.n}")
    pvotes = _positioned(profile)
    remaining = list(range(1, profile.n + 1))
    order: list[int] = []
    rounds: list[dict] = []
    while remaining:
        P = _chain(pvotes, remaining, case, w)
        pi = stationary(P)
        diagonal = np.diag(P)
        absorbing = [
            c for i, c in enumerate(remaining) if diagonal[i] >= 1.0 - absorbing_tol
        ]
        rounds.append(
            {
                "candidates": list(remaining),
                "stationary": [float(x) for x in pi],
                "absorbing": list(absorbing),
            }
        )
        if absorbing:
            mean_rank = _mean_ranks(pvotes)
            absorbing.sort(key=lambda c: (mean_rank[c], c))
            order.extend(absorbing)
            gone = set(absorbing)
            remaining = [c for c in remaining if c not in gone]
            pvotes = [
                tuple((cand, rank) for cand, rank in pvote if cand not in gone)
                for pvote in pvotes
            ]
        else:
            index = {c: i for i, c in enumerate(remaining)}
            order.extend(sorted(remaining, key=lambda c: (-pi[index[c]], c)))
            remaining = []
    ranking = Ranking(tuple(order))
    objective = profile_objective(profile, w, exact_cap=exact_cap)
    cumulative, average = objective.evaluate(ranking)
    method = "mc" if case == "weighted" else f"mc{case}"
    return AggregationResult(
        method=method,
        ranking=ranking,
        cumulative=cumulative,
        average=average,
        exact=objective.exact,
        diagnostics={
            "case": str(case),
            "rounds": rounds,
            "objective": "exact" if objective.exact else "bound",
        },
    )
