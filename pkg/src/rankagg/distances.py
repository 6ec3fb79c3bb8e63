"""Distances between rankings.

The exact weighted Kendall and weighted transposition distances are computed
as shortest paths in the permutation graph: states are rankings, edges apply
one swap, and the edge cost comes from the weight system. Zero-weight edges
are legal, so distinct rankings can sit at distance zero (the distances are
pseudo-metrics whenever some weight vanishes).

Exact search is capped (``EXACT_CAP``, default 9) because the state space is
``n!``. Above the cap, the position-path distance ``generalized_footrule``
remains available at any size; it brackets the exact distance within a factor
of two on either side, so cumulative objectives built from it are reported as
bounds rather than exact values.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, NamedTuple

from rankagg.core import Ranking, VoteProfile
from rankagg.weights import PathTable, TranspositionWeights, WeightVector

EXACT_CAP = 9

# Below this size the permutation graph is materialized once per n and reused;
# above it, searches expand states lazily to bound memory.
_INDEXED_CAP = 7


class ExactSizeError(ValueError):
    """Exact distance requested for a state space too large to search."""


def _check_sizes(p: Ranking, s: Ranking) -> int:
    if p.n != s.n:
        raise ValueError(f"size mismatch: {p.n} vs {s.n}")
    return p.n


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ExactSizeError(
            f"exact distance unavailable at this size (n={n} exceeds cap {cap})"
        )


@lru_cache(maxsize=8)
def _swap_space(n: int):
    """All permutations of 1..n in lexicographic order, plus the adjacent-swap graph."""
    import numpy as np

    perms = list(itertools.permutations(range(1, n + 1)))
    index = {perm: i for i, perm in enumerate(perms)}
    nbrs = np.empty((len(perms), n - 1), dtype=np.int32)
    for i, perm in enumerate(perms):
        for k in range(n - 1):
            swapped = perm[:k] + (perm[k + 1], perm[k]) + perm[k + 2 :]
            nbrs[i, k] = index[swapped]
    return perms, index, nbrs


def _swap_dijkstra_indexed(n, src, dst, weights):
    """Dijkstra over the materialized swap graph; ``dst=None`` returns all distances."""
    import numpy as np

    perms, index, nbrs = _swap_space(n)
    dist = np.full(len(perms), math.inf)
    done = np.zeros(len(perms), dtype=bool)
    s = index[src]
    t = -1 if dst is None else index[dst]
    dist[s] = 0.0
    heap = [(0.0, s)]
    w = list(weights)
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        if u == t:
            return d
        for k, v in enumerate(nbrs[u].tolist()):
            if done[v]:
                continue
            nd = d + w[k]
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    if dst is not None:
        return float(dist[t])
    return {perms[i]: float(dist[i]) for i in range(len(perms))}


def _swap_dijkstra_lazy(src, dst, weights):
    n = len(src)
    w = list(weights)
    dist = {src: 0.0}
    done = set()
    heap = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == dst:
            return d
        for k in range(n - 1):
            v = u[:k] + (u[k + 1], u[k]) + u[k + 2 :]
            if v in done:
                continue
            nd = d + w[k]
            if nd < dist.get(v, math.inf):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    if dst is not None:
        return math.inf
    return dist


def weighted_kendall(p: Ranking, s: Ranking, w: WeightVector, *, cap: int = EXACT_CAP) -> float:
    """Minimum total weight of adjacent swaps transforming ``p`` into ``s``.

    Swapping ranks ``k`` and ``k + 1`` costs ``w[k - 1]`` regardless of which
    candidates sit there. Exact shortest-path search, capped at ``cap``.
    """
    n = _check_sizes(p, s)
    if w.n != n:
        raise ValueError(f"weight vector spans {w.n} ranks, rankings have {n}")
    _check_cap(n, cap)
    if p.seq == s.seq:
        return 0.0
    if n <= _INDEXED_CAP:
        return _swap_dijkstra_indexed(n, p.seq, s.seq, w.w)
    return _swap_dijkstra_lazy(p.seq, s.seq, w.w)


def weighted_kendall_table(
    source: Ranking, w: WeightVector, *, cap: int = EXACT_CAP
) -> Mapping[tuple[int, ...], float]:
    """Distance from ``source`` to every ranking, keyed by ``seq`` tuple."""
    n = source.n
    if w.n != n:
        raise ValueError(f"weight vector spans {w.n} ranks, rankings have {n}")
    _check_cap(n, cap)
    if n <= _INDEXED_CAP:
        return _swap_dijkstra_indexed(n, source.seq, None, w.w)
    return _swap_dijkstra_lazy(source.seq, None, w.w)


def _transposition_moves(phi: TranspositionWeights):
    moves = []
    for a in range(phi.n):
        for b in range(a + 1, phi.n):
            c = phi.phi[a][b]
            if math.isfinite(c):
                moves.append((a, b, c))
    return moves


def _transposition_dijkstra(src, dst, moves):
    dist = {src: 0.0}
    done = set()
    heap = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == dst:
            return d
        lu = list(u)
        for a, b, c in moves:
            lu[a], lu[b] = lu[b], lu[a]
            v = tuple(lu)
            lu[a], lu[b] = lu[b], lu[a]
            if v in done:
                continue
            nd = d + c
            if nd < dist.get(v, math.inf):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    if dst is not None:
        return math.inf
    return dist


def weighted_transposition(
    p: Ranking, s: Ranking, phi: TranspositionWeights, *, cap: int = EXACT_CAP
) -> float:
    """Minimum total weight of arbitrary swaps transforming ``p`` into ``s``.

    Swapping positions ``a`` and ``b`` costs ``phi(a, b)``; infinite entries
    are never used. Returns ``inf`` when no finite-weight swap sequence
    connects the two rankings.
    """
    n = _check_sizes(p, s)
    if phi.n != n:
        raise ValueError(f"weight matrix spans {phi.n} positions, rankings have {n}")
    _check_cap(n, cap)
    if p.seq == s.seq:
        return 0.0
    return _transposition_dijkstra(p.seq, s.seq, _transposition_moves(phi))


def weighted_transposition_table(
    source: Ranking, phi: TranspositionWeights, *, cap: int = EXACT_CAP
) -> Mapping[tuple[int, ...], float]:
    if phi.n != source.n:
        raise ValueError(
            f"weight matrix spans {phi.n} positions, rankings have {source.n}"
        )
    _check_cap(source.n, cap)
    table = _transposition_dijkstra(source.seq, None, _transposition_moves(phi))
    for perm in itertools.permutations(range(1, source.n + 1)):
        table.setdefault(perm, math.inf)
    return table


def kendall_tau(p: Ranking, s: Ranking) -> int:
    """Number of candidate pairs the two rankings order differently."""
    _check_sizes(p, s)
    order = [s.pos[c - 1] for c in p.seq]
    inversions = 0
    for i in range(len(order)):
        oi = order[i]
        for j in range(i + 1, len(order)):
            if order[j] < oi:
                inversions += 1
    return inversions


def spearman_footrule(p: Ranking, s: Ranking) -> int:
    """Total absolute rank displacement across candidates."""
    _check_sizes(p, s)
    return sum(abs(a - b) for a, b in zip(p.pos, s.pos))


def generalized_footrule(p: Ranking, s: Ranking, table: PathTable) -> float:
    """Sum over candidates of the path-table weight between their two ranks.

    Brackets the exact weighted distance built from the same weights: half of
    this value is a lower bound and twice it an upper bound.
    """
    n = _check_sizes(p, s)
    if table.n != n:
        raise ValueError(f"path table spans {table.n} positions, rankings have {n}")
    rows = table.f
    return float(sum(rows[a - 1][b - 1] for a, b in zip(p.pos, s.pos)))


@dataclass(frozen=True)
class Metric:
    """A named distance on rankings, optionally with a one-to-all table form."""

    name: str
    pair_fn: Callable[[Ranking, Ranking], float]
    table_fn: Callable[[Ranking], Mapping[tuple[int, ...], float]] | None = None

    def distance(self, p: Ranking, s: Ranking) -> float:
        return self.pair_fn(p, s)

    def table_from(self, source: Ranking) -> Mapping[tuple[int, ...], float]:
        """Distance from ``source`` to every ranking of the same size."""
        if self.table_fn is not None:
            return self.table_fn(source)
        return {
            perm: self.pair_fn(Ranking(perm), source)
            for perm in itertools.permutations(range(1, source.n + 1))
        }


def weighted_kendall_metric(w: WeightVector, *, cap: int = EXACT_CAP) -> Metric:
    return Metric(
        "weighted-kendall",
        lambda p, s: weighted_kendall(p, s, w, cap=cap),
        lambda src: weighted_kendall_table(src, w, cap=cap),
    )


def weighted_transposition_metric(
    phi: TranspositionWeights, *, cap: int = EXACT_CAP
) -> Metric:
    return Metric(
        "weighted-transposition",
        lambda p, s: weighted_transposition(p, s, phi, cap=cap),
        lambda src: weighted_transposition_table(src, phi, cap=cap),
    )


def footrule_path_metric(table: PathTable) -> Metric:
    return Metric(
        "generalized-footrule",
        lambda p, s: generalized_footrule(p, s, table),
    )


def kendall_tau_metric() -> Metric:
    return Metric("kendall-tau", lambda p, s: float(kendall_tau(p, s)))


def spearman_footrule_metric() -> Metric:
    return Metric("spearman-footrule", lambda p, s: float(spearman_footrule(p, s)))


def element_space(metric: Metric) -> Metric:
    """Apply a rank-space metric to inverses, so weights attach to elements.

    The wrapped distance between ``p`` and ``s`` is the base distance between
    ``p.inverse()`` and ``s.inverse()``.
    """

    def pair(p: Ranking, s: Ranking) -> float:
        return metric.pair_fn(p.inverse(), s.inverse())

    table = None
    if metric.table_fn is not None:

        def table(source: Ranking) -> Mapping[tuple[int, ...], float]:
            base = metric.table_fn(source.inverse())
            return {perm: base[Ranking(perm).pos] for perm in base}

    return Metric(metric.name + "-elements", pair, table)


class ObjectiveValue(NamedTuple):
    cumulative: float
    average: float


def cumulative_objective(p: Ranking, profile: VoteProfile, metric: Metric) -> ObjectiveValue:
    """Total and per-vote average distance from ``p`` to every vote."""
    if p.n != profile.n:
        raise ValueError(f"size mismatch: ranking has {p.n}, profile has {profile.n}")
    total = 0.0
    for vote in profile.votes:
        total += metric.distance(p, vote)
    return ObjectiveValue(float(total), float(total) / profile.m)


class ProfileObjective:
    """Reusable cumulative-distance evaluator for one profile.

    When the metric supports tables and the size is small enough, per-vote
    distance tables are built once so repeated evaluations (local search,
    exhaustive scans) become dictionary lookups.
    """

    def __init__(
        self,
        profile: VoteProfile,
        metric: Metric,
        *,
        exact: bool,
        use_tables: bool = False,
    ):
        self.profile = profile
        self.metric = metric
        self.exact = exact
        self._tables = None
        if use_tables and metric.table_fn is not None and profile.n <= _INDEXED_CAP:
            self._tables = [dict(metric.table_from(v)) for v in profile.votes]

    def evaluate(self, ranking: Ranking) -> ObjectiveValue:
        if self._tables is not None:
            total = 0.0
            key = ranking.seq
            for table in self._tables:
                total += table[key]
            return ObjectiveValue(float(total), float(total) / self.profile.m)
        return cumulative_objective(ranking, self.profile, self.metric)


def profile_objective(
    profile: VoteProfile,
    weights: WeightVector | TranspositionWeights,
    *,
    exact_cap: int = EXACT_CAP,
    use_tables: bool = False,
) -> ProfileObjective:
    """The reporting objective for a weight system: exact when feasible, else a bound.

    At or below ``exact_cap`` candidates the objective sums the exact weighted
    distance; above it, the generalized footrule built from the same weights
    stands in and results carry ``exact=False``.
    """
    n = profile.n
    if isinstance(weights, WeightVector):
        if n <= exact_cap:
            metric = weighted_kendall_metric(weights, cap=exact_cap)
            exact = True
        else:
            metric = footrule_path_metric(PathTable.from_adjacent(weights))
            exact = False
    elif isinstance(weights, TranspositionWeights):
        if n <= exact_cap:
            metric = weighted_transposition_metric(weights, cap=exact_cap)
            exact = True
        else:
            metric = footrule_path_metric(PathTable.from_transpositions(weights))
            exact = False
    else:
        raise TypeError(f"unsupported weight system {type(weights).__name__}")
    return ProfileObjective(profile, metric, exact=exact, use_tables=use_tables)
