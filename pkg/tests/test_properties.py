"""Cross-cutting structural properties on randomized inputs."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_seq
from rankagg.core import Ranking, VoteProfile
from rankagg.distances import weighted_kendall, weighted_transposition
from rankagg.markov import (
    mc_aggregate,
    stationary,
    transitions_case1,
    transitions_case2,
    transitions_case3,
    transitions_weighted,
)
from rankagg.weights import TranspositionWeights, WeightVector


@st.composite
def ranked_triples(draw, max_n=5):
    n = draw(st.integers(2, max_n))
    seqs = [tuple(draw(st.permutations(list(range(1, n + 1))))) for _ in range(3)]
    w = tuple(
        draw(st.floats(0, 3, allow_nan=False, allow_infinity=False))
        for _ in range(n - 1)
    )
    return [Ranking(s) for s in seqs], WeightVector(w)


class TestPseudoMetricAxioms:
    @settings(max_examples=60, deadline=None)
    @given(ranked_triples())
    def test_identity_symmetry_triangle(self, instance):
        (p, s, u), w = instance
        assert weighted_kendall(p, p, w) == 0
        d_ps = weighted_kendall(p, s, w)
        assert d_ps == pytest.approx(weighted_kendall(s, p, w), abs=1e-9)
        d_pu = weighted_kendall(p, u, w)
        d_su = weighted_kendall(s, u, w)
        assert d_pu <= d_ps + d_su + 1e-9

    @settings(max_examples=40, deadline=None)
    @given(ranked_triples())
    def test_left_invariance(self, instance):
        (p, s, tau), w = instance
        d_direct = weighted_kendall(p, s, w)
        d_relabelled = weighted_kendall(tau.compose(p), tau.compose(s), w)
        assert d_direct == pytest.approx(d_relabelled, abs=1e-9)
        d_origin = weighted_kendall(Ranking.identity(p.n), p.inverse().compose(s), w)
        assert d_direct == pytest.approx(d_origin, abs=1e-9)

    def test_transposition_metric_axioms_sampled(self):
        rng = np.random.default_rng(51)
        for _ in range(15):
            n = int(rng.integers(2, 5))
            phi = [[0.0] * n for _ in range(n)]
            for a in range(n):
                for b in range(a + 1, n):
                    phi[a][b] = phi[b][a] = float(rng.integers(0, 4))
            tw = TranspositionWeights(tuple(tuple(r) for r in phi))
            p, s, u = (Ranking(random_seq(rng, n)) for _ in range(3))
            assert weighted_transposition(p, p, tw) == 0
            d_ps = weighted_transposition(p, s, tw)
            assert d_ps == pytest.approx(weighted_transposition(s, p, tw), abs=1e-9)
            assert weighted_transposition(p, u, tw) <= d_ps + weighted_transposition(
                s, u, tw
            ) + 1e-9


def random_profile(rng, max_n=6, max_m=8):
    n = int(rng.integers(2, max_n + 1))
    m = int(rng.integers(1, max_m + 1))
    return VoteProfile.from_seqs(random_seq(rng, n) for _ in range(m))


class TestChainInvariants:
    def test_all_builders_emit_row_stochastic_matrices(self):
        rng = np.random.default_rng(52)
        for _ in range(25):
            profile = random_profile(rng)
            w = WeightVector(tuple(rng.random(profile.n - 1)))
            chains = [
                transitions_case1(profile),
                transitions_case2(profile),
                transitions_case3(profile),
                transitions_weighted(profile, w),
            ]
            for P in chains:
                assert np.all(P >= 0)
                assert np.max(np.abs(P.sum(axis=1) - 1.0)) < 1e-12

    def test_stationary_residual_on_emitted_chains(self):
        rng = np.random.default_rng(53)
        for _ in range(15):
            profile = random_profile(rng)
            w = WeightVector(tuple(rng.random(profile.n - 1)))
            for P in (
                transitions_case1(profile),
                transitions_case2(profile),
                transitions_case3(profile),
                transitions_weighted(profile, w),
            ):
                x = stationary(P)
                assert np.max(np.abs(x @ P - x)) < 1e-9
                assert abs(x.sum() - 1.0) < 1e-12

    def test_peeling_always_returns_complete_permutation(self):
        rng = np.random.default_rng(54)
        for _ in range(25):
            profile = random_profile(rng, max_n=6, max_m=6)
            # zero entries make absorbing states and degenerate rows likely
            w = WeightVector(
                tuple(
                    float(rng.integers(0, 2)) * float(rng.random())
                    for _ in range(profile.n - 1)
                )
            )
            result = mc_aggregate(profile, w)
            assert sorted(result.ranking.seq) == list(range(1, profile.n + 1))
            assert result.diagnostics["rounds"]

    def test_unanimous_top_candidate_is_peeled_first(self):
        rng = np.random.default_rng(55)
        seqs = []
        for _ in range(5):
            rest = list(range(2, 6))
            rng.shuffle(rest)
            seqs.append((1, *rest))
        profile = VoteProfile.from_seqs(seqs)
        result = mc_aggregate(profile, WeightVector((0, 1, 1, 1)))
        rounds = result.diagnostics["rounds"]
        assert 1 in rounds[0]["absorbing"]
        assert result.ranking.seq[0] == 1
