import numpy as np
import pytest

from oracles import random_seq
from rankagg.core import Ranking, VoteProfile
from rankagg.markov import (
    alpha_counts,
    beta_matrix,
    mc_aggregate,
    stationary,
    transitions_case1,
    transitions_case2,
    transitions_case3,
    transitions_weighted,
)
from rankagg.table1 import profile as table1_profile
from rankagg.weights import WeightVector


def identity_profile(n, m):
    return VoteProfile((Ranking.identity(n),) * m)


class TestAlphaCounts:
    def test_diagonal_is_vote_count(self):
        rng = np.random.default_rng(31)
        profile = VoteProfile.from_seqs(random_seq(rng, 5) for _ in range(7))
        alpha = alpha_counts(profile)
        assert all(alpha[i, i] == 7 for i in range(5))

    def test_reference_profile_counts(self):
        alpha = alpha_counts(table1_profile())
        assert alpha[0, 1] == 8  # candidate 2 above candidate 1 in eight votes
        assert alpha[1, 0] == 3  # candidate 1 above candidate 2 in three

    def test_matches_naive_double_loop(self):
        rng = np.random.default_rng(32)
        profile = VoteProfile.from_seqs(random_seq(rng, 4) for _ in range(5))
        alpha = alpha_counts(profile)
        for i in range(1, 5):
            for j in range(1, 5):
                naive = sum(
                    1 for vote in profile.votes if vote.rank_of(j) <= vote.rank_of(i)
                )
                assert alpha[i - 1, j - 1] == naive


class TestCountChains:
    def test_case1_identity_votes(self):
        P = transitions_case1(identity_profile(3, 4))
        assert P[2].tolist() == pytest.approx([1 / 3, 1 / 3, 1 / 3])
        assert P[0].tolist() == pytest.approx([1, 0, 0])

    def test_case1_symmetric_pair(self):
        P = transitions_case1(VoteProfile.from_seqs([(1, 2), (2, 1)]))
        assert np.allclose(P, 0.5)

    def test_case2_single_identity_vote(self):
        P = transitions_case2(identity_profile(3, 1))
        assert P[1].tolist() == pytest.approx([0.5, 0.5, 0])
        assert P[0].tolist() == pytest.approx([1, 0, 0])

    def test_case2_opposed_votes(self):
        P = transitions_case2(VoteProfile.from_seqs([(1, 2), (2, 1)]))
        assert P[0].tolist() == pytest.approx([3 / 4, 1 / 4])

    def test_case3_single_identity_vote(self):
        P = transitions_case3(identity_profile(3, 1))
        assert P[2].tolist() == pytest.approx([1 / 3, 1 / 3, 1 / 3])
        assert P[0].tolist() == pytest.approx([1, 0, 0])

    def test_case3_opposed_votes(self):
        P = transitions_case3(VoteProfile.from_seqs([(1, 2), (2, 1)]))
        assert P[0].tolist() == pytest.approx([3 / 4, 1 / 4])


class TestBetaMatrix:
    def test_long_jump_takes_best_segment_average(self):
        beta = beta_matrix(Ranking((1, 2, 3, 4, 5)), WeightVector((1, 1, 0, 0)))
        assert beta[4, 0] == 0.5  # max of 2/4, 1/3, 0, 0

    def test_adjacent_jump_is_plain_weight(self):
        beta = beta_matrix(Ranking((1, 2, 3, 4, 5)), WeightVector((1, 1, 0, 0)))
        assert beta[1, 0] == 1.0

    def test_top_candidate_row_is_zero_off_diagonal(self):
        rng = np.random.default_rng(33)
        vote = Ranking(random_seq(rng, 6))
        beta = beta_matrix(vote, WeightVector(tuple(rng.random(5))))
        top = vote.seq[0] - 1
        for j in range(6):
            if j != top:
                assert beta[top, j] == 0

    def test_support_only_on_better_ranked(self):
        rng = np.random.default_rng(34)
        for _ in range(10):
            vote = Ranking(random_seq(rng, 5))
            beta = beta_matrix(vote, WeightVector(tuple(rng.random(4))))
            for i in range(1, 6):
                for j in range(1, 6):
                    if i != j and beta[i - 1, j - 1] > 0:
                        assert vote.ranks_before(j, i)

    def test_monotone_toward_better_ranks(self):
        # moving j up in the vote can only increase the transition rate from i
        rng = np.random.default_rng(35)
        for _ in range(10):
            vote = Ranking(random_seq(rng, 6))
            beta = beta_matrix(vote, WeightVector(tuple(rng.random(5))))
            for i in range(1, 7):
                better = sorted(
                    (c for c in range(1, 7) if vote.ranks_before(c, i)),
                    key=vote.rank_of,
                )
                rates = [beta[i - 1, j - 1] for j in better]
                assert rates == sorted(rates, reverse=True)


class TestTransitionsWeighted:
    def test_top_weight_sends_everyone_to_vote_winners(self):
        P = transitions_weighted(table1_profile(), WeightVector((1, 0, 0, 0)))
        expected = np.array([3, 2, 2, 2, 2]) / 11
        for row in P:
            assert row.tolist() == pytest.approx(expected.tolist())

    def test_absorbing_row_for_never_beaten_candidate(self):
        P = transitions_weighted(table1_profile(), WeightVector((0, 1, 0, 0)))
        assert P[1].tolist() == pytest.approx([0, 1, 0, 0, 0])

    def test_all_zero_weights_give_identity(self):
        profile = VoteProfile.from_seqs([(2, 3, 1)])
        P = transitions_weighted(profile, WeightVector((0, 0)))
        assert np.allclose(P, np.eye(3))


class TestStationary:
    def test_doubly_stochastic(self):
        x = stationary(np.array([[0.5, 0.5], [0.5, 0.5]]))
        assert x.tolist() == pytest.approx([0.5, 0.5])

    def test_periodic_chain(self):
        x = stationary(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert x.tolist() == pytest.approx([0.5, 0.5])

    def test_residual_and_simplex_invariants(self):
        rng = np.random.default_rng(36)
        for _ in range(20):
            n = int(rng.integers(2, 8))
            P = rng.random((n, n))
            P /= P.sum(axis=1, keepdims=True)
            x = stationary(P)
            assert np.max(np.abs(x @ P - x)) < 1e-9
            assert abs(x.sum() - 1) < 1e-12
            assert np.all(x >= 0)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            stationary(np.zeros((2, 3)))


class TestMcAggregate:
    def test_uniform_weights_reference_ranking(self):
        result = mc_aggregate(table1_profile(), WeightVector.uniform(5))
        assert result.ranking.seq == (2, 3, 4, 5, 1)
        assert result.average == pytest.approx(26 / 11, abs=1e-12)

    def test_top_rank_weights_pick_plurality_winner(self):
        result = mc_aggregate(table1_profile(), WeightVector((1, 0, 0, 0)))
        assert result.ranking.seq[0] == 1
        assert result.average == pytest.approx(8 / 11, abs=1e-12)

    def test_peeling_reproduces_reduced_chain(self):
        result = mc_aggregate(table1_profile(), WeightVector((0, 1, 0, 0)))
        rounds = result.diagnostics["rounds"]
        assert len(rounds) == 2
        assert rounds[0]["absorbing"] == [2]
        assert rounds[0]["stationary"] == pytest.approx([0, 1, 0, 0, 0], abs=1e-6)
        assert rounds[1]["candidates"] == [1, 3, 4, 5]
        # survivors keep their original rank positions, which makes every row of
        # the reduced chain equal [3, 4, 2, 2] / 11
        assert rounds[1]["stationary"] == pytest.approx(
            [3 / 11, 4 / 11, 2 / 11, 2 / 11], abs=1e-9
        )
        assert result.ranking.seq == (2, 3, 1, 4, 5)

    def test_all_zero_weights_order_by_mean_rank(self):
        profile = VoteProfile.from_seqs([(2, 1, 3), (2, 3, 1)])
        result = mc_aggregate(profile, WeightVector((0, 0)))
        # identity chain: everyone absorbing, ordered by mean rank then id
        assert result.ranking.seq == (2, 1, 3)
        assert result.diagnostics["rounds"][0]["absorbing"] == [1, 2, 3]

    def test_count_chains_run_through_same_pipeline(self):
        profile = table1_profile()
        w = WeightVector.uniform(5)
        for case in (1, 2, 3):
            result = mc_aggregate(profile, w, case)
            assert result.method == f"mc{case}"
            assert sorted(result.ranking.seq) == [1, 2, 3, 4, 5]

    def test_rejects_unknown_case(self):
        with pytest.raises(ValueError):
            mc_aggregate(table1_profile(), WeightVector.uniform(5), "majority")

    def test_single_candidate(self):
        result = mc_aggregate(VoteProfile.from_seqs([(1,)]), WeightVector(()))
        assert result.ranking.seq == (1,)
