"""Weighted-distance rank aggregation.

Distances between full rankings driven by per-rank (or per-position-pair)
swap weights, and aggregation of multi-voter profiles by exhaustive search,
minimum-cost matching, adjacent-swap local descent, and stationary
distributions of vote-shaped Markov chains.
"""

from rankagg.baselines import OPT_CAP, best_input_vote, borda, exhaustive_opt, plurality
from rankagg.core import Ranking, VoteProfile
from rankagg.distances import (
    EXACT_CAP,
    ExactSizeError,
    Metric,
    ObjectiveValue,
    ProfileObjective,
    cumulative_objective,
    element_space,
    footrule_path_metric,
    generalized_footrule,
    kendall_tau,
    kendall_tau_metric,
    profile_objective,
    spearman_footrule,
    spearman_footrule_metric,
    weighted_kendall,
    weighted_kendall_metric,
    weighted_kendall_table,
    weighted_transposition,
    weighted_transposition_metric,
    weighted_transposition_table,
)
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
from rankagg.matching import aggregate_matching, bmls, build_cost_matrix, min_cost_assignment
from rankagg.results import AggregationResult
from rankagg.votefiles import (
    VoteParseError,
    load_votes,
    parse_ranking_text,
    parse_votes,
    serialize_votes,
)
from rankagg.weights import (
    PathTable,
    TranspositionWeights,
    WeightSpec,
    WeightVector,
    expand_weights,
    parse_weight_spec,
)

__all__ = [
    "AggregationResult",
    "EXACT_CAP",
    "ExactSizeError",
    "Metric",
    "OPT_CAP",
    "ObjectiveValue",
    "PathTable",
    "ProfileObjective",
    "Ranking",
    "TranspositionWeights",
    "VoteParseError",
    "VoteProfile",
    "WeightSpec",
    "WeightVector",
    "aggregate_matching",
    "alpha_counts",
    "best_input_vote",
    "beta_matrix",
    "bmls",
    "borda",
    "build_cost_matrix",
    "cumulative_objective",
    "element_space",
    "exhaustive_opt",
    "expand_weights",
    "footrule_path_metric",
    "generalized_footrule",
    "kendall_tau",
    "kendall_tau_metric",
    "load_votes",
    "mc_aggregate",
    "min_cost_assignment",
    "parse_ranking_text",
    "parse_votes",
    "parse_weight_spec",
    "plurality",
    "profile_objective",
    "serialize_votes",
    "spearman_footrule",
    "spearman_footrule_metric",
    "stationary",
    "transitions_case1",
    "transitions_case2",
    "transitions_case3",
    "transitions_weighted",
    "weighted_kendall",
    "weighted_kendall_metric",
    "weighted_kendall_table",
    "weighted_transposition",
    "weighted_transposition_metric",
    "weighted_transposition_table",
]

__version__ = "0.1.0"
