"""Built-in 11-vote, 5-candidate comparison example.

This is the election the ``repro-table1`` subcommand replays: candidate 1
wins on plurality counts while candidate 2 wins under most distance-based
rules, so the four bundled weight vectors pull the methods apart.
``EXPECTED_AVERAGE`` stores the reference average distances each method
must reproduce.
"""

from __future__ import annotations

from rankagg.core import VoteProfile
from rankagg.votefiles import parse_votes

# Matrix layout: row r = candidates at rank r, one column per vote.
VOTES_MATRIX = """\
1 1 1 2 2 3 3 4 4 5 5
2 2 2 3 3 2 2 2 2 2 2
3 3 3 4 4 4 4 5 5 3 3
4 4 4 5 5 5 5 3 3 4 4
5 5 5 1 1 1 1 1 1 1 1
"""

WEIGHT_VECTORS: tuple[tuple[float, ...], ...] = (
    (1.0, 0.0, 0.0, 0.0),
    (1.0, 1.0, 1.0, 1.0),
    (1.0, 1.0, 0.0, 0.0),
    (0.0, 1.0, 0.0, 0.0),
)

# method -> expected average distance per weight vector, in WEIGHT_VECTORS order.
# Stored as exact rationals; the reference table prints them rounded
# (0.7273, 2.3636, 1.455/1.546, 0.636).
EXPECTED_AVERAGE: dict[str, tuple[float, ...]] = {
    "opt": (8 / 11, 26 / 11, 16 / 11, 7 / 11),
    "bmls": (8 / 11, 26 / 11, 16 / 11, 7 / 11),
    "mc": (8 / 11, 26 / 11, 17 / 11, 7 / 11),
}

AVERAGE_TOLERANCE = 5e-4


def profile() -> VoteProfile:
    return parse_votes(VOTES_MATRIX, layout="matrix")
