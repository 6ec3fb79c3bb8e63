"""Common result record returned by every aggregation method."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from rankagg.core import Ranking


@dataclass(frozen=True)
class AggregationResult:
    """Outcome of one aggregation run.

    ``cumulative`` is the total distance from the returned ranking to every
    vote and ``average`` is ``cumulative / m``. ``exact`` records whether that
    objective is the exact weighted distance or the path-table bound used
    above the exact-search cap. ``diagnostics`` holds method-specific trace
    data (descent steps, peel rounds, stationary vectors) as JSON-safe values.
    """

    method: str
    ranking: Ranking
    cumulative: float
    average: float
    exact: bool
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method,
            "ranking": list(self.ranking.seq),
            "cumulative": self.cumulative,
            "average": self.average,
            "exact": self.exact,
            "diagnostics": self.diagnostics,
        }
