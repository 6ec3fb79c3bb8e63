"""Transposition weight systems and the derived position path tables.

Two weight shapes are supported: a vector of ``n - 1`` adjacent-swap weights
(``w[k - 1]`` is the cost of exchanging ranks ``k`` and ``k + 1``) and a full
symmetric matrix assigning a cost to every position pair, where ``inf`` marks
a forbidden swap. A path table holds, for every pair of positions, the weight
of the cheapest swap sequence that moves an item between them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class WeightVector:
    """Non-negative adjacent-swap weights ``w_1 .. w_{n-1}``."""

    w: tuple[float, ...]
    _cum: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        w = tuple(float(x) for x in self.w)
        object.__setattr__(self, "w", w)
        for i, x in enumerate(w, start=1):
            if not math.isfinite(x) or x < 0:
                raise ValueError(f"weight w_{i} = {x} must be finite and >= 0")
        cum = [0.0]
        for x in w:
            cum.append(cum[-1] + x)
        object.__setattr__(self, "_cum", tuple(cum))

    @property
    def n(self) -> int:
        """Number of ranks this vector spans (one more than its length)."""
        return len(self.w) + 1

    def weight_between(self, k: int, l: int) -> float:
        """Total weight of the adjacent swaps moving an item from rank ``k`` to ``l > k``."""
        if not 1 <= k < l <= self.n:
            raise ValueError(f"need 1 <= k < l <= {self.n}, got k={k}, l={l}")
        return self._cum[l - 1] - self._cum[k - 1]

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        return cls((1.0,) * (n - 1))

    @classmethod
    def arithmetic(cls, n: int) -> "WeightVector":
        """Weights ``n - i`` for boundary ``i``: the top swap costs ``n - 1``, the bottom 1."""
        return cls(tuple(float(n - i) for i in range(1, n)))

    @classmethod
    def geometric(cls, n: int, ratio: float) -> "WeightVector":
        """Weights ``ratio**(i - 1)``, so the top swap costs 1; needs ``0 <= ratio < 1``."""
        if not 0 <= ratio < 1:
            raise ValueError(f"geometric ratio must satisfy 0 <= c < 1, got {ratio}")
        return cls(tuple(ratio ** (i - 1) for i in range(1, n)))

    @classmethod
    def top_k(cls, n: int, k: int) -> "WeightVector":
        """Weight 1 on the boundary between ranks ``k`` and ``k + 1``, 0 elsewhere."""
        if not 1 <= k < n:
            raise ValueError(f"top-k boundary must satisfy 1 <= k < n, got k={k}, n={n}")
        return cls(tuple(1.0 if i == k else 0.0 for i in range(1, n)))


@dataclass(frozen=True)
class TranspositionWeights:
    """Symmetric matrix of swap costs between arbitrary positions.

    ``inf`` entries mark swaps that may never be used directly. The diagonal
    is unused and kept at zero.
    """

    phi: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        phi = tuple(tuple(float(x) for x in row) for row in self.phi)
        object.__setattr__(self, "phi", phi)
        n = len(phi)
        if n == 0:
            raise ValueError("empty weight matrix")
        for i, row in enumerate(phi):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, x in enumerate(row):
                if math.isnan(x) or x < 0:
                    raise ValueError(f"phi({i + 1},{j + 1}) = {x} must be >= 0")
                if phi[j][i] != x:
                    raise ValueError(f"phi({i + 1},{j + 1}) != phi({j + 1},{i + 1})")

    @property
    def n(self) -> int:
        return len(self.phi)

    def weight(self, a: int, b: int) -> float:
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            raise ValueError(f"positions must lie in 1..{self.n}")
        return self.phi[a - 1][b - 1]

    @classmethod
    def from_matrix(cls, matrix: Iterable[Iterable[float]]) -> "TranspositionWeights":
        return cls(tuple(tuple(row) for row in matrix))

    @classmethod
    def cayley(cls, n: int) -> "TranspositionWeights":
        """Every swap costs 1, regardless of positions."""
        return cls(
            tuple(
                tuple(0.0 if i == j else 1.0 for j in range(n)) for i in range(n)
            )
        )

    @classmethod
    def rank_distance(cls, n: int) -> "TranspositionWeights":
        """Swap cost equals the distance ``|i - j|`` between the two positions."""
        return cls(
            tuple(tuple(float(abs(i - j)) for j in range(n)) for i in range(n))
        )

    @classmethod
    def from_adjacent(cls, w: WeightVector) -> "TranspositionWeights":
        """Adjacent swaps cost ``w``; all other swaps are forbidden (``inf``)."""
        n = w.n
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                if i == j:
                    row.append(0.0)
                elif abs(i - j) == 1:
                    row.append(w.w[min(i, j) - 1])
                else:
                    row.append(math.inf)
            rows.append(tuple(row))
        return cls(tuple(rows))


@dataclass(frozen=True)
class PathTable:
    """Shortest-path swap weights ``f(i, j)`` between every pair of positions.

    Symmetric with a zero diagonal, and satisfies the triangle inequality by
    construction. Entries may be ``inf`` when a pair of positions cannot be
    connected by finite-weight swaps; such tables cannot drive the matching
    aggregator.
    """

    f: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        f = tuple(tuple(float(x) for x in row) for row in self.f)
        object.__setattr__(self, "f", f)
        n = len(f)
        for i, row in enumerate(f):
            if len(row) != n:
                raise ValueError("path table must be square")
            if row[i] != 0.0:
                raise ValueError(f"f({i + 1},{i + 1}) must be 0")
            for j, x in enumerate(row):
                if math.isnan(x) or x < 0:
                    raise ValueError(f"f({i + 1},{j + 1}) = {x} must be >= 0")
                if f[j][i] != x:
                    raise ValueError("path table must be symmetric")

    @property
    def n(self) -> int:
        return len(self.f)

    def weight(self, i: int, j: int) -> float:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"positions must lie in 1..{self.n}")
        return self.f[i - 1][j - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.f, dtype=float)

    def is_finite(self) -> bool:
        return all(math.isfinite(x) for row in self.f for x in row)

    @classmethod
    def from_adjacent(cls, w: WeightVector) -> "PathTable":
        """Path weights when only adjacent swaps exist: sums of ``w`` along the line."""
        n = w.n
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                if i == j:
                    row.append(0.0)
                else:
                    row.append(w.weight_between(min(i, j), max(i, j)))
            rows.append(tuple(row))
        return cls(tuple(rows))

    @classmethod
    def from_transpositions(cls, phi: TranspositionWeights) -> "PathTable":
        """All-pairs shortest paths over the complete position graph weighted by ``phi``."""
        dist = np.array(phi.phi, dtype=float)
        np.fill_diagonal(dist, 0.0)
        n = phi.n
        for k in range(n):
            via = dist[:, k, None] + dist[None, k, :]
            np.minimum(dist, via, out=dist)
        return cls(tuple(tuple(float(x) for x in row) for row in dist))


@dataclass(frozen=True)
class WeightSpec:
    """A recipe for building a weight vector once the candidate count is known."""

    kind: str
    values: tuple[float, ...] | None = None
    ratio: float | None = None
    k: int | None = None

    KINDS = ("explicit", "uniform", "arithmetic", "geometric", "topk")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.kind == "explicit" and not self.values:
            raise ValueError("explicit weights need at least one entry")
        if self.kind == "geometric" and not (
            self.ratio is not None and 0 <= self.ratio < 1
        ):
            raise ValueError("geometric ratio must satisfy 0 <= c < 1")
        if self.kind == "topk" and (self.k is None or self.k < 1):
            raise ValueError("topk needs a boundary k >= 1")

    def expand(self, n: int) -> WeightVector:
        """Materialize the spec for ``n`` candidates."""
        if n < 1:
            raise ValueError("need at least one candidate")
        if self.kind == "explicit":
            assert self.values is not None
            if len(self.values) != n - 1:
                raise ValueError(
                    f"explicit weights have {len(self.values)} entries, need {n - 1}"
                )
            return WeightVector(self.values)
        if self.kind == "uniform":
            return WeightVector.uniform(n)
        if self.kind == "arithmetic":
            return WeightVector.arithmetic(n)
        if self.kind == "geometric":
            assert self.ratio is not None
            return WeightVector.geometric(n, self.ratio)
        assert self.k is not None
        return WeightVector.top_k(n, self.k)


def parse_weight_spec(text: str) -> WeightSpec:
    """Parse a command-line weight specification.

    Accepted forms: an explicit comma-separated list (``1,0.5,0,0``),
    ``uniform``, ``arithmetic``, ``geometric:C`` with ``0 <= C < 1``, and
    ``topk:K``.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty weight specification")
    lowered = text.lower()
    if lowered == "uniform":
        return WeightSpec("uniform")
    if lowered == "arithmetic":
        return WeightSpec("arithmetic")
    if lowered.startswith("geometric:"):
        try:
            ratio = float(text.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad geometric ratio in {text!r}") from None
        return WeightSpec("geometric", ratio=ratio)
    if lowered.startswith("topk:"):
        try:
            k = int(text.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad topk boundary in {text!r}") from None
        return WeightSpec("topk", k=k)
    try:
        values = tuple(float(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"unrecognized weight specification {text!r}") from None
    return WeightSpec("explicit", values=values)


def expand_weights(spec: WeightSpec | str | Sequence[float], n: int) -> WeightVector:
    """Expand a spec (or raw list, or spec string) into a weight vector for ``n`` candidates."""
    if isinstance(spec, WeightSpec):
        return spec.expand(n)
    if isinstance(spec, str):
        return parse_weight_spec(spec).expand(n)
    return WeightSpec("explicit", values=tuple(float(x) for x in spec)).expand(n)
