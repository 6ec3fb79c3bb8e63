"""Rankings as permutations, and multi-voter vote profiles.

Candidate ids and rank positions are both 1-based: ``seq[0]`` is the candidate
at rank 1 (the winner), and candidate ids run over ``1..n``. All values are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Ranking:
    """A strict ranking of the candidates ``1..n``, best rank first.

    ``seq`` maps ranks to candidates (``seq[k - 1]`` is the candidate at rank
    ``k``) and ``pos`` is the inverse map from candidates to ranks
    (``pos[c - 1]`` is the rank of candidate ``c``). Both directions are kept
    so either lookup is O(1).
    """

    seq: tuple[int, ...]
    pos: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        seq = tuple(int(c) for c in self.seq)
        object.__setattr__(self, "seq", seq)
        n = len(seq)
        if n == 0:
            raise ValueError("a ranking needs at least one candidate")
        pos = [0] * n
        for rank, cand in enumerate(seq, start=1):
            if not 1 <= cand <= n:
                raise ValueError(f"candidate id {cand} outside 1..{n}")
            if pos[cand - 1]:
                raise ValueError(f"candidate {cand} appears more than once")
            pos[cand - 1] = rank
        object.__setattr__(self, "pos", tuple(pos))

    def __repr__(self) -> str:
        return f"Ranking({list(self.seq)})"

    @property
    def n(self) -> int:
        return len(self.seq)

    @classmethod
    def identity(cls, n: int) -> "Ranking":
        """The ranking ``[1, 2, ..., n]``; rejects ``n < 1``."""
        if n < 1:
            raise ValueError(f"invalid size {n}: need at least one candidate")
        return cls(tuple(range(1, n + 1)))

    def candidate_at(self, rank: int) -> int:
        if not 1 <= rank <= self.n:
            raise ValueError(f"rank {rank} outside 1..{self.n}")
        return self.seq[rank - 1]

    def rank_of(self, candidate: int) -> int:
        if not 1 <= candidate <= self.n:
            raise ValueError(f"unknown candidate id {candidate}")
        return self.pos[candidate - 1]

    def inverse(self) -> "Ranking":
        """Swap the roles of ranks and candidates.

        The result's ``seq`` equals this ranking's ``pos``; applying twice
        returns the original ranking.
        """
        return Ranking(self.pos)

    def swap_adjacent(self, k: int) -> "Ranking":
        """Exchange the candidates at ranks ``k`` and ``k + 1``."""
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"swap position {k} outside 1..{self.n - 1}")
        s = list(self.seq)
        s[k - 1], s[k] = s[k], s[k - 1]
        return Ranking(tuple(s))

    def ranks_before(self, a: int, b: int) -> bool:
        """True when candidate ``a`` holds a strictly better rank than ``b``."""
        return self.rank_of(a) < self.rank_of(b)

    def compose(self, other: "Ranking") -> "Ranking":
        """Functional composition: the result sends rank ``k`` to ``self(other(k))``."""
        if other.n != self.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return Ranking(tuple(self.seq[c - 1] for c in other.seq))


@dataclass(frozen=True)
class VoteProfile:
    """An ordered collection of rankings over the same candidate set."""

    votes: tuple[Ranking, ...]

    def __post_init__(self) -> None:
        votes = tuple(self.votes)
        object.__setattr__(self, "votes", votes)
        if not votes:
            raise ValueError("a profile needs at least one vote")
        n = votes[0].n
        for i, vote in enumerate(votes, start=1):
            if vote.n != n:
                raise ValueError(
                    f"vote {i} ranks {vote.n} candidates, expected {n}"
                )

    @classmethod
    def from_seqs(cls, seqs: Iterable[Iterable[int]]) -> "VoteProfile":
        return cls(tuple(Ranking(tuple(s)) for s in seqs))

    @property
    def n(self) -> int:
        return self.votes[0].n

    @property
    def m(self) -> int:
        return len(self.votes)

    def __iter__(self) -> Iterator[Ranking]:
        return iter(self.votes)

    def __len__(self) -> int:
        return len(self.votes)
