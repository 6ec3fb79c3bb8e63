"""Reading and writing vote files.

Votes are UTF-8 text of comma- or whitespace-separated positive integers;
``#`` starts a comment. Two layouts exist:

* ``rows``: one vote per line, best rank first.
* ``matrix``: row ``r`` lists the candidates at rank ``r`` across votes, one
  column per vote.
"""

from __future__ import annotations

from rankagg.core import Ranking, VoteProfile

LAYOUTS = ("rows", "matrix")


class VoteParseError(ValueError):
    """Malformed vote input; the message pinpoints the line or column."""


def _token_lines(text: str) -> list[tuple[int, list[int]]]:
    lines: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = body.replace(",", " ").split()
        if not tokens:
            continue
        values = []
        for col, tok in enumerate(tokens, start=1):
            try:
                values.append(int(tok))
            except ValueError:
                raise VoteParseError(
                    f"line {lineno}, entry {col}: {tok!r} is not an integer"
                ) from None
        lines.append((lineno, values))
    return lines


def _ranking(values: list[int], where: str) -> Ranking:
    try:
        return Ranking(tuple(values))
    except ValueError as exc:
        raise VoteParseError(f"{where}: {exc}") from None


def parse_votes(text: str, layout: str = "rows") -> VoteProfile:
    """Parse vote text in the given layout into a profile.

    Every vote is validated as a permutation of ``1..n``; ragged rows,
    duplicate or missing candidates, and out-of-range ids are reported with
    their line or column.
    """
    if layout not in LAYOUTS:
        raise VoteParseError(f"unknown layout {layout!r}; expected one of {LAYOUTS}")
    lines = _token_lines(text)
    if not lines:
        raise VoteParseError("no votes found in input")

    if layout == "rows":
        width = len(lines[0][1])
        votes = []
        for lineno, values in lines:
            if len(values) != width:
                raise VoteParseError(
                    f"line {lineno}: expected {width} entries, found {len(values)}"
                )
            votes.append(_ranking(values, f"line {lineno}"))
        return VoteProfile(tuple(votes))

    width = len(lines[0][1])
    for lineno, values in lines:
        if len(values) != width:
            raise VoteParseError(
                f"line {lineno}: expected {width} entries, found {len(values)}"
            )
    votes = []
    for col in range(width):
        column = [values[col] for _, values in lines]
        votes.append(_ranking(column, f"column {col + 1}"))
    return VoteProfile(tuple(votes))


def parse_ranking_text(text: str) -> Ranking:
    """Parse a single ranking given as comma/whitespace-separated ids."""
    lines = _token_lines(text)
    if len(lines) != 1:
        raise VoteParseError("expected exactly one ranking")
    return _ranking(lines[0][1], "ranking")


def serialize_votes(profile: VoteProfile, layout: str = "rows") -> str:
    """Render a profile back to text; inverse of :func:`parse_votes`."""
    if layout not in LAYOUTS:
        raise VoteParseError(f"unknown layout {layout!r}; expected one of {LAYOUTS}")
    if layout == "rows":
        lines = [",".join(str(c) for c in vote.seq) for vote in profile.votes]
    else:
        lines = [
            ",".join(str(vote.seq[r]) for vote in profile.votes)
            for r in range(profile.n)
        ]
    return "\n".join(lines) + "\n"


def load_votes(path: str, layout: str = "rows") -> VoteProfile:
    with open(path, encoding="utf-8") as handle:
        return parse_votes(handle.read(), layout)
