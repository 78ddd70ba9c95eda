"""
Plain-text instance format::

    # optional comment lines start with '#'
    n m
    <m space-separated candidates, most preferred first>   (n lines)
"""
import os
import re
from typing import List, Optional

from src.core import InstanceFormatError, InvalidInputError, Ranking, VotingInstance

_TOKEN = re.compile(r"\S+")
_RANKING_TOKEN = re.compile(r"[^\s,\[\]]+")


def _parse_int(token: str, line: int, column: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceFormatError(f"expected an integer {what}, got {token!r}", line, column)


def parse_instance(text: str) -> VotingInstance:
    """
    Parse an instance file.

    :param text: file contents
    :return: parsed instance
    :raises InstanceFormatError: with the line and column of the first problem
    """
    header = None
    rows: List[Ranking] = []
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue

        tokens = [(match.group(), match.start() + 1) for match in _TOKEN.finditer(raw)]

        if header is None:
            if len(tokens) != 2:
                raise InstanceFormatError(f"header must be 'n m', got {stripped!r}", line_no, tokens[0][1])
            n = _parse_int(tokens[0][0], line_no, tokens[0][1], "voter count")
            m = _parse_int(tokens[1][0], line_no, tokens[1][1], "candidate count")
            if n < 1 or m < 1:
                raise InstanceFormatError(f"voter and candidate counts must be positive, got {n} {m}",
                                          line_no, tokens[0][1])
            header = (n, m)
            continue

        n, m = header
        if len(rows) == n:
            raise InstanceFormatError(f"more than {n} voter lines", line_no, tokens[0][1])
        if len(tokens) != m:
            column = tokens[m][1] if len(tokens) > m else len(raw.rstrip()) + 1
            raise InstanceFormatError(f"voter {len(rows) + 1} lists {len(tokens)} candidates, expected {m}",
                                      line_no, column)

        seen = {}
        order = []
        for token, column in tokens:
            candidate = _parse_int(token, line_no, column, "candidate")
            if not 1 <= candidate <= m:
                raise InstanceFormatError(f"candidate {candidate} is out of range 1..{m}", line_no, column)
            if candidate in seen:
                raise InstanceFormatError(
                    f"candidate {candidate} repeated (first at column {seen[candidate]})", line_no, column)
            seen[candidate] = column
            order.append(candidate)
        rows.append(Ranking(tuple(order)))

    if header is None:
        raise InstanceFormatError("missing 'n m' header line", last_line or 1, 1)
    if len(rows) != header[0]:
        raise InstanceFormatError(f"expected {header[0]} voter lines, found {len(rows)}", last_line or 1, 1)

    return VotingInstance(header[1], tuple(rows))


def serialize_instance(inst: VotingInstance, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines += [f"# {line}" for line in comment.splitlines()]
    lines.append(f"{inst.n} {inst.m}")
    lines += [" ".join(str(candidate) for candidate in voter.order) for voter in inst.voters]
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> VotingInstance:
    if not os.path.exists(path):
        raise FileNotFoundError(f"instance file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_instance(f.read())


def write_instance(path: str, inst: VotingInstance, comment: Optional[str] = None):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_instance(inst, comment))


def parse_ranking_arg(text: str, m: Optional[int] = None) -> Ranking:
    """
    Parse a ranking argument. Accepts flat lists ("1,2,3", "1 2 3") and the
    bracketed block notation ("[1,2,3],[4,5,6]"); brackets are ignored.
    """
    order = []
    for match in _RANKING_TOKEN.finditer(text):
        token = match.group()
        try:
            order.append(int(token))
        except ValueError:
            raise InstanceFormatError(f"ranking {text!r} has non-integer entry {token!r} at column {match.start() + 1}")

    if not order:
        raise InstanceFormatError(f"ranking {text!r} is empty")

    ranking = Ranking(tuple(order))
    if m is not None and ranking.m != m:
        raise InvalidInputError(f"ranking {text!r} has {ranking.m} candidates, expected {m}")
    return ranking
