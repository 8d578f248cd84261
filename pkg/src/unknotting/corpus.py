"""
Reference knots: braid words for the 35 prime knots up to eight crossings.

``known_u`` is the unknotting number and ``paper_c`` the number of crossing
changes in the best published evolved sequence, where known.

External corpus files are UTF-8 text, one knot per line::

    # name <TAB> word <TAB> [u=<int>] <TAB> [c=<int>]
    3_1	1 1 1	u=1	c=1
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

from .braid import BraidWord, WordParseError, components, parse_word


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class KnotRecord:
    name: str
    word: BraidWord
    known_u: Optional[int] = None
    paper_c: Optional[int] = None

    @property
    def strands(self) -> int:
        return self.word.strands

    @property
    def crossings(self) -> int:
        return len(self.word)


# name, word, strands, crossings, u(K), c(M)
_TABLE = [
    ("3_1", "1 1 1", 2, 3, 1, 1),
    ("4_1", "1 -2 1 -2", 3, 4, 1, 1),
    ("5_1", "1 1 1 1 1", 2, 5, 2, 2),
    ("5_2", "1 1 1 2 -1 2", 3, 6, 1, 1),
    ("6_1", "1 1 2 -1 -3 2 -3", 4, 7, 1, 2),
    ("6_2", "1 1 1 -2 1 -2", 3, 6, 1, 2),
    ("6_3", "1 1 -2 1 -2 -2", 3, 6, 1, 2),
    ("7_1", "1 1 1 1 1 1 1", 2, 7, 3, 3),
    ("7_2", "1 1 1 2 -1 2 3 -2 3", 4, 9, 1, 3),
    ("7_3", "1 1 1 1 1 2 -1 2", 3, 8, 2, 2),
    ("7_4", "1 1 2 -1 2 2 3 -2 3", 4, 9, 2, 2),
    ("7_5", "1 1 1 1 2 -1 2 2", 3, 8, 2, 3),
    ("7_6", "1 1 -2 1 3 -2 3", 4, 7, 1, 2),
    ("7_7", "1 -2 1 -2 3 -2 3", 4, 7, 1, 1),
    ("8_1", "1 1 2 -1 2 3 -2 -4 3 -4", 5, 10, 1, 3),
    ("8_2", "1 1 1 1 1 -2 1 -2", 3, 8, 2, 2),
    ("8_3", "1 1 2 -1 -3 2 -3 -4 3 -4", 5, 10, 2, 2),
    ("8_4", "1 1 1 -2 1 -2 -3 2 -3", 4, 9, 2, 2),
    ("8_5", "1 1 1 -2 1 1 1 -2", 3, 8, 2, 2),
    ("8_6", "1 1 1 1 2 -1 -3 2 -3", 4, 9, 2, 3),
    ("8_7", "1 1 1 1 -2 1 -2 -2", 3, 8, 1, 2),
    ("8_8", "1 1 1 2 -1 -3 2 -3 -3", 4, 9, 2, 2),
    ("8_9", "1 1 1 -2 1 -2 -2 -2", 3, 8, 1, 1),
    ("8_10", "1 1 1 -2 1 1 -2 -2", 3, 8, 2, 2),
    ("8_11", "1 1 2 -1 2 2 -3 2 -3", 4, 9, 1, 2),
    ("8_12", "1 -2 1 3 -2 -4 3 -4", 5, 8, 2, 3),
    ("8_13", "1 1 -2 1 -2 -2 -3 2 -3", 4, 9, 1, 2),
    ("8_14", "1 1 1 2 -1 2 -3 2 -3", 4, 9, 1, 3),
    ("8_15", "1 1 -2 1 3 2 2 2 3", 4, 9, 2, 2),
    ("8_16", "1 1 -2 1 1 -2 1 -2", 3, 8, 2, 3),
    ("8_17", "1 1 -2 1 -2 1 -2 -2", 3, 8, 1, 1),
    ("8_18", "1 -2 1 -2 1 -2 1 -2", 3, 8, 2, 2),
    ("8_19", "1 1 1 2 1 1 1 2", 3, 8, 3, 3),
    ("8_20", "1 1 1 -2 -1 -1 -1 -2", 3, 8, 1, 1),
    ("8_21", "1 1 1 2 -1 -1 2 2", 3, 8, 1, 1),
]

# strand/crossing columns as printed, kept for cross-checking the words
TABLE_SHAPES = {name: (strands, crossings) for name, _, strands, crossings, _, _ in _TABLE}


def builtin_corpus() -> list[KnotRecord]:
    return [
        KnotRecord(name, parse_word(word), u, c) for name, word, _, _, u, c in _TABLE
    ]


def corpus_by_name() -> dict[str, KnotRecord]:
    return {r.name: r for r in builtin_corpus()}


def knot_range(first: str, last: str, records: Optional[list[KnotRecord]] = None) -> list[KnotRecord]:
    """Records from ``first`` to ``last`` inclusive, in table order (e.g. ``"3_1", "6_3"``)."""
    records = builtin_corpus() if records is None else records
    names = [r.name for r in records]
    try:
        i, j = names.index(first), names.index(last)
    except ValueError as e:
        raise CorpusError(str(e)) from None
    return records[i:j + 1]


def _parse_line(line: str, lineno: int) -> KnotRecord:
    fields = line.split("\t")
    if len(fields) < 2 or not fields[0].strip():
        raise CorpusError(f"line {lineno}: expected name<TAB>word[<TAB>u=..][<TAB>c=..]")
    name = fields[0].strip()
    try:
        word = parse_word(fields[1])
    except WordParseError as e:
        raise CorpusError(f"line {lineno}: {e}") from None
    extras = {}
    for f in fields[2:]:
        f = f.strip()
        if not f:
            continue
        key, sep, value = f.partition("=")
        if not sep or key not in ("u", "c") or key in extras:
            raise CorpusError(f"line {lineno}: bad field {f!r}")
        try:
            extras[key] = int(value)
        except ValueError:
            raise CorpusError(f"line {lineno}: bad integer in {f!r}") from None
    if components(word) != 1:
        raise CorpusError(f"line {lineno}: {name} closes to a link, not a knot")
    return KnotRecord(name, word, extras.get("u"), extras.get("c"))


def load_corpus(path: str | os.PathLike) -> list[KnotRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            records.append(_parse_line(line, lineno))
    return records


def torus_unknotting_number(p: int, q: int) -> int:
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if math.gcd(p, q) != 1:
        raise ValueError(f"({p}, {q}) are not coprime")
    return (p - 1) * (q - 1) // 2
