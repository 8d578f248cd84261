"""
Braid words in the Artin generators.

A letter is stored as a signed integer: ``k > 0`` is sigma_k and ``k < 0`` is
sigma_|k|^-1.  Words are always *tight*: the strand count is one more than the
largest generator index present, and the empty word lives on a single strand.
This makes the trivial braid a plain emptiness test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class WordParseError(ValueError):
    """Raised for malformed braid-word text."""

    def __init__(self, token: str, position: int, reason: str):
        self.token = token
        self.position = position
        super().__init__(f"bad generator {token!r} at token {position}: {reason}")


class GeneratorLetter(NamedTuple):
    index: int
    sign: int

    def to_int(self) -> int:
        return self.index * self.sign


def strands_for(letters: Iterable[int]) -> int:
    return max((abs(k) for k in letters), default=0) + 1


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if any(k == 0 for k in self.letters):
            raise ValueError("generator index must be nonzero")

    @classmethod
    def from_generators(cls, gens: Iterable[GeneratorLetter]) -> "BraidWord":
        return cls(tuple(g.to_int() for g in gens))

    @property
    def strands(self) -> int:
        return strands_for(self.letters)

    def generators(self) -> list[GeneratorLetter]:
        return [GeneratorLetter(abs(k), 1 if k > 0 else -1) for k in self.letters]

    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


TRIVIAL = BraidWord(())


def parse_word(text: str) -> BraidWord:
    """Parse whitespace-separated nonzero integers, e.g. ``"1 -2 1 -2"``."""
    letters = []
    for pos, token in enumerate(text.split(), start=1):
        try:
            k = int(token)
        except ValueError:
            raise WordParseError(token, pos, "not an integer") from None
        if k == 0:
            raise WordParseError(token, pos, "zero is not a generator")
        letters.append(k)
    return BraidWord(tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(k) for k in w.letters)


def permutation(letters: Iterable[int], strands: int) -> list[int]:
    """Image of each strand position (0-based) after the braid, left to right."""
    # perm[p] = which starting strand currently sits at position p
    at = list(range(strands))
    for k in letters:
        i = abs(k) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = [0] * strands
    for pos, start in enumerate(at):
        perm[start] = pos
    return perm


def cycle_count(perm: list[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def permutation_components(w: BraidWord) -> tuple[tuple[int, ...], int]:
    """Closure permutation (1-based images of 1..n) and number of closure components."""
    perm = permutation(w.letters, w.strands)
    return tuple(p + 1 for p in perm), cycle_count(perm)


def components(w: BraidWord) -> int:
    return cycle_count(permutation(w.letters, w.strands))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in w.letters)
