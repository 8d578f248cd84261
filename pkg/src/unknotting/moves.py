"""
The move calculus on braid words.

Every move letter carries a precondition; when it holds at some site the
rewrite is performed at the leftmost such site, otherwise the word is left
alone.  Genome letters are *generic* families (``R3`` covers both directions
and both signs); the signed tokens (``R3b-``, ``U+``, ``S+-`` ...) pin one
variant and are available through :data:`SIGNED_ALPHABET`.

Sites are reported as 1-based letter positions in the input word (for the
insertion moves, positions in the output word).
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

from .braid import BraidWord, strands_for


class Family(str, enum.Enum):
    R2 = "R2"
    R3 = "R3"
    M1 = "M1"
    M1B = "M1b"
    M2 = "M2"
    S = "S"
    SB = "Sb"
    U = "U"
    R2B = "R2b"
    M2B = "M2b"


class MoveLetter(NamedTuple):
    family: Family
    variant: Optional[str] = None  # None: generic, resolve deterministically

    @property
    def token(self) -> str:
        return self.variant if self.variant is not None else self.family.value


_SIGNED = {
    Family.R2: ("R2+", "R2-"),
    Family.R3: ("R3+", "R3-", "R3b+", "R3b-"),
    Family.M1: ("M1+", "M1-"),
    Family.M1B: ("M1b+", "M1b-"),
    Family.M2: ("M2+", "M2-"),
    Family.S: ("S++", "S+-", "S-+", "S--"),
    Family.SB: ("Sb++", "Sb+-", "Sb-+", "Sb--"),
    Family.U: ("U+", "U-"),
    Family.R2B: ("R2b+", "R2b-"),
    Family.M2B: ("M2b+", "M2b-"),
}

LETTERS: dict[str, MoveLetter] = {f.value: MoveLetter(f) for f in Family}
for _family, _variants in _SIGNED.items():
    for _v in _variants:
        LETTERS[_v] = MoveLetter(_family, _v)

GENERIC_ALPHABET: tuple[str, ...] = ("R2", "R3", "M1", "M1b", "M2", "S", "Sb", "U")
EXTENDED_ALPHABET: tuple[str, ...] = GENERIC_ALPHABET + ("R2b", "M2b")
SIGNED_ALPHABET: tuple[str, ...] = tuple(
    v for f in GENERIC_ALPHABET for v in _SIGNED[Family(f)]
)
ALPHABETS = {
    "generic": GENERIC_ALPHABET,
    "signed": SIGNED_ALPHABET,
    "extended": EXTENDED_ALPHABET,
}


class MoveParseError(ValueError):
    pass


def parse_letter(token: str) -> MoveLetter:
    try:
        return LETTERS[token]
    except KeyError:
        raise MoveParseError(f"unknown move token {token!r}") from None


def family_of(token: str) -> Family:
    return parse_letter(token).family


class Status(str, enum.Enum):
    APPLIED = "applied"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class ApplicationOutcome:
    status: Status
    result: BraidWord
    variant: Optional[str] = None
    site: Optional[tuple[int, ...]] = None

    @property
    def applied(self) -> bool:
        return self.status is Status.APPLIED


def _sgn(k: int) -> str:
    return "+" if k > 0 else "-"


# Each finder returns (new_letters, variant, site) or None.  `want` is the
# pinned signed variant, or None to accept the first variant in scan order.

def _r2(L, want):
    for i in range(len(L) - 1):
        a = L[i]
        if a == -L[i + 1]:
            v = "R2" + _sgn(a)
            if want is None or v == want:
                return L[:i] + L[i + 2:], v, (i + 1, i + 2)
    return None


def _r3(L, want):
    for i in range(len(L) - 2):
        a, b, c = L[i], L[i + 1], L[i + 2]
        if a != c or (a > 0) != (b > 0):
            continue
        d = abs(b) - abs(a)
        if d == 1:
            v = "R3" + _sgn(a)
        elif d == -1:
            v = "R3b" + _sgn(a)
        else:
            continue
        if want is None or v == want:
            # both directions rewrite x y x -> y x y
            return L[:i] + (b, a, b) + L[i + 3:], v, (i + 1, i + 2, i + 3)
    return None


def _m1(L, want):
    if not L:
        return None
    v = "M1" + _sgn(L[0])
    if want is not None and v != want:
        return None
    return L[1:] + L[:1], v, (1,)


def _m1b(L, want):
    if not L:
        return None
    v = "M1b" + _sgn(L[-1])
    if want is not None and v != want:
        return None
    return L[-1:] + L[:-1], v, (len(L),)


def _m2(L, want):
    g = strands_for(L) - 1
    if g < 1:
        return None
    hits = [i for i, k in enumerate(L) if abs(k) == g]
    if len(hits) != 1:
        return None
    i = hits[0]
    v = "M2" + _sgn(L[i])
    if want is not None and v != want:
        return None
    return L[:i] + L[i + 1:], v, (i + 1,)


def _swap_at(L, i, prefix, want):
    a, b = L[i], L[i + 1]
    if abs(abs(a) - abs(b)) <= 1:
        return None
    v = prefix + _sgn(a) + _sgn(b)
    if want is not None and v != want:
        return None
    return L[:i] + (b, a) + L[i + 2:], v, (i + 1, i + 2)


def _s(L, want):
    for i in range(len(L) - 1):
        hit = _swap_at(L, i, "S", want)
        if hit:
            return hit
    return None


def _sb(L, want):
    for i in range(len(L) - 2, -1, -1):
        hit = _swap_at(L, i, "Sb", want)
        if hit:
            return hit
    return None


def _u(L, want):
    for i, k in enumerate(L):
        v = "U" + _sgn(k)
        if want is None or v == want:
            return L[:i] + (-k,) + L[i + 1:], v, (i + 1,)
    return None


def _r2b(L, want):
    # needs sigma_1 to exist; on the 1-strand word it would add a split component
    if not L:
        return None
    v = want or "R2b+"
    pair = (1, -1) if v == "R2b+" else (-1, 1)
    n = len(L)
    return L + pair, v, (n + 1, n + 2)


def _m2b(L, want):
    v = want or "M2b+"
    n = strands_for(L)
    return L + ((n if v == "M2b+" else -n),), v, (len(L) + 1,)


_FINDERS = {
    Family.R2: _r2,
    Family.R3: _r3,
    Family.M1: _m1,
    Family.M1B: _m1b,
    Family.M2: _m2,
    Family.S: _s,
    Family.SB: _sb,
    Family.U: _u,
    Family.R2B: _r2b,
    Family.M2B: _m2b,
}


@functools.lru_cache(maxsize=1 << 20)
def resolve(letters: tuple[int, ...], token: str):
    """Memoised core: ``(new_letters, variant, site)`` or None if the move is inapplicable."""
    m = parse_letter(token)
    return _FINDERS[m.family](letters, m.variant)


MoveLike = Union[str, MoveLetter]


def _token(m: MoveLike) -> str:
    return m.token if isinstance(m, MoveLetter) else m


def find_application(w: BraidWord, m: MoveLike) -> Optional[tuple[str, tuple[int, ...]]]:
    """Resolved ``(variant, site)`` for move ``m`` on ``w``, or None."""
    hit = resolve(w.letters, _token(m))
    if hit is None:
        return None
    return hit[1], hit[2]


def apply_move(w: BraidWord, m: MoveLike) -> ApplicationOutcome:
    hit = resolve(w.letters, _token(m))
    if hit is None:
        return ApplicationOutcome(Status.SKIPPED, w)
    new, variant, site = hit
    return ApplicationOutcome(Status.APPLIED, BraidWord(new), variant, site)


def parse_sequence(text: str) -> tuple[str, ...]:
    """
    Parse a move sequence such as ``"U M1 M1 R3 R2 M2 M2"``.

    Powers and parenthesised groups are expanded, so ``"U M1^2 R3"`` and
    ``"(U R2)^2 M2"`` are accepted as well.
    """
    tokens = _expand(_lex(text))
    if not tokens:
        raise MoveParseError("a move sequence needs at least one move")
    for t in tokens:
        parse_letter(t)
    return tuple(tokens)


def _lex(text: str) -> list[str]:
    spaced = text.replace("(", " ( ").replace(")", " ) ").replace("^", " ^ ")
    return spaced.split()


def _expand(toks: list[str]) -> list[str]:
    stack: list[list[str]] = [[]]
    last: list[str] = []
    i = 0
    while i < len(toks):
        t = toks[i]
        if t == "(":
            stack.append([])
        elif t == ")":
            if len(stack) == 1:
                raise MoveParseError("unbalanced ')'")
            last = stack.pop()
            stack[-1].extend(last)
        elif t == "^":
            if i + 1 >= len(toks) or not last:
                raise MoveParseError("'^' needs a preceding move and an exponent")
            try:
                power = int(toks[i + 1])
            except ValueError:
                raise MoveParseError(f"bad exponent {toks[i + 1]!r}") from None
            if power < 1:
                raise MoveParseError(f"bad exponent {power}")
            stack[-1].extend(last * (power - 1))
            i += 1
        else:
            last = [t]
            stack[-1].append(t)
        i += 1
    if len(stack) != 1:
        raise MoveParseError("unbalanced '('")
    return stack[0]


def format_sequence(seq: Sequence[str]) -> str:
    return " ".join(seq)
