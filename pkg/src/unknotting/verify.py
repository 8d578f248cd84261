"""
Knot invariants of braid closures, used to check that moves are sound.

The reduced Burau matrix of a braid gives the Alexander polynomial of its
closure through

    det(I - B(t)) = (1 + t + ... + t^(n-1)) * Delta(t)   (up to units)

and the determinant |Delta(-1)| of the knot.  Neither touches the move
engine, which is what makes them useful as an oracle for it.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .braid import BraidWord, components, exponent_sum
from .laurent import ONE, T, T_INV, ZERO, InexactDivision, LaurentPoly
from .moves import GENERIC_ALPHABET, ApplicationOutcome, family_of

PolyMatrix = list[list[LaurentPoly]]


class NotAKnot(ValueError):
    pass


class ConsistencyError(ArithmeticError):
    """An identity that must hold exactly did not; points at a bug, not bad input."""


def identity(dim: int) -> PolyMatrix:
    return [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]


def matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    dim = len(a)
    out = []
    for i in range(dim):
        row = []
        for j in range(dim):
            acc = ZERO
            for k in range(dim):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def burau_generator(letter: int, strands: int) -> PolyMatrix:
    """Reduced Burau matrix of one signed generator on ``strands`` strands."""
    return right_multiply(identity(strands - 1), letter)


def right_multiply(m: PolyMatrix, letter: int) -> PolyMatrix:
    """``m * B(letter)``.  Only one column of the product differs from ``m``."""
    dim = len(m)
    c = abs(letter) - 1
    if not 0 <= c < dim:
        raise ValueError(f"generator {letter} does not fit on {dim + 1} strands")
    if letter > 0:
        left, mid, right = T, -T, ONE
    else:
        left, mid, right = ONE, -T_INV, T_INV
    out = [row[:] for row in m]
    for r, row in enumerate(m):
        acc = row[c] * mid
        if c > 0:
            acc = acc + row[c - 1] * left
        if c + 1 < dim:
            acc = acc + row[c + 1] * right
        out[r][c] = acc
    return out


def reduced_burau(w: BraidWord, strands: Optional[int] = None) -> PolyMatrix:
    n = w.strands if strands is None else strands
    m = identity(n - 1)
    for k in w.letters:
        m = right_multiply(m, k)
    return m


def det(m: PolyMatrix) -> LaurentPoly:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    dim = len(m)
    if dim == 0:
        return ONE
    a = [row[:] for row in m]
    sign = 1
    prev = ONE
    for k in range(dim - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, dim) if not a[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, dim):
            for j in range(k + 1, dim):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.divexact(prev)
            a[i][k] = ZERO
        prev = a[k][k]
    d = a[dim - 1][dim - 1]
    return d if sign > 0 else -d


@functools.lru_cache(maxsize=1 << 16)
def _alexander(letters: tuple[int, ...]) -> LaurentPoly:
    w = BraidWord(letters)
    n = w.strands
    m = reduced_burau(w)
    for i in range(n - 1):
        m[i][i] = m[i][i] - ONE
    d = det(m)
    try:
        delta = d.divexact(LaurentPoly([1] * n))
    except InexactDivision as e:
        raise ConsistencyError(f"Burau determinant not divisible for {w}: {e}") from None
    return delta.normalized()


def alexander(w: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure, normalised to lowest exponent 0 and positive lead."""
    if components(w) != 1:
        raise NotAKnot(f"closure of {w or '()'} has {components(w)} components")
    return _alexander(w.letters)


def determinant(w: BraidWord) -> int:
    return abs(alexander(w)(-1))


# --- soundness suite ----------------------------------------------------------

_DELTAS = {
    "U+": -2, "U-": 2,
    "M2+": -1, "M2-": 1,
    "M2b+": 1, "M2b-": -1,
}


def expected_exponent_delta(variant: str) -> int:
    return _DELTAS.get(variant, 0)


@dataclass(frozen=True)
class Violation:
    word: BraidWord
    move: str
    check: str
    before: object
    after: object

    def __str__(self) -> str:
        return (f"{self.check} violated by {self.move} on [{self.word}]: "
                f"before={self.before} after={self.after}")


@dataclass
class SuiteReport:
    words: int = 0
    applications: int = 0
    violations: list = None

    def __post_init__(self):
        if self.violations is None:
            self.violations = []

    @property
    def ok(self) -> bool:
        return not self.violations


def derive_words(w: BraidWord, count: int, rng: random.Random,
                 alphabet: Sequence[str] = GENERIC_ALPHABET, max_moves: int = 20) -> list[BraidWord]:
    """Random relatives of ``w`` reached by random move sequences (crossing changes included)."""
    from .moves import apply_move

    out = []
    for _ in range(count):
        cur = w
        for _ in range(rng.randint(1, max_moves)):
            cur = apply_move(cur, rng.choice(alphabet)).result
        out.append(cur)
    return out


def check_word(w: BraidWord, apply: Callable[[BraidWord, str], ApplicationOutcome],
               alphabet: Sequence[str], rng: random.Random, report: SuiteReport) -> None:
    report.words += 1
    comps = components(w)
    knot = comps == 1
    inv = (alexander(w), determinant(w)) if knot else None

    if len(w) >= 2:
        cut = rng.randint(0, len(w))
        n = w.strands
        whole = reduced_burau(w)
        parts = matmul(reduced_burau(BraidWord(w.letters[:cut]), n),
                       reduced_burau(BraidWord(w.letters[cut:]), n))
        if whole != parts:
            report.violations.append(Violation(w, f"split@{cut}", "burau multiplicativity", whole, parts))

    for token in alphabet:
        out = apply(w, token)
        if not out.applied:
            if out.result != w:
                report.violations.append(Violation(w, token, "skip leaves word unchanged", w, out.result))
            continue
        report.applications += 1
        after = out.result
        comps_after = components(after)
        if comps_after != comps:
            report.violations.append(Violation(w, token, "component count", comps, comps_after))
            continue
        delta = exponent_sum(after) - exponent_sum(w)
        want = expected_exponent_delta(out.variant)
        if delta != want:
            report.violations.append(Violation(w, token, "exponent-sum delta", want, delta))
        if knot and family_of(token).value != "U":
            inv_after = (alexander(after), determinant(after))
            if inv_after[1] != inv[1]:
                report.violations.append(Violation(w, token, "determinant", inv[1], inv_after[1]))
            if inv_after[0] != inv[0]:
                report.violations.append(Violation(w, token, "alexander polynomial", inv[0], inv_after[0]))


def soundness_suite(words: Sequence[BraidWord], trials: int = 100, seed: int = 0,
                    apply: Optional[Callable] = None,
                    alphabet: Sequence[str] = GENERIC_ALPHABET) -> SuiteReport:
    """
    Check move soundness on every word and ``trials`` random relatives of each.

    ``apply`` defaults to the real move engine; tests pass a broken one to see
    the suite catch it.
    """
    if apply is None:
        from .moves import apply_move as apply
    rng = random.Random(seed)
    report = SuiteReport()
    for w in words:
        for v in [w] + derive_words(w, trials, rng):
            check_word(v, apply, alphabet, rng, report)
    return report
