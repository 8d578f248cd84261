"""
Running move sequences against braid words.

A sequence is applied letter by letter, cycling back to the start at the end
of each pass.  Execution stops as soon as an applied move leaves the empty
word, after ``max_passes`` passes, or after a pass in which nothing applied
(the word is then a fixed point and can never change again).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .braid import BraidWord, format_word
from .moves import ApplicationOutcome, Status, family_of, resolve

MoveSequence = tuple[str, ...]


@dataclass(frozen=True)
class Step:
    pass_number: int
    index: int  # 1-based position in the sequence
    move: str
    outcome: ApplicationOutcome

    def render(self) -> str:
        o = self.outcome
        if o.applied:
            site = _render_site(o.site)
            action = f"{o.variant}@{site}"
        else:
            action = "skipped"
        return f"{self.pass_number}.{self.index} {self.move} {action} | {format_word(o.result)}"


def _render_site(site) -> str:
    if len(site) == 1:
        return str(site[0])
    return f"{site[0]}-{site[-1]}"


@dataclass(frozen=True)
class ExecutionTrace:
    steps: tuple[Step, ...]
    final: BraidWord
    reduced: bool
    passes: int
    crossing_changes: int

    def render(self) -> str:
        return "\n".join(s.render() for s in self.steps)


@dataclass(frozen=True)
class RunOutcome:
    """Trace-free summary of one run; what fitness evaluation needs."""

    reduced: bool
    passes: int
    crossing_changes: int
    applied_positions: frozenset[int]  # 0-based sequence positions that applied at least once


def _is_u(token: str, _cache={}) -> bool:
    try:
        return _cache[token]
    except KeyError:
        _cache[token] = r = family_of(token).value == "U"
        return r


def execute(letters: tuple[int, ...], seq: Sequence[str], max_passes: int) -> RunOutcome:
    """
    Hot loop: same result as :func:`run` without recording a trace.

    A word seen again at the start of a pass means the remaining passes repeat
    a known cycle, so they are accounted for arithmetically instead of being
    replayed.  The outcome is identical to plain replay up to ``max_passes``.
    """
    if max_passes < 1:
        raise ValueError("max_passes must be >= 1")
    if not letters:
        return RunOutcome(True, 0, 0, frozenset())
    n = len(seq)
    us = [_is_u(t) for t in seq]
    applied = set()
    changes = 0
    seen = {}  # word at pass start -> pass number
    changes_before = []  # changes_before[p - 1] = changes at start of pass p
    for p in range(1, max_passes + 1):
        if max_passes > 1:
            q = seen.get(letters)
            if q is not None:
                changes += _cycle_changes(changes_before, changes, q, p, max_passes)
                return RunOutcome(False, max_passes, changes, frozenset(applied))
            seen[letters] = p
            changes_before.append(changes)
        any_applied = False
        for j in range(n):
            hit = resolve(letters, seq[j])
            if hit is None:
                continue
            letters = hit[0]
            any_applied = True
            applied.add(j)
            if us[j]:
                changes += 1
            if not letters:
                return RunOutcome(True, p, changes, frozenset(applied))
        if not any_applied:
            return RunOutcome(False, p, changes, frozenset(applied))
    return RunOutcome(False, max_passes, changes, frozenset(applied))


def _cycle_changes(changes_before, changes_now, q, p, max_passes):
    """Crossing changes the replay of passes p..max_passes would add, given passes q..p-1 repeat."""
    marks = changes_before[q - 1:] + [changes_now]
    per_pass = [b - a for a, b in zip(marks, marks[1:])]
    period = len(per_pass)
    remaining = max_passes - p + 1
    full, part = divmod(remaining, period)
    return full * sum(per_pass) + sum(per_pass[:part])


def run(w: BraidWord, seq: Sequence[str], max_passes: int = 1) -> ExecutionTrace:
    if max_passes < 1:
        raise ValueError("max_passes must be >= 1")
    steps: list[Step] = []
    letters = w.letters
    changes = 0
    passes = 0
    if letters:
        done = False
        for p in range(1, max_passes + 1):
            passes = p
            any_applied = False
            for j, token in enumerate(seq):
                hit = resolve(letters, token)
                if hit is None:
                    outcome = ApplicationOutcome(Status.SKIPPED, BraidWord(letters))
                else:
                    letters, variant, site = hit
                    outcome = ApplicationOutcome(Status.APPLIED, BraidWord(letters), variant, site)
                    any_applied = True
                    if _is_u(token):
                        changes += 1
                steps.append(Step(p, j + 1, token, outcome))
                if hit is not None and not letters:
                    done = True
                    break
            if done or not any_applied:
                break
    final = BraidWord(letters)
    return ExecutionTrace(tuple(steps), final, final.is_trivial(), passes, changes)


def elide(w: BraidWord, seq: Sequence[str], max_passes: int = 1) -> tuple[MoveSequence, int]:
    """
    Drop every move that never applied while running ``seq`` on ``w``.

    Returns the shortened sequence and its length.  If nothing applied at all,
    the first move is kept (sequences are never empty) but the reported
    length is 0.
    """
    out = execute(w.letters, seq, max_passes)
    kept = tuple(t for j, t in enumerate(seq) if j in out.applied_positions)
    if not kept:
        return tuple(seq[:1]), 0
    return kept, len(kept)


@dataclass(frozen=True)
class RunMetrics:
    r_S: int
    min_S: int
    max_S: int
    l: int
    l_opt: int
    c: int
    c_S: int
    size: int = field(default=1)  # |S|

    def as_dict(self) -> dict:
        return {
            "r_S": self.r_S,
            "min_S": self.min_S,
            "max_S": self.max_S,
            "c": self.c,
            "c_S": self.c_S,
            "l": self.l,
            "l_opt": self.l_opt,
        }


def evaluate_set(braids: Sequence[BraidWord], seq: Sequence[str], max_passes: int) -> RunMetrics:
    """Run ``seq`` against every braid and aggregate the metrics fitness needs."""
    if not braids:
        raise ValueError("braid set must be nonempty")
    reduced_passes = []
    c_S = 0
    l_opt = len(seq)
    for w in braids:
        out = execute(w.letters, seq, max_passes)
        c_S += out.crossing_changes
        if out.reduced:
            reduced_passes.append(out.passes)
        if len(braids) == 1:
            l_opt = len(out.applied_positions)
    c = sum(1 for t in seq if _is_u(t))
    return RunMetrics(
        r_S=len(reduced_passes),
        min_S=min(reduced_passes, default=0),
        max_S=max(reduced_passes, default=0),
        l=len(seq),
        l_opt=l_opt,
        c=c,
        c_S=c_S,
        size=len(braids),
    )
