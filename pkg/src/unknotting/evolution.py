"""
Genetic search for unknotting move sequences.

Individuals are variable-length tuples of move tokens.  A generation is
evaluate -> select -> crossover -> mutate.  Randomness comes from four
independent streams (init, mutation, crossover, selection) derived from the
run seed, so the draws in one stage never shift those of another.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field, replace
from typing import Optional, Sequence, Union

from .braid import BraidWord, components, format_word
from .executor import MoveSequence, RunMetrics, evaluate_set
from .moves import GENERIC_ALPHABET, format_sequence

SINGLE = "single"
MULTIPLE = "multiple"
DEFAULT_SEED = 1

_DEFAULTS = {
    SINGLE: {"population": 500, "max_passes": 1},
    MULTIPLE: {"population": 200, "max_passes": 50},
}


@dataclass(frozen=True)
class EvolutionConfig:
    problem: str = SINGLE
    population: Optional[int] = None  # None: 500 single / 200 multiple
    generations: Optional[int] = None  # None: 4 * (longest target word)^2
    mutation_rate: float = 0.10
    init_min: int = 1
    init_max: int = 15
    max_passes: Optional[int] = None  # None: 1 single / 50 multiple
    runs: int = 3
    seed: int = DEFAULT_SEED
    alphabet: tuple[str, ...] = GENERIC_ALPHABET
    use_cache: bool = True

    def resolved(self, targets: Sequence[BraidWord]) -> "EvolutionConfig":
        if self.problem not in _DEFAULTS:
            raise ValueError(f"unknown problem {self.problem!r}")
        d = _DEFAULTS[self.problem]
        longest = max(len(w) for w in targets)
        cfg = replace(
            self,
            population=self.population if self.population is not None else d["population"],
            max_passes=self.max_passes if self.max_passes is not None else d["max_passes"],
            generations=self.generations if self.generations is not None else max(1, 4 * longest ** 2),
            alphabet=tuple(self.alphabet),
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.population is not None and self.population < 2:
            raise ValueError("population must be >= 2")
        if self.generations is not None and self.generations < 1:
            raise ValueError("generations must be >= 1")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError("mutation rate must be in [0, 1]")
        if not 1 <= self.init_min <= self.init_max:
            raise ValueError("need 1 <= init_min <= init_max")
        if self.max_passes is not None and self.max_passes < 1:
            raise ValueError("max_passes must be >= 1")
        if not self.alphabet:
            raise ValueError("alphabet is empty")


def streams(seed: int) -> dict[str, random.Random]:
    """One generator per stochastic stage, each seeded from ``"unknotting:<seed>:<stage>"``."""
    return {name: random.Random(f"unknotting:{seed}:{name}")
            for name in ("init", "mutation", "crossover", "selection")}


# --- variation operators ------------------------------------------------------

def init_population(cfg: EvolutionConfig, rng: random.Random) -> list[MoveSequence]:
    alphabet = cfg.alphabet
    return [
        tuple(rng.choice(alphabet) for _ in range(rng.randint(cfg.init_min, cfg.init_max)))
        for _ in range(cfg.population)
    ]


def replace_move(s: MoveSequence, i: int, move: str) -> MoveSequence:
    return s[:i] + (move,) + s[i + 1:]


def delete_move(s: MoveSequence, i: int) -> MoveSequence:
    if len(s) == 1:
        return s
    return s[:i] + s[i + 1:]


def insert_move(s: MoveSequence, i: int, move: str) -> MoveSequence:
    return s[:i] + (move,) + s[i:]


def mutation_operator(rng: random.Random, rate: float) -> Optional[int]:
    """0 replace, 1 delete, 2 insert, or None when no mutation happens."""
    if rng.random() >= rate:
        return None
    return rng.randrange(3)


def mutate(s: MoveSequence, rng: random.Random, alphabet: Sequence[str],
           rate: float = 0.10) -> MoveSequence:
    op = mutation_operator(rng, rate)
    if op is None:
        return s
    if op == 0:
        return replace_move(s, rng.randrange(len(s)), rng.choice(alphabet))
    if op == 1:
        return delete_move(s, rng.randrange(len(s)))
    return insert_move(s, rng.randint(0, len(s)), rng.choice(alphabet))


def cut(a: MoveSequence, b: MoveSequence, k: int) -> tuple[MoveSequence, MoveSequence]:
    return a[:k] + b[k:], b[:k] + a[k:]


def crossover(a: MoveSequence, b: MoveSequence, rng: random.Random) -> tuple[MoveSequence, MoveSequence]:
    return cut(a, b, rng.randint(1, min(len(a), len(b))))


def crossover_pool(pool: Sequence[MoveSequence], rng: random.Random) -> list[MoveSequence]:
    """Shuffle, then cross adjacent pairs; an odd one out passes through."""
    pool = list(pool)
    rng.shuffle(pool)
    out = []
    for i in range(0, len(pool) - 1, 2):
        out.extend(crossover(pool[i], pool[i + 1], rng))
    if len(pool) % 2:
        out.append(pool[-1])
    return out


# --- fitness and selection ----------------------------------------------------

def fitness_f1(m: RunMetrics) -> float:
    return 1.0 + 10000.0 * m.r_S / (m.l_opt + float(m.c_S) ** 3 + 1.0)


def fitness_f2(m: RunMetrics) -> float:
    return 1.0 + float(m.r_S) ** 2 / (1.0 + m.max_S + m.l)


def normalised(fitnesses: Sequence[float]) -> list[float]:
    mean = sum(fitnesses) / len(fitnesses)
    return [f / mean for f in fitnesses]


def expected_copies(fbar: float) -> tuple[int, float]:
    """Guaranteed copies and the probability of one more."""
    whole = int(fbar)
    return whole, fbar - whole


def draw_copies(fbar: Sequence[float], order: Sequence[int], rng: random.Random) -> list[int]:
    """Realised copy count per member, drawing in rank ``order``."""
    copies = [0] * len(fbar)
    for i in order:
        whole, frac = expected_copies(fbar[i])
        copies[i] = whole + (rng.random() < frac)
    return copies


def select(population: Sequence[MoveSequence], fitnesses: Sequence[float],
           rng: random.Random, size: Optional[int] = None) -> list[MoveSequence]:
    """
    Copies by normalised fitness: the integer part is guaranteed, the
    fractional part is the chance of one more.  The realised pool is then cut
    back (dropping the weakest) or topped up (repeating the strongest) to
    ``size``, which defaults to the current population size.
    """
    n = len(population)
    if n == 0:
        raise ValueError("empty population")
    size = n if size is None else size
    order = sorted(range(n), key=lambda i: -fitnesses[i])
    copies = draw_copies(normalised(fitnesses), order, rng)
    pool: list[MoveSequence] = []
    for i in order:
        pool.extend([population[i]] * copies[i])
    if len(pool) > size:
        del pool[size:]
    k = 0
    while len(pool) < size:
        pool.append(population[order[k % n]])
        k += 1
    return pool


# --- the run ------------------------------------------------------------------

@dataclass
class EvolutionReport:
    problem: str
    seed: int
    config: EvolutionConfig
    targets: list[str]
    best: MoveSequence
    best_metrics: RunMetrics
    best_fitness: float
    history: list[tuple[int, float, float]] = field(default_factory=list)  # gen, best-so-far, mean
    run_index: int = 0
    evaluations: int = 0

    def to_json(self) -> dict:
        cfg = asdict(self.config)
        cfg.pop("seed")
        cfg.pop("use_cache")
        cfg["alphabet"] = list(self.config.alphabet)
        cfg["targets"] = list(self.targets)
        m = self.best_metrics
        return {
            "problem": self.problem,
            "seed": self.seed,
            "config": cfg,
            "best": {
                "sequence": format_sequence(self.best),
                "fitness": self.best_fitness,
                "r_S": m.r_S,
                "max_S": m.max_S,
                "c": m.c,
                "c_S": m.c_S,
                "l": m.l,
                "l_opt": m.l_opt,
            },
            "history": [{"gen": g, "best": b, "mean": mean} for g, b, mean in self.history],
        }


def _rank_key(problem: str, seq: MoveSequence, fitness: float, m: RunMetrics):
    length = m.l_opt if problem == SINGLE else m.l
    return (-fitness, m.c_S, length, format_sequence(seq))


class Evaluator:
    """Fitness of a sequence against a fixed braid set, cached by the exact sequence."""

    def __init__(self, braids: Sequence[BraidWord], problem: str, max_passes: int, use_cache: bool = True):
        self.braids = list(braids)
        self.problem = problem
        self.max_passes = max_passes
        self.use_cache = use_cache
        self.cache: dict[MoveSequence, tuple[float, RunMetrics]] = {}
        self.calls = 0

    def __call__(self, seq: MoveSequence) -> tuple[float, RunMetrics]:
        if self.use_cache:
            hit = self.cache.get(seq)
            if hit is not None:
                return hit
        self.calls += 1
        m = evaluate_set(self.braids, seq, self.max_passes)
        f = fitness_f1(m) if self.problem == SINGLE else fitness_f2(m)
        if self.use_cache:
            self.cache[seq] = (f, m)
        return f, m


def check_targets(targets: Sequence[BraidWord]) -> None:
    if not targets:
        raise ValueError("no targets")
    for w in targets:
        if components(w) != 1:
            raise ValueError(f"[{format_word(w)}] closes to a {components(w)}-component link, not a knot")


def evolve(target: Union[BraidWord, Sequence[BraidWord]], cfg: EvolutionConfig,
           names: Optional[Sequence[str]] = None, run_index: int = 0) -> EvolutionReport:
    """One seeded run (seed ``cfg.seed``) of the generational loop."""
    targets = [target] if isinstance(target, BraidWord) else list(target)
    check_targets(targets)
    if cfg.problem == SINGLE and len(targets) != 1:
        raise ValueError("the single-knot problem takes exactly one target")
    cfg = cfg.resolved(targets)
    names = list(names) if names is not None else [format_word(w) for w in targets]
    rngs = streams(cfg.seed)
    score = Evaluator(targets, cfg.problem, cfg.max_passes, cfg.use_cache)

    population = init_population(cfg, rngs["init"])
    best = None
    history = []

    def assess(gen, population):
        nonlocal best
        scored = [score(s) for s in population]
        fits = [f for f, _ in scored]
        for s, (f, m) in zip(population, scored):
            key = _rank_key(cfg.problem, s, f, m)
            if best is None or key < best[0]:
                best = (key, s, f, m)
        history.append((gen, best[2], sum(fits) / len(fits)))
        return fits

    for gen in range(cfg.generations):
        fits = assess(gen, population)
        pool = select(population, fits, rngs["selection"], cfg.population)
        pool = crossover_pool(pool, rngs["crossover"])
        population = [mutate(s, rngs["mutation"], cfg.alphabet, cfg.mutation_rate) for s in pool]
    assess(cfg.generations, population)

    _, seq, f, m = best
    return EvolutionReport(cfg.problem, cfg.seed, cfg, names, seq, m, f, history,
                           run_index=run_index, evaluations=score.calls)


def report_key(r: EvolutionReport):
    """Ordering for picking the best of several runs: fitness, then crossing changes, then length."""
    m = r.best_metrics
    length = m.l_opt if r.problem == SINGLE else m.l
    return (-r.best_fitness, m.c_S, length, format_sequence(r.best), r.seed)


def evolve_runs(target: Union[BraidWord, Sequence[BraidWord]], cfg: EvolutionConfig,
                names: Optional[Sequence[str]] = None) -> tuple[list[EvolutionReport], EvolutionReport]:
    """``cfg.runs`` runs with seeds ``seed, seed+1, ...``; returns all reports and the best."""
    reports = [
        evolve(target, replace(cfg, seed=cfg.seed + i), names, run_index=i)
        for i in range(cfg.runs)
    ]
    return reports, min(reports, key=report_key)
