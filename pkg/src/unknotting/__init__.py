"""Evolving move sequences that unknot closed braids."""

from .braid import BraidWord, GeneratorLetter, WordParseError, format_word, parse_word
from .moves import (
    ApplicationOutcome,
    Status,
    apply_move,
    find_application,
    format_sequence,
    parse_sequence,
)
from .executor import ExecutionTrace, RunMetrics, elide, evaluate_set, run
from .evolution import (
    EvolutionConfig,
    EvolutionReport,
    evolve,
    evolve_runs,
    fitness_f1,
    fitness_f2,
)
from .corpus import (
    KnotRecord,
    builtin_corpus,
    corpus_by_name,
    knot_range,
    load_corpus,
    torus_unknotting_number,
)
from .verify import alexander, determinant, soundness_suite

__all__ = [
    "ApplicationOutcome",
    "BraidWord",
    "EvolutionConfig",
    "EvolutionReport",
    "ExecutionTrace",
    "GeneratorLetter",
    "KnotRecord",
    "RunMetrics",
    "Status",
    "WordParseError",
    "alexander",
    "apply_move",
    "builtin_corpus",
    "corpus_by_name",
    "determinant",
    "elide",
    "evaluate_set",
    "evolve",
    "evolve_runs",
    "find_application",
    "fitness_f1",
    "fitness_f2",
    "format_sequence",
    "format_word",
    "knot_range",
    "load_corpus",
    "parse_sequence",
    "parse_word",
    "run",
    "soundness_suite",
    "torus_unknotting_number",
]
