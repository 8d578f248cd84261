"""
Command-line front end.

    unknot apply 4_1 "U M1 M1 R3 R2 M2 M2"
    unknot evolve-single 3_1 --seed 1
    unknot evolve-multi 3_1..6_3 --output json
    unknot verify --trials 100
    unknot corpus

Exit codes: 0 success, 1 bad input, 2 ``apply`` did not reduce the word,
3 ``verify`` found a violated invariant.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .braid import WordParseError, components, format_word, parse_word
from .corpus import CorpusError, KnotRecord, builtin_corpus, knot_range, load_corpus
from .evolution import DEFAULT_SEED, MULTIPLE, SINGLE, EvolutionConfig, evolve_runs
from .executor import elide, run
from .moves import ALPHABETS, MoveParseError, format_sequence, parse_sequence
from .verify import determinant, alexander, soundness_suite

EXIT_OK, EXIT_INPUT, EXIT_NOT_REDUCED, EXIT_VIOLATION = 0, 1, 2, 3


class InputError(Exception):
    pass


def _records(path: Optional[str]) -> list[KnotRecord]:
    if path is None:
        return builtin_corpus()
    try:
        return load_corpus(path)
    except (OSError, CorpusError) as e:
        raise InputError(str(e)) from None


def resolve_targets(specs: Sequence[str], records: list[KnotRecord]) -> list[KnotRecord]:
    """Corpus names, ``first..last`` ranges, or literal words like ``"1 -2 1 -2"``."""
    by_name = {r.name: r for r in records}
    out = []
    for spec in specs:
        if spec in by_name:
            out.append(by_name[spec])
        elif ".." in spec:
            first, _, last = spec.partition("..")
            try:
                out.extend(knot_range(first.strip(), last.strip(), records))
            except CorpusError:
                raise InputError(f"bad knot range {spec!r}") from None
        else:
            try:
                w = parse_word(spec)
            except WordParseError as e:
                raise InputError(f"{spec!r} is neither a known knot nor a braid word ({e})") from None
            out.append(KnotRecord(format_word(w) or "()", w))
    for r in out:
        n = components(r.word)
        if n != 1:
            raise InputError(f"{r.name} closes to a {n}-component link; only knots can be unknotted")
    return out


def cmd_apply(args) -> int:
    records = _records(args.corpus)
    by_name = {r.name: r for r in records}
    if args.target in by_name:
        w = by_name[args.target].word
    else:
        try:
            w = parse_word(args.target)
        except WordParseError as e:
            raise InputError(str(e)) from None
    try:
        seq = parse_sequence(args.sequence)
    except MoveParseError as e:
        raise InputError(str(e)) from None
    trace = run(w, seq, args.max_passes or 1)
    if trace.steps:
        print(trace.render())
    status = "reduced" if trace.reduced else "not reduced"
    print(f"{status}; passes {trace.passes}; crossing changes {trace.crossing_changes}")
    return EXIT_OK if trace.reduced else EXIT_NOT_REDUCED


def _config(args, problem: str) -> EvolutionConfig:
    return EvolutionConfig(
        problem=problem,
        population=args.population,
        generations=args.generations,
        max_passes=args.max_passes,
        runs=args.runs,
        seed=args.seed,
        alphabet=ALPHABETS[args.alphabet],
    )


def cmd_evolve(args, problem: str) -> int:
    records = resolve_targets(args.targets, _records(args.corpus))
    if problem == SINGLE and len(records) != 1:
        raise InputError("evolve-single takes exactly one knot")
    words = [r.word for r in records]
    names = [r.name for r in records]
    cfg = _config(args, problem)
    if cfg.runs < 1:
        raise InputError("--runs must be >= 1")
    try:
        reports, best = evolve_runs(words[0] if problem == SINGLE else words, cfg, names)
    except ValueError as e:
        raise InputError(str(e)) from None

    if args.output == "json":
        doc = {"runs": [r.to_json() for r in reports], "best_seed": best.seed}
        print(json.dumps(doc, indent=2))
        return EXIT_OK

    if problem == SINGLE:
        rec = records[0]
        print("seed\tK\tM\tc(M)\tu(K)\tl_opt\tfitness")
        for r in reports + [best]:
            m = r.best_metrics
            seq, _ = elide(rec.word, r.best) if m.r_S else (r.best, 0)
            u = "?" if rec.known_u is None else rec.known_u
            label = "best" if r is best else str(r.seed)
            shown = format_sequence(seq) if m.r_S else "(not reduced)"
            print(f"{label}\t{rec.name}\t{shown}\t{m.c_S}\t{u}\t{m.l_opt}\t{r.best_fitness:.4f}")
    else:
        label_set = names[0] if len(names) == 1 else f"{names[0]}..{names[-1]}"
        print("seed\tS\tM\tmax_S\tr_S\t|S|\tfitness")
        for r in reports + [best]:
            m = r.best_metrics
            label = "best" if r is best else str(r.seed)
            print(f"{label}\t{label_set}\t{format_sequence(r.best)}\t{m.max_S}\t{m.r_S}\t{m.size}\t{r.best_fitness:.4f}")
    return EXIT_OK


def cmd_verify(args) -> int:
    records = _records(args.corpus)
    report = soundness_suite([r.word for r in records], trials=args.trials, seed=args.seed)
    print(f"words checked {report.words}; move applications {report.applications}; "
          f"violations {len(report.violations)}")
    for v in report.violations:
        print(str(v))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_corpus(args) -> int:
    print("K\tword\tstrands\tcrossings\tu\tc\tdet\talexander")
    for r in _records(args.corpus):
        u = "" if r.known_u is None else r.known_u
        c = "" if r.paper_c is None else r.paper_c
        print(f"{r.name}\t{format_word(r.word)}\t{r.strands}\t{r.crossings}\t{u}\t{c}\t"
              f"{determinant(r.word)}\t{alexander(r.word)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--population", type=int, default=None)
    common.add_argument("--generations", type=int, default=None)
    common.add_argument("--max-passes", type=int, default=None)
    common.add_argument("--runs", type=int, default=3)
    common.add_argument("--alphabet", choices=sorted(ALPHABETS), default="generic")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--corpus", default=None, help="corpus file (default: built-in knots)")

    p = argparse.ArgumentParser(prog="unknot", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("apply", parents=[common], help="run a move sequence and print the trace")
    a.add_argument("target", help="knot name or braid word")
    a.add_argument("sequence", help='move sequence, e.g. "U M1^2 R3 R2 M2^2"')

    s = sub.add_parser("evolve-single", parents=[common], help="evolve an unknotting sequence for one knot")
    s.add_argument("targets", nargs=1, metavar="target")

    m = sub.add_parser("evolve-multi", parents=[common], help="evolve one sequence for a set of knots")
    m.add_argument("targets", nargs="+", metavar="target")

    v = sub.add_parser("verify", parents=[common], help="check move soundness with knot invariants")
    v.add_argument("--trials", type=int, default=100)

    sub.add_parser("corpus", parents=[common], help="list the knot corpus with invariants")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        if args.command == "apply":
            return cmd_apply(args)
        if args.command == "evolve-single":
            return cmd_evolve(args, SINGLE)
        if args.command == "evolve-multi":
            return cmd_evolve(args, MULTIPLE)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_corpus(args)
    except InputError as e:
        print(f"unknot: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
