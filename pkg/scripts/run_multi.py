"""
Evolve universal unknotting sequences for nested corpus ranges (best of three
seeded runs each) and print one row per set.

    python scripts/run_multi.py --seed 1 [--sets 3_1..4_1,3_1..5_2]
"""

import argparse
import time

from unknotting.corpus import knot_range
from unknotting.evolution import MULTIPLE, EvolutionConfig, evolve_runs
from unknotting.moves import ALPHABETS, format_sequence

DEFAULT_SETS = "3_1..4_1,3_1..5_2,3_1..6_3,3_1..7_7,3_1..8_21"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--alphabet", choices=sorted(ALPHABETS), default="generic")
    ap.add_argument("--sets", default=DEFAULT_SETS)
    ap.add_argument("--generations", type=int, default=None)
    args = ap.parse_args()

    cfg = EvolutionConfig(problem=MULTIPLE, seed=args.seed, generations=args.generations,
                          alphabet=ALPHABETS[args.alphabet])
    print("S\tM\tmax_S\tr_S\t|S|\tfitness\tseconds")
    for spec in args.sets.split(","):
        first, _, last = spec.partition("..")
        records = knot_range(first, last)
        t0 = time.time()
        _, best = evolve_runs([r.word for r in records], cfg, [r.name for r in records])
        m = best.best_metrics
        print(f"{spec}\t{format_sequence(best.best)}\t{m.max_S}\t{m.r_S}\t{m.size}\t"
              f"{best.best_fitness:.4f}\t{time.time() - t0:.0f}", flush=True)


if __name__ == "__main__":
    main()
