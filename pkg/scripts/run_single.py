"""
Evolve an unknotting sequence for every corpus knot (best of three seeded runs)
and print one row per knot: name, elided sequence, crossing changes, unknotting
number, and whether the published count was matched.

    python scripts/run_single.py --seed 1 [--alphabet generic] [--knots 3_1..6_3]
"""

import argparse
import time

from unknotting.corpus import builtin_corpus, knot_range
from unknotting.evolution import EvolutionConfig, evolve_runs
from unknotting.executor import elide
from unknotting.moves import ALPHABETS, format_sequence


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--alphabet", choices=sorted(ALPHABETS), default="generic")
    ap.add_argument("--knots", default=None, help="range like 3_1..6_3 (default: all)")
    args = ap.parse_args()

    records = builtin_corpus()
    if args.knots:
        first, _, last = args.knots.partition("..")
        records = knot_range(first, last or first, records)
    cfg = EvolutionConfig(seed=args.seed, alphabet=ALPHABETS[args.alphabet])

    reduced = matched = 0
    start = time.time()
    print("K\tM\tc(M)\tu(K)\tpublished c\truns reduced\tseconds")
    for rec in records:
        t0 = time.time()
        reports, best = evolve_runs(rec.word, cfg, [rec.name])
        m = best.best_metrics
        seq = format_sequence(elide(rec.word, best.best)[0]) if m.r_S else "-"
        reduced += m.r_S
        matched += bool(m.r_S and rec.paper_c is not None and m.c_S <= rec.paper_c)
        runs = sum(r.best_metrics.r_S for r in reports)
        print(f"{rec.name}\t{seq}\t{m.c_S if m.r_S else '-'}\t{rec.known_u}\t{rec.paper_c}\t"
              f"{runs}/{len(reports)}\t{time.time() - t0:.1f}", flush=True)
    print(f"reduced {reduced}/{len(records)}; c <= published {matched}; "
          f"seeds {cfg.seed}..{cfg.seed + cfg.runs - 1}; {time.time() - start:.0f}s")


if __name__ == "__main__":
    main()
