"""Distribution of the price of diversity on seeded balanced instances.

    python3 scripts/pod_survey.py --count 300 --objective cc

Prints a histogram of exact ratios and the largest one found, which stays
at or below 2 for monotone submodular objectives.
"""
from __future__ import annotations

import argparse
import random
import sys
from collections import Counter
from fractions import Fraction

from divcommittee.analysis import price_of_diversity
from divcommittee.generate import OBJECTIVES, generate


def survey(count: int, seed: int, objective: str, max_half: int) -> Counter:
    ratios: Counter = Counter()
    for s in range(seed, seed + count):
        rng = random.Random(s)
        half = rng.randint(1, max_half)
        m = rng.randint(2 * half, 2 * half + 4)
        rep = price_of_diversity(generate("balanced", m, 2 * half, s, objective=objective, voters=rng.randint(1, 8)))
        if rep.ratio is not None:
            ratios[rep.ratio] += 1
    return ratios


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--objective", choices=OBJECTIVES, default="cc")
    parser.add_argument("--max-half", type=int, default=4)
    args = parser.parse_args(argv)
    ratios = survey(args.count, args.seed, args.objective, args.max_half)
    buckets = Counter(min(int((r - 1) * 10), 9) for r in ratios.elements())
    total = sum(ratios.values())
    for b in range(10):
        lo = 1 + Fraction(b, 10)
        label = f"[{float(lo):.1f}, {float(lo) + 0.1:.1f})" if b < 9 else f"[{float(lo):.1f}, ...)"
        print(f"{label:12s} {buckets[b]:5d}  {'#' * round(60 * buckets[b] / max(total, 1))}")
    worst = max(ratios, default=Fraction(1))
    print(f"{total} defined ratios, largest {worst} = {float(worst):.4f}")
    return 0 if worst <= 2 else 1


if __name__ == "__main__":
    sys.exit(main())
