"""Measured approximation ratios of the non-exact solvers against brute force.

    python3 scripts/greedy_ratio.py --count 300

For Chamberlin-Courant instances it compares the lower-extension greedy on
laminar labels with its proven 1/2, and the pair greedy and the complement
heuristic on balanced labels with 1 - (1 - 1/k')^k'.
"""
from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from divcommittee.generate import generate
from divcommittee.solvers import (
    balanced_pair_greedy,
    brute_force,
    cc_balanced_complement,
    greedy_lower_extension,
    pair_greedy_bound,
)


def measure(solver, make_instance, count: int, seed: int):
    ratios, below_bound = [], 0
    for s in range(seed, seed + count):
        inst, bound = make_instance(s)
        best = brute_force(inst)
        if not best.feasible or best.value == 0:
            continue
        got = solver(inst)
        ratio = Fraction(got.value, best.value)
        ratios.append(ratio)
        below_bound += ratio < bound
    return ratios, below_bound


def laminar_cc(s: int):
    rng = random.Random(s)
    m = rng.randint(3, 8)
    return generate("laminar", m, rng.randint(1, min(5, m)), s, objective="cc", voters=rng.randint(1, 6)), Fraction(1, 2)


def balanced_cc(s: int):
    rng = random.Random(s)
    half = rng.randint(1, 4)
    m = rng.randint(2 * half, min(2 * half + 4, 10))
    inst = generate("balanced", m, 2 * half, s, objective="cc", voters=rng.randint(1, 6))
    return inst, pair_greedy_bound(half)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    rows = [
        ("greedy, laminar CC", greedy_lower_extension, laminar_cc),
        ("pair greedy, balanced CC", balanced_pair_greedy, balanced_cc),
        ("complement, balanced CC", cc_balanced_complement, balanced_cc),
    ]
    print(f"{'solver':26s} {'n':>5s} {'optimal':>8s} {'mean':>7s} {'worst':>7s} {'<bound':>7s}")
    for name, solver, make_instance in rows:
        ratios, below = measure(solver, make_instance, args.count, args.seed)
        optimal = sum(r == 1 for r in ratios)
        mean = sum(ratios) / len(ratios)
        print(f"{name:26s} {len(ratios):5d} {optimal:8d} {float(mean):7.4f} {float(min(ratios)):7.4f} {below:7d}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
