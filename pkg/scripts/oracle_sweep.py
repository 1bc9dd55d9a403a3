"""Compare every solver with exhaustive search on seeded random instances.

    python3 scripts/oracle_sweep.py --count 200 --seed 0

Prints one line per configuration with the number of agreements and the
first few disagreeing seeds.
"""
from __future__ import annotations

import argparse
import random
import sys

from divcommittee.generate import generate
from divcommittee.solvers import (
    balanced_pair_greedy,
    brute_force,
    dp_independent_1laminar,
    feasibility_interval_1laminar,
    greedy_lower_extension,
    matroid_intersection_feasibility,
    pair_greedy_bound,
    weighted_matroid_intersection,
)


def _draw(rng: random.Random, even: bool = False, m_max: int = 10, k_max: int = 5):
    m = rng.randint(3, m_max)
    k = 0 if rng.random() < 0.05 else rng.randint(1, min(k_max, m))
    if even:
        k -= k % 2
    return m, k


def check_dp(seed: int) -> bool:
    rng = random.Random(seed)
    m, k = _draw(rng)
    inst = generate("laminar", m, k, seed, constraints="independent", tight=0.5)
    got, want = dp_independent_1laminar(inst), brute_force(inst)
    return (got.status == want.status or (got.status, want.status) == ("optimal", "optimal")) and \
        got.committee == want.committee and got.value == want.value


def check_feasibility(seed: int) -> bool:
    rng = random.Random(seed)
    m, k = _draw(rng)
    inst = generate("laminar", m, k, seed, slack=rng.randint(0, 1), tight=0.3)
    got = feasibility_interval_1laminar(inst)
    return got.feasible == brute_force(inst, mode="feasibility").feasible


def check_greedy(seed: int) -> bool:
    rng = random.Random(seed)
    m, k = _draw(rng)
    inst = generate("laminar", m, k, seed, tight=0.2)
    got, want = greedy_lower_extension(inst), brute_force(inst)
    return got.feasible == want.feasible and got.value == want.value


def check_greedy_cc(seed: int) -> bool:
    rng = random.Random(seed)
    m, k = _draw(rng, m_max=8)
    inst = generate("laminar", m, k, seed, objective="cc", voters=rng.randint(1, 6), tight=0.2)
    got, want = greedy_lower_extension(inst), brute_force(inst)
    if got.feasible != want.feasible:
        return False
    return not want.feasible or 2 * got.value >= want.value


def check_intersection(seed: int) -> bool:
    rng = random.Random(seed)
    m, k = _draw(rng)
    kind = rng.choice(["two-laminar", "layered"])
    inst = generate(kind, m, k, seed, tight=0.2)
    want = brute_force(inst)
    feas = matroid_intersection_feasibility(inst)
    best = weighted_matroid_intersection(inst)
    return feas.feasible == want.feasible and best.value == want.value and best.committee == want.committee


def check_pairs(seed: int) -> bool:
    rng = random.Random(seed)
    half = rng.randint(1, 4)
    m = rng.randint(2 * half, min(2 * half + 4, 10))
    inst = generate("balanced", m, 2 * half, seed, objective="cc", voters=rng.randint(1, 6))
    got, want = balanced_pair_greedy(inst), brute_force(inst)
    bound = pair_greedy_bound(half)
    return got.value * bound.denominator >= bound.numerator * want.value


CHECKS = {
    "dp-independent": check_dp,
    "interval-feasibility": check_feasibility,
    "greedy-separable": check_greedy,
    "greedy-cc-half": check_greedy_cc,
    "intersection": check_intersection,
    "pair-greedy": check_pairs,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--only", choices=sorted(CHECKS))
    args = parser.parse_args(argv)
    failed = False
    for name, check in CHECKS.items():
        if args.only and name != args.only:
            continue
        bad = [s for s in range(args.seed, args.seed + args.count) if not check(s)]
        failed |= bool(bad)
        print(f"{name:22s} {args.count - len(bad)}/{args.count} agree" + (f"  first bad seeds {bad[:5]}" if bad else ""))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
