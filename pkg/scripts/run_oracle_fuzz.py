#!/usr/bin/env python3
"""Differential fuzzing of the two checkers: draw random families (equal
and mixed degree), run the exponential subset scan and the divisor-grid
checker on each, and require identical statuses plus witnesses that
re-validate exactly through subset_quotient."""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from syzstab.criterion import (
    Stability,
    check_brute_force,
    check_efficient,
    subset_quotient,
)
from syzstab.monomial import MonomialFamily, exponent_vectors_of_degree


@dataclass(frozen=True)
class FuzzConfig:
    samples: int
    seed: int
    max_dim: int
    max_degree: int
    max_size: int


def random_family(rng: random.Random, config: FuzzConfig) -> MonomialFamily:
    """A random gcd-1 family, equal-degree half the time, mixed otherwise."""
    while True:
        var_count = rng.randint(2, config.max_dim + 1)
        if rng.random() < 0.5:
            d = rng.randint(1, config.max_degree)
            pool = list(exponent_vectors_of_degree(var_count, d))
            n = rng.randint(2, min(config.max_size, len(pool)))
            members = rng.sample(pool, n)
        else:
            n = rng.randint(2, config.max_size)
            members = set()
            while len(members) < n:
                d = rng.randint(1, config.max_degree)
                vec = [0] * var_count
                for _ in range(d):
                    vec[rng.randrange(var_count)] += 1
                members.add(tuple(vec))
            members = sorted(members)
        family = MonomialFamily.of(members, var_count=var_count)
        if family.overall_gcd().is_unit:
            return family


def revalidate(family: MonomialFamily, verdict) -> None:
    """Witness invariants: quotients recompute exactly and sit on the
    claimed side of the slope."""
    if verdict.status is Stability.UNSTABLE:
        assert verdict.violation is not None
        again = subset_quotient(family, verdict.violation.indices)
        assert again.quotient == verdict.violation.quotient
        assert again.gcd == verdict.violation.gcd
        assert again.quotient > verdict.family_slope
    else:
        assert verdict.violation is None
    if verdict.status is Stability.SEMISTABLE_ONLY:
        assert verdict.equality_witness is not None
        again = subset_quotient(family, verdict.equality_witness.indices)
        assert again.quotient == verdict.equality_witness.quotient
        assert again.quotient == verdict.family_slope


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--max-dim", type=int, default=3)
    parser.add_argument("--max-degree", type=int, default=8)
    parser.add_argument("--max-size", type=int, default=12)
    args = parser.parse_args()
    seed = args.seed if args.seed is not None else random.randrange(2**32)
    config = FuzzConfig(
        samples=args.samples,
        seed=seed,
        max_dim=args.max_dim,
        max_degree=args.max_degree,
        max_size=args.max_size,
    )
    print(f"seed: {config.seed}")
    rng = random.Random(config.seed)

    counts = {status: 0 for status in Stability}
    for index in range(config.samples):
        family = random_family(rng, config)
        fast = check_efficient(family)
        slow = check_brute_force(family)
        if fast.status is not slow.status:
            print(
                f"MISMATCH at sample {index}: fast={fast.status.value} "
                f"slow={slow.status.value}\n{family.to_text()}",
                file=sys.stderr,
            )
            return 1
        revalidate(family, fast)
        revalidate(family, slow)
        counts[fast.status] += 1
        if (index + 1) % 1000 == 0:
            print(f"{index + 1}/{config.samples} checked")

    for status, count in counts.items():
        print(f"{status.value}: {count}")
    print("all statuses agree; all witnesses re-validate")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
