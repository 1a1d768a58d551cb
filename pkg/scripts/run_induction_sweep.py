#!/usr/bin/env python3
"""Sweep the higher-dimensional constructions: for each N and degree,
build the family for every supported size (plus the full monomial set),
check it, and expect a stable verdict everywhere."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from syzstab.criterion import Stability, check_efficient
from syzstab.families import generate


@dataclass(frozen=True)
class SweepConfig:
    dims: tuple[int, ...]
    d_max: int
    jobs: int


def sweep_cell(cell: tuple[int, int]) -> tuple[int, int, int, list[str]]:
    """Check all supported sizes for one (N, d)."""
    N, d = cell
    problems = []
    sizes = list(range(N + 1, comb(d + 2, 2) + N - 2 + 1))
    full = comb(d + N, N)
    if full not in sizes:
        sizes.append(full)
    for n in sizes:
        family, recipe = generate(N, n, d)
        verdict = check_efficient(family)
        if verdict.status is not Stability.STABLE:
            problems.append(
                f"(N={N}, n={n}, d={d}) [{recipe.source}]: got "
                f"{verdict.status.value}"
            )
    return N, d, len(sizes), problems


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--dims", type=int, nargs="+", default=[3, 4, 5], metavar="N"
    )
    parser.add_argument("--d-max", type=int, default=8)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    config = SweepConfig(dims=tuple(args.dims), d_max=args.d_max, jobs=args.jobs)

    cells = [(N, d) for N in config.dims for d in range(1, config.d_max + 1)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(sweep_cell, cells))
    else:
        results = [sweep_cell(cell) for cell in cells]

    total = 0
    failures = []
    for N, d, count, problems in results:
        total += count
        failures.extend(problems)
        print(f"N={N} d={d}: {count} families checked, {len(problems)} problems")
    print(f"total: {total} families")
    for line in failures:
        print(f"PROBLEM {line}", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
