"""Exhaustive search over m-primary monomial families of fixed degree,
asking whether any of them has a (semi)stable syzygy bundle.

A family of degree-d monomials generates an m-primary ideal exactly when
it contains every pure power X_i^d, so the search space is "pure powers
plus an n-(N+1)-subset of the remaining degree-d monomials".  The free
monomials are indexed in canonical order and the subset space is
partitioned by the smallest chosen index, which gives deterministic
enumeration, cheap parallelism (partitions share nothing), and a natural
checkpoint token (partition, offset within partition).

Families related by a permutation of the variables have the same verdict,
so only orbit representatives are checked: a family is checked iff its
ascending-sorted exponent sequence is lexicographically minimal among all
(N+1)! axis permutations.  Every enumerated family still counts towards
``families_examined`` and the budget; ``orbits_examined`` counts checks.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice, permutations
from math import comb
from typing import Callable, Optional

from .criterion import Stability, check_efficient
from .errors import Error, UnsupportedRangeError
from .monomial import Monomial, MonomialFamily, exponent_vectors_of_degree

DEFAULT_BUDGET = 10**7

#: best_status value when no examined family is even semistable.
NONE_SEMISTABLE = "none-semistable"

_STATUS_RANK = {Stability.STABLE: 2, Stability.SEMISTABLE_ONLY: 1}


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a search run, possibly truncated by the family budget."""

    N: int
    n: int
    d: int
    families_examined: int
    orbits_examined: int
    best_status: str
    best_family: Optional[MonomialFamily]
    exhausted: bool
    resume_token: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "d": self.d,
            "families_examined": self.families_examined,
            "orbits_examined": self.orbits_examined,
            "best_status": self.best_status,
            "best_family": (
                None if self.best_family is None else self.best_family.to_json_dict()
            ),
            "exhausted": self.exhausted,
            "resume_token": self.resume_token,
        }


def _free_monomials(N: int, d: int) -> list[tuple[int, ...]]:
    """Degree-d exponent vectors that are not pure powers, canonical order."""
    return [v for v in exponent_vectors_of_degree(N + 1, d) if d not in v]


def _sorted_exps(exps) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(exps))


def _is_orbit_representative(
    family_exps: tuple[tuple[int, ...], ...], perms: list[tuple[int, ...]]
) -> bool:
    """True iff no axis permutation produces a lexicographically smaller
    ascending-sorted exponent sequence."""
    for perm in perms:
        permuted = _sorted_exps(tuple(e[i] for i in perm) for e in family_exps)
        if permuted < family_exps:
            return False
    return True


def _partition_sizes(free_count: int, k: int) -> list[int]:
    """Family count per partition; partition p holds the subsets whose
    smallest free index is p."""
    if k == 0:
        return [1]
    return [comb(free_count - 1 - p, k - 1) for p in range(free_count)]


def _scan_partition(
    N: int, d: int, n: int, partition: int, skip: int, limit: Optional[int]
) -> tuple[int, int, Optional[str], Optional[list]]:
    """Enumerate one partition (from offset ``skip``, at most ``limit``
    families) and return (families, orbits, best status value, best family
    exponents)."""
    free = _free_monomials(N, d)
    pure = [tuple(d if i == j else 0 for i in range(N + 1)) for j in range(N + 1)]
    perms = list(permutations(range(N + 1)))
    k = n - (N + 1)
    if k == 0:
        tails = iter([()])
    else:
        tails = combinations(range(partition + 1, len(free)), k - 1)
    stop = None if limit is None else skip + limit
    families = 0
    best_rank = 0
    best_exps: Optional[tuple[tuple[int, ...], ...]] = None
    orbits = 0
    for tail in islice(tails, skip, stop):
        families += 1
        chosen = (partition, *tail) if k else ()
        exps = _sorted_exps(pure + [free[c] for c in chosen])
        if not _is_orbit_representative(exps, perms):
            continue
        orbits += 1
        verdict = check_efficient(MonomialFamily.of(exps))
        rank = _STATUS_RANK.get(verdict.status, 0)
        if rank > best_rank or (rank == best_rank and rank and exps < best_exps):
            best_rank, best_exps = rank, exps
    status = {2: Stability.STABLE.value, 1: Stability.SEMISTABLE_ONLY.value}.get(
        best_rank
    )
    return (
        families,
        orbits,
        status,
        None if best_exps is None else [list(e) for e in best_exps],
    )


def _merge_best(
    a_status: Optional[str], a_exps, b_status: Optional[str], b_exps
) -> tuple[Optional[str], Optional[list]]:
    rank = {Stability.STABLE.value: 2, Stability.SEMISTABLE_ONLY.value: 1, None: 0}
    if rank[b_status] > rank[a_status]:
        return b_status, b_exps
    if rank[b_status] == rank[a_status] and b_exps is not None:
        if a_exps is None or [tuple(e) for e in b_exps] < [tuple(e) for e in a_exps]:
            return b_status, b_exps
    return a_status, a_exps


def _make_token(
    N: int, d: int, n: int, partition: int, offset: int,
    families: int, orbits: int, best_status: Optional[str], best_exps,
) -> str:
    return json.dumps(
        {
            "schema_version": 1,
            "N": N,
            "d": d,
            "n": n,
            "partition": partition,
            "offset": offset,
            "families_examined": families,
            "orbits_examined": orbits,
            "best_status": best_status,
            "best_family": best_exps,
        },
        separators=(",", ":"),
    )


def _parse_token(token: str, N: int, d: int, n: int) -> dict:
    try:
        state = json.loads(token)
        assert state["schema_version"] == 1
        for key in ("partition", "offset", "families_examined", "orbits_examined"):
            assert isinstance(state[key], int)
    except (AssertionError, KeyError, TypeError, ValueError) as exc:
        raise Error(f"malformed resume token: {exc}") from exc
    if (state["N"], state["d"], state["n"]) != (N, d, n):
        raise Error(
            f"resume token is for (N={state['N']}, d={state['d']}, "
            f"n={state['n']}), not (N={N}, d={d}, n={n})"
        )
    return state


def exhaustive_search(
    N: int,
    d: int,
    n: int,
    budget: int = DEFAULT_BUDGET,
    progress: Optional[Callable[[dict], None]] = None,
    resume_token: Optional[str] = None,
    jobs: Optional[int] = None,
) -> SearchReport:
    """Check every m-primary family of n degree-d monomials in N+1
    variables, up to variable permutation, and report the best stability
    status found.

    ``budget`` caps the number of enumerated families; if it is reached
    the report has ``exhausted=False`` and carries a ``resume_token`` that
    a later call can pass to continue where this one stopped.  ``progress``
    receives one dict per finished partition.  ``jobs`` enumerates
    partitions in parallel; results are merged in partition order, so the
    outcome is independent of scheduling.
    """
    if N < 1:
        raise UnsupportedRangeError(f"need at least 2 variables (N >= 1), got N={N}")
    if d < 1:
        raise UnsupportedRangeError(f"degree must be at least 1, got {d}")
    if n < 2:
        raise UnsupportedRangeError(f"need at least 2 monomials, got n={n}")
    if budget < 1:
        raise UnsupportedRangeError(f"budget must be positive, got {budget}")

    k = n - (N + 1)
    free = _free_monomials(N, d)
    total = comb(len(free), k) if 0 <= k <= len(free) else 0

    families = 0
    orbits = 0
    best_status: Optional[str] = None
    best_exps = None
    start_partition, start_offset = 0, 0
    if resume_token is not None:
        state = _parse_token(resume_token, N, d, n)
        start_partition = state["partition"]
        start_offset = state["offset"]
        families = state["families_examined"]
        orbits = state["orbits_examined"]
        best_status = state["best_status"]
        best_exps = state["best_family"]

    if total == 0:
        return SearchReport(
            N=N, n=n, d=d, families_examined=0, orbits_examined=0,
            best_status=NONE_SEMISTABLE, best_family=None, exhausted=True,
        )

    sizes = _partition_sizes(len(free), k)
    partitions = [-1] if k == 0 else list(range(len(free)))

    # Per-partition enumeration caps reproducing the serial budget cut.
    plan: list[tuple[int, int, int, Optional[int]]] = []  # (p, skip, cap, size_left)
    remaining = budget - families
    truncated_at: Optional[tuple[int, int]] = None
    for idx, p in enumerate(partitions):
        if idx < start_partition:
            continue
        skip = start_offset if idx == start_partition else 0
        size_left = sizes[idx] - skip
        if size_left <= 0:
            continue
        if remaining <= 0:
            truncated_at = (idx, skip)
            break
        cap = min(size_left, remaining)
        plan.append((idx, p, skip, cap))
        remaining -= cap
        if cap < size_left:
            truncated_at = (idx, skip + cap)
            break

    if jobs is not None and jobs > 1 and len(plan) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    _scan_partition_star,
                    [(N, d, n, p, skip, cap) for _, p, skip, cap in plan],
                )
            )
    else:
        results = [
            _scan_partition(N, d, n, p, skip, cap) for _, p, skip, cap in plan
        ]

    for (idx, p, skip, cap), (fams, orbs, status, exps) in zip(plan, results):
        families += fams
        orbits += orbs
        best_status, best_exps = _merge_best(best_status, best_exps, status, exps)
        if progress is not None:
            progress(
                {
                    "event": "partition",
                    "partition": p,
                    "families": fams,
                    "orbits": orbs,
                    "families_examined": families,
                    "orbits_examined": orbits,
                    "best_status": best_status or NONE_SEMISTABLE,
                }
            )

    exhausted = truncated_at is None
    token = None
    if not exhausted:
        token = _make_token(
            N, d, n, truncated_at[0], truncated_at[1],
            families, orbits, best_status, best_exps,
        )

    best_family = None
    if best_exps is not None:
        best_family = MonomialFamily.of([tuple(e) for e in best_exps])
    return SearchReport(
        N=N,
        n=n,
        d=d,
        families_examined=families,
        orbits_examined=orbits,
        best_status=best_status or NONE_SEMISTABLE,
        best_family=best_family,
        exhausted=exhausted,
        resume_token=token,
    )


def _scan_partition_star(args):
    return _scan_partition(*args)
