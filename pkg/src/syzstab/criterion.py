"""Deciding (semi)stability of the syzygy bundle of a monomial family.

A family of n monomials without a common factor determines the bundle of
relations among its members on projective space; that bundle has rank n-1
and slope ``-(sum of degrees)/(n-1)``.  (Semi)stability reduces to finitely
many exact comparisons: every subset J of at least two members, other than
the whole family, must satisfy::

    (deg gcd(J) - sum of degrees over J) / (|J| - 1)  <  slope   (stable)
                                                      <=        (semistable)

This module offers two independent deciders.  ``check_brute_force`` walks
every subset and is the transparent oracle.  ``check_efficient`` scans only
candidate gcds (a divisor grid, or the gcd closure of the family) and is
exact as well: every subset's gcd shows up as a candidate, and every
candidate's extreme value is realized by an actual subset, which becomes the
reported witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from itertools import accumulate
from math import comb

import numpy as np

from .errors import CapacityError, CommonFactorError, InvalidFamilyError
from .monomial import Monomial, MonomialFamily, exponent_vectors_of_degree

DEFAULT_BRUTE_BUDGET = 2**24
DEFAULT_GRID_LIMIT = 500_000
DEFAULT_CLOSURE_LIMIT = 10**6


class Stability(Enum):
    """Verdict for a family, from best to worst."""

    STABLE = "stable"
    SEMISTABLE_ONLY = "semistable-only"
    UNSTABLE = "unstable"


def _fraction_pair(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


@dataclass(frozen=True)
class SubsetWitness:
    """A subset of member indices together with its exact quotient.

    For an unstable family the quotient exceeds the family slope; for a
    merely semistable family it equals the slope.  ``indices`` refer to the
    family's canonical member order.
    """

    indices: tuple[int, ...]
    gcd: Monomial
    size: int
    quotient: Fraction
    family_slope: Fraction

    @property
    def gcd_degree(self) -> int:
        return self.gcd.degree

    def to_json_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "gcd": list(self.gcd.exponents),
            "gcd_degree": self.gcd_degree,
            "size": self.size,
            "quotient": _fraction_pair(self.quotient),
            "family_slope": _fraction_pair(self.family_slope),
        }


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of a stability check.

    ``violation`` is set exactly when the status is unstable and
    ``equality_witness`` exactly when it is semistable-only.  When the family
    is not m-primary the combinatorial comparison is still reported but the
    bundle-theoretic reading does not apply; ``criterion_value_only`` flags
    that case.
    """

    status: Stability
    family_slope: Fraction
    violation: SubsetWitness | None = None
    equality_witness: SubsetWitness | None = None
    criterion_value_only: bool = False

    def to_json_dict(self) -> dict:
        out: dict = {
            "status": self.status.value,
            "family_slope": _fraction_pair(self.family_slope),
            "criterion_value_only": self.criterion_value_only,
        }
        if self.violation is not None:
            out["violation"] = self.violation.to_json_dict()
        if self.equality_witness is not None:
            out["equality_witness"] = self.equality_witness.to_json_dict()
        return out


def family_slope(family: MonomialFamily) -> Fraction:
    """Slope of the syzygy bundle: (deg gcd - sum of degrees) / (n - 1)."""
    if family.n < 2:
        raise InvalidFamilyError("slope needs at least two members")
    return Fraction(
        family.overall_gcd().degree - family.degree_sum, family.n - 1
    )


def subset_quotient(
    family: MonomialFamily, indices: tuple[int, ...]
) -> SubsetWitness:
    """Evaluate one subset exactly: its gcd and the quotient the criterion
    compares against the family slope.  Accepts the full index set too, so
    witnesses can be re-validated independently of how they were found."""
    idx = tuple(indices)
    if len(idx) < 2:
        raise InvalidFamilyError("a subset needs at least two members")
    if len(set(idx)) != len(idx):
        raise InvalidFamilyError(f"duplicate indices in {idx}")
    for i in idx:
        if not 0 <= i < family.n:
            raise InvalidFamilyError(f"index {i} out of range in {idx}")
    chosen = [family.members[i] for i in idx]
    g = reduce(Monomial.gcd, chosen)
    quotient = Fraction(g.degree - sum(m.degree for m in chosen), len(idx) - 1)
    return SubsetWitness(
        indices=idx,
        gcd=g,
        size=len(idx),
        quotient=quotient,
        family_slope=family_slope(family),
    )


def equal_degree_margin(n: int, d: int, gcd_degree: int, k: int) -> int:
    """Integer whose sign is the sign of ``slope - quotient`` for a size-k
    subset with gcd degree ``gcd_degree`` in an n-member equal-degree-d
    family: positive means the subset respects strict stability, zero means
    equality, negative means a violation.  Strictly decreasing in k, so for
    a fixed gcd only the full set of its multiples matters."""
    if n < 2 or k < 2:
        raise ValueError("margin needs n >= 2 and k >= 2")
    if d < 1 or gcd_degree < 0:
        raise ValueError("margin needs d >= 1 and gcd_degree >= 0")
    return (d - gcd_degree) * n + gcd_degree - d * k


def a_seq(d: int, j: int) -> Fraction:
    """Slope ``-j*d/(j-1)`` of a family of j degree-d members; strictly
    increasing in j, which is what makes adding members never hurt."""
    if j < 2:
        raise ValueError("a_seq needs j >= 2")
    if d < 1:
        raise ValueError("a_seq needs d >= 1")
    return Fraction(-j * d, j - 1)


def _validate_for_check(family: MonomialFamily) -> None:
    if family.n < 2:
        raise InvalidFamilyError("stability needs at least two members")
    g = family.overall_gcd()
    if not g.is_unit:
        raise CommonFactorError(
            f"members share the common factor {g}; divide it out and "
            "re-check the quotient family"
        )


def check_brute_force(
    family: MonomialFamily, *, budget: int = DEFAULT_BRUTE_BUDGET
) -> StabilityVerdict:
    """Decide stability by evaluating every proper subset of size >= 2.

    The maximizing subset (ties broken by lexicographically smallest index
    tuple) becomes the witness when the verdict is not stable.
    """
    _validate_for_check(family)
    n = family.n
    if 2**n > budget:
        raise CapacityError(
            f"brute force over {n} members would visit 2^{n} subsets, "
            f"beyond the budget {budget}; use check_efficient instead"
        )
    slope = family_slope(family)
    members = family.members

    best_q: Fraction | None = None
    best_idx: tuple[int, ...] = ()
    best_gcd: Monomial | None = None

    def visit(i: int, chosen: list[int], g: Monomial | None, deg_sum: int):
        nonlocal best_q, best_idx, best_gcd
        if i == n:
            k = len(chosen)
            if 2 <= k < n:
                q = Fraction(g.degree - deg_sum, k - 1)
                idx = tuple(chosen)
                if best_q is None or q > best_q or (q == best_q and idx < best_idx):
                    best_q, best_idx, best_gcd = q, idx, g
            return
        m = members[i]
        chosen.append(i)
        visit(i + 1, chosen, m if g is None else g.gcd(m), deg_sum + m.degree)
        chosen.pop()
        visit(i + 1, chosen, g, deg_sum)

    visit(0, [], None, 0)
    flag = not family.is_m_primary()
    if best_q is None or best_q < slope:
        return StabilityVerdict(Stability.STABLE, slope, criterion_value_only=flag)
    witness = SubsetWitness(
        indices=best_idx,
        gcd=best_gcd,
        size=len(best_idx),
        quotient=best_q,
        family_slope=slope,
    )
    if best_q == slope:
        return StabilityVerdict(
            Stability.SEMISTABLE_ONLY,
            slope,
            equality_witness=witness,
            criterion_value_only=flag,
        )
    return StabilityVerdict(
        Stability.UNSTABLE, slope, violation=witness, criterion_value_only=flag
    )


def gcd_closure(
    family: MonomialFamily, *, max_size: int = DEFAULT_CLOSURE_LIMIT
) -> tuple[Monomial, ...]:
    """All gcds of nonempty subsets of the family, in canonical order.

    Computed as the fixpoint of pairwise gcds; this is the same set because
    the gcd operation is associative.  Includes the members themselves and,
    whenever the family has no common factor, the unit.
    """
    closure: set[Monomial] = set(family.members)
    queue: list[Monomial] = list(family.members)
    while queue:
        g = queue.pop()
        for h in list(closure):
            m = g.gcd(h)
            if m not in closure:
                closure.add(m)
                queue.append(m)
                if len(closure) > max_size:
                    raise CapacityError(
                        f"gcd closure exceeded {max_size} elements"
                    )
    return tuple(sorted(closure, key=Monomial.canon_key))


def _equal_margin_scan_grid(
    family: MonomialFamily, d: int
) -> tuple[int, Monomial] | None:
    """Minimum margin over all candidate divisors of degree 1..d-1, counting
    multiples with chunked integer array comparisons.  Returns the margin
    and the first minimizing candidate in canonical order, or None when no
    candidate divides two or more members."""
    n, v = family.n, family.var_count
    members_arr = np.array([m.exponents for m in family.members], dtype=np.int64)
    chunk_rows = max(1, 2_000_000 // max(1, n * v))
    best: tuple[int, Monomial] | None = None
    buf: list[tuple[int, ...]] = []

    def flush() -> None:
        nonlocal best
        if not buf:
            return
        cand = np.array(buf, dtype=np.int64)
        counts = (
            (cand[:, None, :] <= members_arr[None, :, :])
            .all(axis=2)
            .sum(axis=1, dtype=np.int64)
        )
        cdeg = cand.sum(axis=1)
        margins = (d - cdeg) * n + cdeg - d * counts
        eligible = counts >= 2
        if eligible.any():
            margins = np.where(eligible, margins, np.iinfo(np.int64).max)
            low = int(margins.min())
            if best is None or low < best[0]:
                pos = int(np.argmax(margins == low))
                best = (low, Monomial(tuple(int(e) for e in cand[pos])))
        buf.clear()

    for t in range(1, d):
        for exps in exponent_vectors_of_degree(v, t):
            buf.append(exps)
            if len(buf) >= chunk_rows:
                flush()
    flush()
    return best


def _equal_margin_scan_closure(
    family: MonomialFamily, d: int, closure_limit: int
) -> tuple[int, Monomial] | None:
    """Same minimum as the grid scan, but over the family's gcd closure.

    Any divisor grid minimizer is the gcd of its own multiple set (otherwise
    that gcd has the same multiples and a strictly smaller margin), so it
    lies in the closure and the two scans agree, witness included.
    """
    n = family.n
    best: tuple[int, Monomial] | None = None
    for g in gcd_closure(family, max_size=closure_limit):
        if not 1 <= g.degree <= d - 1:
            continue
        k = len(family.indices_of_multiples(g))
        if k < 2:
            continue
        margin = equal_degree_margin(n, d, g.degree, k)
        if best is None or margin < best[0]:
            best = (margin, g)
    return best


def check_efficient(
    family: MonomialFamily,
    *,
    grid_limit: int = DEFAULT_GRID_LIMIT,
    closure_limit: int = DEFAULT_CLOSURE_LIMIT,
) -> StabilityVerdict:
    """Decide stability by scanning candidate gcds instead of subsets.

    For equal degrees the margin is strictly decreasing in the subset size,
    so each candidate divisor is tested once against all its multiples;
    candidates come from the full divisor grid when it is small and from the
    gcd closure otherwise.  Mixed degrees fall through to the general
    closure scan.  Verdicts agree with ``check_brute_force`` everywhere.
    """
    _validate_for_check(family)
    if not family.is_equal_degree:
        return check_mixed_degrees(family, closure_limit=closure_limit)
    d = family.degrees[0]
    v = family.var_count
    grid_count = comb(v + d - 1, v) - 1 if d >= 1 else 0
    if grid_count <= grid_limit:
        scan = _equal_margin_scan_grid(family, d)
    else:
        scan = _equal_margin_scan_closure(family, d, closure_limit)

    slope = family_slope(family)
    flag = not family.is_m_primary()
    if scan is None or scan[0] > 0:
        return StabilityVerdict(Stability.STABLE, slope, criterion_value_only=flag)
    margin, g = scan
    idxs = family.indices_of_multiples(g)
    chosen = [family.members[i] for i in idxs]
    true_gcd = reduce(Monomial.gcd, chosen)
    assert true_gcd == g, "margin minimizer must be the gcd of its multiples"
    quotient = Fraction(g.degree - sum(m.degree for m in chosen), len(idxs) - 1)
    witness = SubsetWitness(
        indices=idxs,
        gcd=g,
        size=len(idxs),
        quotient=quotient,
        family_slope=slope,
    )
    if margin == 0:
        assert quotient == slope
        return StabilityVerdict(
            Stability.SEMISTABLE_ONLY,
            slope,
            equality_witness=witness,
            criterion_value_only=flag,
        )
    assert quotient > slope
    return StabilityVerdict(
        Stability.UNSTABLE, slope, violation=witness, criterion_value_only=flag
    )


def check_mixed_degrees(
    family: MonomialFamily, *, closure_limit: int = DEFAULT_CLOSURE_LIMIT
) -> StabilityVerdict:
    """Decide stability for arbitrary member degrees via the gcd closure.

    For a candidate divisor g and subset size k, the extreme subset among
    multiples of g is the k members of smallest degree; the family's
    canonical order already sorts members by degree, so those are prefixes
    of the multiple list.  The best candidate's prefix, with its gcd
    recomputed, realizes the overall maximum exactly.
    """
    _validate_for_check(family)
    n = family.n
    slope = family_slope(family)
    best_q: Fraction | None = None
    best_g: Monomial | None = None
    best_k = 0
    for g in gcd_closure(family, max_size=closure_limit):
        idxs = family.indices_of_multiples(g)
        if len(idxs) < 2:
            continue
        degs = [family.members[i].degree for i in idxs]
        prefix = list(accumulate(degs))
        for k in range(2, min(len(idxs), n - 1) + 1):
            q = Fraction(g.degree - prefix[k - 1], k - 1)
            if best_q is None or q > best_q:
                best_q, best_g, best_k = q, g, k

    flag = not family.is_m_primary()
    if best_q is None or best_q < slope:
        return StabilityVerdict(Stability.STABLE, slope, criterion_value_only=flag)
    idxs = family.indices_of_multiples(best_g)[:best_k]
    chosen = [family.members[i] for i in idxs]
    true_gcd = reduce(Monomial.gcd, chosen)
    quotient = Fraction(
        true_gcd.degree - sum(m.degree for m in chosen), best_k - 1
    )
    assert quotient == best_q, "prefix subset must realize the candidate value"
    witness = SubsetWitness(
        indices=idxs,
        gcd=true_gcd,
        size=best_k,
        quotient=quotient,
        family_slope=slope,
    )
    if best_q == slope:
        return StabilityVerdict(
            Stability.SEMISTABLE_ONLY,
            slope,
            equality_witness=witness,
            criterion_value_only=flag,
        )
    return StabilityVerdict(
        Stability.UNSTABLE, slope, violation=witness, criterion_value_only=flag
    )
