"""Closed-form invariants of syzygy bundles of n general degree-d forms on
projective N-space: Chern data, cohomology of the twisted endomorphism
bundle, and the dimension of the moduli component the bundle sits on.

All formulas assume the syzygy bundle is stable, which holds in the size
range N+1 <= n <= (d+2)(d+1)/2 + N - 2 except for the plane count
(n, d) = (5, 2) and, pending separate treatment, the three-dimensional
base N = 3; asking for those raises ``ExcludedCaseError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ExcludedCaseError, UnsupportedRangeError


@dataclass(frozen=True)
class ModuliReport:
    """Numeric invariants of the syzygy bundle of n degree-d forms on P^N.

    ``h0`` through ``h3`` are the cohomology dimensions of the bundle
    itself, ``h1_twist`` is h^1 of its twist by d, and ``ext1`` is the
    dimension of the space of first-order deformations, which equals the
    dimension of the (generically smooth) moduli component.
    """

    N: int
    n: int
    d: int
    rank: int
    c1: int
    slope: Fraction
    h0: int
    h1: int
    h2: int
    h3: int
    h1_twist: int
    ext1: int
    component_dim: int

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "d": self.d,
            "rank": self.rank,
            "c1": self.c1,
            "slope": [self.slope.numerator, self.slope.denominator],
            "h0": self.h0,
            "h1": self.h1,
            "h2": self.h2,
            "h3": self.h3,
            "h1_twist": self.h1_twist,
            "ext1": self.ext1,
            "component_dim": self.component_dim,
        }


def chern_and_slope(n: int, d: int) -> tuple[int, Fraction]:
    """First Chern class and slope of the syzygy bundle of n degree-d forms."""
    if n < 2:
        raise UnsupportedRangeError(f"need at least 2 forms, got n={n}")
    if d < 1:
        raise UnsupportedRangeError(f"degree must be at least 1, got {d}")
    return -n * d, Fraction(-n * d, n - 1)


def _validate_range(N: int, n: int, d: int) -> None:
    if N < 2:
        raise UnsupportedRangeError(f"base space must be P^N with N >= 2, got N={N}")
    if d < 1:
        raise UnsupportedRangeError(f"degree must be at least 1, got {d}")
    upper = comb(d + 2, 2) + N - 2
    if not N + 1 <= n <= upper:
        raise UnsupportedRangeError(
            f"formulas cover {N + 1} <= n <= {upper} for N={N}, d={d}; got n={n}"
        )
    if N == 3:
        raise ExcludedCaseError(
            "cohomology of the twisted endomorphism bundle on P^3 is not "
            "settled by these formulas"
        )
    if (N, n, d) == (2, 5, 2):
        raise ExcludedCaseError(
            "the plane bundle of five general conics is strictly semistable; "
            "the moduli formulas assume stability"
        )


def cohomology_table(N: int, n: int, d: int) -> ModuliReport:
    """Cohomology and moduli component dimension for the syzygy bundle of n
    general degree-d forms on P^N (N = 2 or N >= 4).

    The deformation space has dimension n * h1_twist + h2; vanishing
    obstructions make it the dimension of the moduli component.
    """
    _validate_range(N, n, d)
    h1_twist = comb(N + d, d) - n
    h2 = n * comb(d - 1, 2) if N == 2 else 0
    ext1 = n * h1_twist + h2
    _, slope = chern_and_slope(n, d)
    return ModuliReport(
        N=N,
        n=n,
        d=d,
        rank=n - 1,
        c1=-n * d,
        slope=slope,
        h0=0,
        h1=1,
        h2=h2,
        h3=0,
        h1_twist=h1_twist,
        ext1=ext1,
        component_dim=ext1,
    )


def moduli_dimension(N: int, n: int, d: int) -> int:
    """Dimension of the moduli component containing the syzygy bundle of n
    general degree-d forms on P^N (N = 2 or N >= 4)."""
    return cohomology_table(N, n, d).component_dim
