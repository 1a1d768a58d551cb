"""Constructions of equal-degree monomial families with (semi)stable syzygy
bundles, for every supported (variables, size, degree) combination.

The plane case (three variables) is covered by four constructions keyed by
where the family size n sits relative to the degree d:

* a catalog of hand-picked families for n up to 18,
* a layered triangular pattern for 18 < n <= d+2,
* a strip along two edges of the degree triangle for d+2 < n <= 3d,
* corner-filled patterns for 3d < n < the full triangle.

More variables are handled by induction: extend a family in one fewer
variable by the pure power of the new variable.  Every returned family is
post-validated (size, degree, distinctness, pure power of each variable).

``generate`` returns the family together with a ``FamilyRecipe`` recording
which construction fired and its derived parameters.  The recipe ``source``
strings ("P31", "P32", ..., "Induction") are stable contract identifiers
for callers; the builder functions carry the descriptive names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import UnsupportedRangeError
from .monomial import Monomial, MonomialFamily, exponent_vectors_of_degree

#: Catalog constructions cover family sizes 3..18 in the plane.
CATALOG_MAX_SIZE = 18


@dataclass(frozen=True)
class FamilyRecipe:
    """Which construction produced a family, with its derived parameters."""

    N: int
    n: int
    d: int
    source: str
    params: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "d": self.d,
            "source": self.source,
            "params": {k: v for k, v in sorted(self.params.items())},
        }


def _comb2(x: int) -> int:
    """x choose 2, clamped to 0 for x < 2."""
    return comb(x, 2) if x >= 2 else 0


def _balanced_triple(d: int) -> tuple[int, int, int]:
    """Split d into three near-equal parts, largest first."""
    e0 = -(-d // 3)
    e2 = d // 3
    return e0, d - e0 - e2, e2


def _level_cuts(d: int, parts: int, count: int) -> tuple[tuple[int, ...], int, int]:
    """First ``count`` cut positions when d is split into ``parts`` near-equal
    steps: cut l sits at l*m + min(l, t) where d = m*parts + t."""
    m, t = divmod(d, parts)
    return tuple(l * m + min(l, t) for l in range(1, count + 1)), m, t


def _validated(
    members: list[tuple[int, ...]], var_count: int, n: int, d: int
) -> MonomialFamily:
    family = MonomialFamily.of(members, var_count=var_count)
    assert family.n == n, f"expected {n} members, built {family.n}"
    assert all(m.degree == d for m in family.members), "degree mismatch"
    assert family.is_m_primary(), "family must contain every pure power"
    return family


# -- catalog: plane families of size 3..18 ------------------------------

def _corners(d: int) -> list[tuple[int, ...]]:
    return [(d, 0, 0), (0, d, 0), (0, 0, d)]


def _catalog_members(n: int, d: int) -> tuple[list[tuple[int, ...]], dict]:
    """Member list and parameter record for the size-3..18 catalog."""
    e0, e1, e2 = _balanced_triple(d)
    out = _corners(d)

    if n == 3:
        return out, {}
    if n == 4:
        return out + [(e0, e1, e2)], {"e": (e0, e1, e2)}
    if n == 5:
        i = -(-d // 2)
        return out + [(e0, e1, e2), (0, d - i, i)], {"e": (e0, e1, e2), "i": i}
    if n == 6:
        return (
            out + [(e0, d - e0, 0), (d - e0, 0, e0), (0, e0, d - e0)],
            {"e0": e0},
        )
    if n == 7:
        return (
            out
            + [(e0, e1, e2), (e0, d - e0, 0), (d - e0, 0, e0), (0, e0, d - e0)],
            {"e": (e0, e1, e2)},
        )
    if n == 8:
        return (
            out
            + [
                (e0, e1, e2),
                (e0 + e1, e2, 0),
                (e2, 0, e0 + e1),
                (0, e0 + e1, e2),
                (0, e0, e1 + e2),
            ],
            {"e": (e0, e1, e2)},
        )
    if n == 9:
        if d == 8:
            extra = [
                (3, 3, 2), (6, 2, 0), (2, 0, 6), (5, 0, 3), (0, 6, 2), (0, 3, 5),
            ]
            return out + extra, {"tuned": True}
        (i1, i2), m, t = _level_cuts(d, 3, 2)
        extra = [
            (i1, d - i1, 0), (i2, d - i2, 0),
            (d - i1, 0, i1), (d - i2, 0, i2),
            (0, i1, d - i1), (0, i2, d - i2),
        ]
        return out + extra, {"m": m, "t": t, "levels": (i1, i2)}
    if n == 10:
        if d == 9:
            extra = [
                (3, 3, 3), (6, 3, 0), (3, 6, 0),
                (6, 0, 3), (3, 0, 6), (0, 6, 3), (0, 3, 6),
            ]
            return out + extra, {"tuned": True}
        (i1, i2, i3, i4), m, t = _level_cuts(d, 5, 4)
        extra = [
            (i2, i1, d - i1 - i2),
            (i4, d - i4, 0), (i2, d - i2, 0),
            (i3, 0, d - i3), (i1, 0, d - i1),
            (0, i2, d - i2), (0, i4, d - i4),
        ]
        return out + extra, {"m": m, "t": t, "levels": (i1, i2, i3, i4)}
    if n == 11:
        if d == 12:
            extra = [
                (9, 3, 0), (6, 6, 0), (3, 9, 0),
                (9, 0, 3), (6, 0, 6), (3, 0, 9),
                (0, 9, 3), (0, 6, 6),
            ]
            return out + extra, {"tuned": True}
        (i1, i2, i3, i4), m, t = _level_cuts(d, 5, 4)
        extra = [
            (i2, i1, d - i1 - i2),
            (i4, d - i4, 0), (i3, d - i3, 0), (i2, d - i2, 0),
            (i3, 0, d - i3), (i1, 0, d - i1),
            (0, i2, d - i2), (0, i4, d - i4),
        ]
        return out + extra, {"m": m, "t": t, "levels": (i1, i2, i3, i4)}
    if n == 12 and d == 11:
        extra = [
            (8, 3, 0), (8, 0, 3), (5, 2, 4), (4, 4, 3),
            (3, 8, 0), (3, 0, 8), (2, 5, 4), (0, 8, 3), (0, 3, 8),
        ]
        return out + extra, {"tuned": True}
    if 12 <= n <= 15:
        (i1, i2, i3), m, t = _level_cuts(d, 4, 3)
        mixed = [
            (i2, d - i3, i3 - i2),
            (i1, d - i2, i2 - i1),
            (i1, d - i3, i3 - i1),
        ][: n - 12]
        edges = [
            (i3, d - i3, 0), (i2, d - i2, 0), (i1, d - i1, 0),
            (i3, 0, d - i3), (i2, 0, d - i2), (i1, 0, d - i1),
            (0, i1, d - i1), (0, i2, d - i2), (0, i3, d - i3),
        ]
        return out + mixed + edges, {"m": m, "t": t, "levels": (i1, i2, i3)}
    if 16 <= n <= 18:
        (i1, i2, i3, i4), m, t = _level_cuts(d, 5, 4)
        mixed = [
            (i2, d - i3, i3 - i2),
            (i2, d - i4, i4 - i2),
            (i1, d - i3, i3 - i1),
        ][: n - 15]
        edges = [
            (i4, d - i4, 0), (i3, d - i3, 0), (i2, d - i2, 0), (i1, d - i1, 0),
            (i4, 0, d - i4), (i3, 0, d - i3), (i2, 0, d - i2), (i1, 0, d - i1),
            (0, i1, d - i1), (0, i2, d - i2), (0, i3, d - i3), (0, i4, d - i4),
        ]
        return out + mixed + edges, {"m": m, "t": t, "levels": (i1, i2, i3, i4)}
    raise AssertionError(f"catalog has no entry for n={n}")


def generate_P31(n: int, d: int) -> tuple[MonomialFamily, FamilyRecipe]:
    """Catalog construction: plane families of size 3..18 with d >= n-2."""
    if not (3 <= n <= CATALOG_MAX_SIZE and d >= n - 2):
        raise UnsupportedRangeError(
            f"catalog covers 3 <= n <= {CATALOG_MAX_SIZE} with d >= n-2; "
            f"got n={n}, d={d}"
        )
    members, params = _catalog_members(n, d)
    return _validated(members, 3, n, d), FamilyRecipe(2, n, d, "P31", params)


# -- layered triangular construction: 18 < n <= d+2 ---------------------

def generate_P32(n: int, d: int) -> tuple[MonomialFamily, FamilyRecipe]:
    """Layered construction for 18 < n <= d+2.

    A core of T = (j+2)(j+3)/2 monomials is built from j cut levels of the
    degree interval; the remaining r = n - T members come from a fixed
    auxiliary sequence of midpoints between the cuts.
    """
    if not 18 < n <= d + 2:
        raise UnsupportedRangeError(
            f"layered construction covers 18 < n <= d+2; got n={n}, d={d}"
        )
    j = 3
    while comb(j + 4, 2) <= n:
        j += 1
    core_size = comb(j + 3, 2)
    r = n - core_size
    assert 0 <= r <= j + 2, f"level count j={j} does not fit n={n}"
    levels, m, t = _level_cuts(d, j + 1, j)
    e = -(-m // 2)
    i = (0,) + levels  # i[l] is cut l, with i[0] = 0

    core: list[tuple[int, ...]] = [(d, 0, 0)]
    for l in range(j, 0, -1):
        core.append((i[l], d - i[l], 0))
        for h in range(l + 1, j + 1):
            core.append((i[l], d - i[h], i[h] - i[l]))
        core.append((i[l], 0, d - i[l]))
    core.append((0, d, 0))
    for h in range(j, 0, -1):
        core.append((0, i[h], d - i[h]))
    core.append((0, 0, d))
    assert len(core) == core_size

    q = -(-(j - 1) // 3)
    aux: list[tuple[int, ...]] = []
    for u in range(q + 1):
        a, b = i[j - u] + e, i[u] + e
        aux.append((a, d - a, 0))
        aux.append((b, 0, d - b))
        aux.append((0, a, d - a))
    assert len(aux) >= r

    params = {"j": j, "r": r, "m": m, "t": t, "e": e, "levels": levels}
    return (
        _validated(core + aux[:r], 3, n, d),
        FamilyRecipe(2, n, d, "P32", params),
    )


# -- two-edge strip: d+2 < n <= 3d --------------------------------------

def generate_P33(n: int, d: int) -> tuple[MonomialFamily, FamilyRecipe]:
    """Edge-strip construction for d+2 < n <= 3d.

    The full first edge of the degree triangle plus the opposite corner,
    extended along the other two edges in a fixed order.  The (n, d) =
    (5, 2) family is the lone merely-semistable output.

    The generic tail order breaks down at n = 2d+1 exactly: there the
    slope bound forces every exponent-(d-1) power to divide at most two
    members, which the full first edge already saturates for X0 and X1,
    so the tail element for that step must avoid both.  Those sizes get
    a substitute member (d >= 4) or a bespoke family (d = 3).
    """
    if (n, d) == (5, 2):
        members = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1)]
        return (
            _validated(members, 3, n, d),
            FamilyRecipe(2, n, d, "P33", {"tuned": True}),
        )
    if not d + 2 < n <= 3 * d:
        raise UnsupportedRangeError(
            f"edge-strip construction covers d+2 < n <= 3d; got n={n}, d={d}"
        )
    i = n - d - 2
    if (n, d) == (7, 3):
        members = [
            (3, 0, 0), (0, 3, 0), (0, 0, 3),
            (2, 1, 0), (0, 2, 1), (1, 0, 2), (1, 1, 1),
        ]
        return (
            _validated(members, 3, n, d),
            FamilyRecipe(2, n, d, "P33", {"i": i, "tuned": True}),
        )
    base = [(a, d - a, 0) for a in range(d, -1, -1)] + [(0, 0, d)]
    tail = (
        [(a, 0, d - a) for a in range(1, d - 1)]
        + [(0, d - 1, 1), (d - 1, 0, 1)]
        + [(0, b, d - b) for b in range(1, d - 1)]
    )
    assert 1 <= i <= len(tail)
    chosen = tail[:i]
    if i == d - 1:
        # Swap out X1^(d-1) X2: it would give X1^(d-1) a third multiple
        # at the one size where two is the most a (d-1)-th power allows.
        chosen[-1] = (0, 2, d - 2)
        return (
            _validated(base + chosen, 3, n, d),
            FamilyRecipe(2, n, d, "P33", {"i": i, "tuned": True}),
        )
    return (
        _validated(base + chosen, 3, n, d),
        FamilyRecipe(2, n, d, "P33", {"i": i}),
    )


# -- corner fills: 3d < n < full triangle -------------------------------

def generate_P34(n: int, d: int) -> tuple[MonomialFamily, FamilyRecipe]:
    """Corner-fill construction for 3d < n <= the full triangle count.

    Members are all monomials with some exponent below a threshold j (three
    filled corners), plus a prefix of one row through the middle.  Three
    sub-cases successively relax the threshold on one axis.  The very top
    count with d divisible by 3 is the full set instead.
    """
    full = comb(d + 2, 2)
    if not 3 * d < n <= full:
        raise UnsupportedRangeError(
            f"corner-fill construction covers 3d < n <= {full}; "
            f"got n={n}, d={d}"
        )
    if n == full and d % 3 == 0:
        return generate_full_set(2, d)

    matches = [
        j
        for j in range(1, (d + 2) // 3)
        if full - _comb2(d + 2 - 3 * j) < n <= full - _comb2(d - 3 * j - 1)
    ]
    assert len(matches) == 1, f"threshold for n={n}, d={d} not unique: {matches}"
    j = matches[0]
    lo = full - _comb2(d + 2 - 3 * j)
    c1 = full - _comb2(d + 1 - 3 * j)
    c2 = full - _comb2(d - 3 * j)

    if n <= c1:
        case, i = 1, n - lo
        keep = lambda v: v[0] < j or v[1] < j or v[2] < j
        row = [(d - 2 * j - u, j + u, j) for u in range(d - 3 * j + 1)]
    elif n <= c2:
        case, i = 2, n - c1
        keep = lambda v: v[0] < j or v[1] < j or v[2] <= j
        row = [(j + u, j, d - 2 * j - u) for u in range(d - 3 * j)]
    else:
        assert d > 3 * j + 1, "third sub-case needs room above the threshold"
        case, i = 3, n - c2
        keep = lambda v: v[0] < j or v[1] <= j or v[2] <= j
        row = [(j, j + u, d - 2 * j - u) for u in range(1, d - 3 * j)]

    corners = [v for v in exponent_vectors_of_degree(3, d) if keep(v)]
    assert 1 <= i <= len(row)
    return (
        _validated(corners + row[:i], 3, n, d),
        FamilyRecipe(2, n, d, f"P34-case{case}", {"j": j, "i": i}),
    )


# -- universal families -------------------------------------------------

def generate_pure_powers(N: int, d: int) -> tuple[MonomialFamily, FamilyRecipe]:
    """The N+1 pure powers X_i^d."""
    members = [Monomial.pure_power(N + 1, idx, d) for idx in range(N + 1)]
    return (
        _validated([m.exponents for m in members], N + 1, N + 1, d),
        FamilyRecipe(N, N + 1, d, "PurePowers"),
    )


def generate_full_set(N: int, d: int) -> tuple[MonomialFamily, FamilyRecipe]:
    """All monomials of degree d in N+1 variables."""
    members = list(exponent_vectors_of_degree(N + 1, d))
    return (
        _validated(members, N + 1, len(members), d),
        FamilyRecipe(N, len(members), d, "FullSet"),
    )


# -- dispatchers --------------------------------------------------------

def generate_P2(n: int, d: int) -> tuple[MonomialFamily, FamilyRecipe]:
    """Plane dispatcher: pick the construction for 3 <= n <= (d+2)(d+1)/2."""
    if d < 1:
        raise UnsupportedRangeError(f"degree must be at least 1, got {d}")
    full = comb(d + 2, 2)
    if not 3 <= n <= full:
        raise UnsupportedRangeError(
            f"plane families need 3 <= n <= {full} for degree {d}; got n={n}"
        )
    if n == full:
        return generate_full_set(2, d)
    if n <= CATALOG_MAX_SIZE and n <= d + 2:
        return generate_P31(n, d)
    if n <= d + 2:
        return generate_P32(n, d)
    if n <= 3 * d:
        return generate_P33(n, d)
    return generate_P34(n, d)


def generate(N: int, n: int, d: int) -> tuple[MonomialFamily, FamilyRecipe]:
    """Construct a size-n degree-d family in N+1 variables whose syzygy
    bundle is stable (semistable only for the plane (n, d) = (5, 2) case).

    Supported sizes: N+1 <= n <= (d+2)(d+1)/2 + N - 2, plus the full set of
    all degree-d monomials.  Sizes in between those two bounds have no known
    construction here and raise ``UnsupportedRangeError``.
    """
    if N < 2:
        raise UnsupportedRangeError(
            f"constructions need at least 3 variables (N >= 2), got N={N}"
        )
    if d < 1:
        raise UnsupportedRangeError(f"degree must be at least 1, got {d}")
    if N == 2:
        return generate_P2(n, d)
    full = comb(d + N, N)
    upper = comb(d + 2, 2) + N - 2
    if (N, n, d) == (3, 5, 2):
        members = [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2),
                   (1, 1, 0, 0)]
        return (
            _validated(members, 4, n, d),
            FamilyRecipe(N, n, d, "Special352"),
        )
    if n == N + 1:
        return generate_pure_powers(N, d)
    if n == full:
        return generate_full_set(N, d)
    if N + 1 <= n <= upper:
        base, _ = generate(N - 1, n - 1, d)
        members = [m.exponents + (0,) for m in base.members]
        members.append(Monomial.pure_power(N + 1, N, d).exponents)
        return (
            _validated(members, N + 1, n, d),
            FamilyRecipe(N, n, d, "Induction", {"base_N": N - 1, "base_n": n - 1}),
        )
    raise UnsupportedRangeError(
        f"no construction for N={N}, n={n}, d={d}: supported sizes are "
        f"{N + 1} <= n <= {upper}, or n = {full} (all degree-{d} monomials); "
        f"the range {upper} < n < {full} is an open gap"
    )
