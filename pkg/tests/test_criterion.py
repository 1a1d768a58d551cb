from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syzstab.criterion import (
    Stability,
    a_seq,
    check_brute_force,
    check_efficient,
    check_mixed_degrees,
    equal_degree_margin,
    family_slope,
    gcd_closure,
    subset_quotient,
)
from syzstab.errors import (
    CapacityError,
    CommonFactorError,
    InvalidFamilyError,
)
from syzstab.monomial import Monomial, MonomialFamily, monomials_of_degree

# Recurring fixtures.  Member indices in the comments refer to the family's
# canonical order (degree ascending, exponents descending-lex).
STABLE_QUINTIC = MonomialFamily.of([(5, 0, 0), (0, 5, 0), (0, 0, 5), (2, 2, 1)])
UNSTABLE_QUINTIC = MonomialFamily.of([(5, 0, 0), (0, 5, 0), (0, 0, 5), (4, 1, 0)])
QUADRICS_52 = MonomialFamily.of(
    [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1)]
)
MIXED_SEMI = MonomialFamily.of([(2, 0), (0, 3), (1, 2)])


def test_family_slope_values():
    assert family_slope(STABLE_QUINTIC) == Fraction(-20, 3)
    assert family_slope(QUADRICS_52) == Fraction(-5, 2)
    assert family_slope(MIXED_SEMI) == Fraction(-8, 2)
    with pytest.raises(InvalidFamilyError):
        family_slope(MonomialFamily.of([(2, 0)]))


def test_subset_quotient_witness_fields():
    # Members sort to x0^5, x0^4 x1, x1^5, x2^5; the violating pair is (0, 1).
    w = subset_quotient(UNSTABLE_QUINTIC, (0, 1))
    assert w.indices == (0, 1)
    assert w.gcd == Monomial((4, 0, 0))
    assert w.gcd_degree == 4
    assert w.size == 2
    assert w.quotient == Fraction(-6)
    assert w.family_slope == Fraction(-20, 3)
    assert w.quotient > w.family_slope


def test_subset_quotient_accepts_full_index_set():
    # With no common factor the full set recovers the slope itself.
    w = subset_quotient(STABLE_QUINTIC, (0, 1, 2, 3))
    assert w.quotient == family_slope(STABLE_QUINTIC)


def test_subset_quotient_index_validation():
    with pytest.raises(InvalidFamilyError):
        subset_quotient(STABLE_QUINTIC, (2,))
    with pytest.raises(InvalidFamilyError):
        subset_quotient(STABLE_QUINTIC, (1, 1))
    with pytest.raises(InvalidFamilyError):
        subset_quotient(STABLE_QUINTIC, (0, 4))
    with pytest.raises(InvalidFamilyError):
        subset_quotient(STABLE_QUINTIC, (-1, 0))


def test_equal_degree_margin_values():
    # x^9, y^9, x^5 y^4: the pair with gcd degree 5 violates by exactly one.
    assert equal_degree_margin(3, 9, 5, 2) == -1
    # The five quadrics: x0 divides three members, landing exactly on zero.
    assert equal_degree_margin(5, 2, 1, 3) == 0
    # The unstable quintic's witness pair, and a comfortable stable case.
    assert equal_degree_margin(4, 5, 4, 2) == -2
    assert equal_degree_margin(4, 5, 2, 2) == 4
    for bad in [(1, 5, 1, 2), (4, 5, 1, 1), (4, 0, 0, 2), (4, 5, -1, 2)]:
        with pytest.raises(ValueError):
            equal_degree_margin(*bad)


def test_a_seq_values_and_monotonicity():
    assert a_seq(3, 2) == Fraction(-6)
    assert a_seq(3, 3) == Fraction(-9, 2)
    assert a_seq(5, 4) == Fraction(-20, 3)
    for d in (1, 4, 9):
        values = [a_seq(d, j) for j in range(2, 30)]
        assert all(a < b for a, b in zip(values, values[1:]))
    with pytest.raises(ValueError):
        a_seq(3, 1)
    with pytest.raises(ValueError):
        a_seq(0, 4)


@pytest.mark.parametrize("check", [check_brute_force, check_efficient])
def test_stable_quintic(check):
    verdict = check(STABLE_QUINTIC)
    assert verdict.status is Stability.STABLE
    assert verdict.family_slope == Fraction(-20, 3)
    assert verdict.violation is None
    assert verdict.equality_witness is None
    assert not verdict.criterion_value_only


@pytest.mark.parametrize("check", [check_brute_force, check_efficient])
def test_unstable_quintic_witness(check):
    verdict = check(UNSTABLE_QUINTIC)
    assert verdict.status is Stability.UNSTABLE
    w = verdict.violation
    assert w is not None
    assert w.indices == (0, 1)
    assert w.gcd == Monomial((4, 0, 0))
    assert w.quotient == Fraction(-6)
    assert w.family_slope == Fraction(-20, 3)


@pytest.mark.parametrize("check", [check_brute_force, check_efficient])
def test_unstable_two_variables(check):
    fam = MonomialFamily.of([(9, 0), (0, 9), (5, 4)])
    verdict = check(fam)
    assert verdict.status is Stability.UNSTABLE
    assert verdict.family_slope == Fraction(-27, 2)
    assert verdict.violation.quotient == Fraction(-13)


@pytest.mark.parametrize("check", [check_brute_force, check_efficient])
def test_five_quadrics_semistable_only(check):
    verdict = check(QUADRICS_52)
    assert verdict.status is Stability.SEMISTABLE_ONLY
    w = verdict.equality_witness
    assert w is not None
    assert w.quotient == w.family_slope == Fraction(-5, 2)
    # Re-validate the witness independently of how the checker found it.
    again = subset_quotient(QUADRICS_52, w.indices)
    assert again.quotient == w.quotient
    assert again.gcd == w.gcd


@pytest.mark.parametrize("check", [check_brute_force, check_efficient])
def test_mixed_degrees_semistable_only(check):
    verdict = check(MIXED_SEMI)
    assert verdict.status is Stability.SEMISTABLE_ONLY
    w = verdict.equality_witness
    assert w.indices == (0, 1)
    assert w.quotient == Fraction(-4)


def test_verdict_json_shape():
    out = check_efficient(UNSTABLE_QUINTIC).to_json_dict()
    assert out["status"] == "unstable"
    assert out["family_slope"] == [-20, 3]
    assert out["violation"]["indices"] == [0, 1]
    assert out["violation"]["gcd"] == [4, 0, 0]
    assert out["violation"]["quotient"] == [-6, 1]
    assert "equality_witness" not in out


def test_gcd_closure_contents():
    fam = MonomialFamily.of([(2, 0), (1, 1), (0, 2)])
    closure = gcd_closure(fam)
    assert closure == (
        Monomial((0, 0)),
        Monomial((1, 0)),
        Monomial((0, 1)),
        Monomial((2, 0)),
        Monomial((1, 1)),
        Monomial((0, 2)),
    )


def test_gcd_closure_is_closed():
    fam = MonomialFamily.of([(3, 1, 0), (0, 2, 2), (1, 0, 3), (2, 2, 0)])
    closure = set(gcd_closure(fam))
    for a in closure:
        for b in closure:
            assert a.gcd(b) in closure


def test_gcd_closure_capacity():
    fam = MonomialFamily.of([(2, 0), (1, 1), (0, 2)])
    with pytest.raises(CapacityError):
        gcd_closure(fam, max_size=3)


def test_brute_force_capacity():
    # All 25 monomials of degree 24 in two variables: every divisor scan
    # lands exactly on the slope, so the family is semistable only.
    fam = MonomialFamily.of([(i, 24 - i) for i in range(25)])
    with pytest.raises(CapacityError):
        check_brute_force(fam)
    assert check_efficient(fam).status is Stability.SEMISTABLE_ONLY


def test_mixed_checker_capacity():
    with pytest.raises(CapacityError):
        check_mixed_degrees(MIXED_SEMI, closure_limit=2)


@pytest.mark.parametrize("check", [check_brute_force, check_efficient])
def test_common_factor_rejected(check):
    fam = MonomialFamily.of([(2, 1), (1, 2)])
    with pytest.raises(CommonFactorError):
        check(fam)


@pytest.mark.parametrize("check", [check_brute_force, check_efficient])
def test_single_member_rejected(check):
    with pytest.raises(InvalidFamilyError):
        check(MonomialFamily.of([(2, 0)]))


@pytest.mark.parametrize("check", [check_brute_force, check_efficient])
def test_non_m_primary_flagged(check):
    fam = MonomialFamily.of([(2, 0, 0), (0, 2, 0), (1, 1, 0)])
    verdict = check(fam)
    assert verdict.criterion_value_only
    assert verdict.status is Stability.SEMISTABLE_ONLY


def test_grid_and_closure_paths_agree():
    for fam in (STABLE_QUINTIC, UNSTABLE_QUINTIC, QUADRICS_52):
        via_grid = check_efficient(fam)
        via_closure = check_efficient(fam, grid_limit=0)
        assert via_grid == via_closure


def _pure(var_count: int, index: int, exponent: int) -> tuple[int, ...]:
    exps = [0] * var_count
    exps[index] = exponent
    return tuple(exps)


@st.composite
def equal_degree_families(draw):
    # Two pure powers keep the overall gcd trivial by construction.
    var_count = draw(st.integers(min_value=2, max_value=3))
    d = draw(st.integers(min_value=1, max_value=5))
    seeds = {_pure(var_count, 0, d), _pure(var_count, 1, d)}
    pool = [
        m.exponents
        for m in monomials_of_degree(var_count, d)
        if m.exponents not in seeds
    ]
    extras = draw(
        st.lists(
            st.sampled_from(pool) if pool else st.nothing(),
            max_size=min(7, len(pool)),
            unique=True,
        )
        if pool
        else st.just([])
    )
    return MonomialFamily.of(sorted(seeds) + extras)


@st.composite
def mixed_families(draw):
    var_count = draw(st.integers(min_value=2, max_value=3))
    seeds = {
        _pure(var_count, 0, draw(st.integers(min_value=1, max_value=4))),
        _pure(var_count, 1, draw(st.integers(min_value=1, max_value=4))),
    }
    extras = draw(
        st.lists(
            st.tuples(
                *[st.integers(min_value=0, max_value=4)] * var_count
            ).filter(any),
            max_size=5,
            unique=True,
        )
    )
    return MonomialFamily.of(seeds | set(extras))


@given(equal_degree_families())
@settings(max_examples=150, deadline=None)
def test_checkers_agree_equal_degree(fam):
    brute = check_brute_force(fam)
    fast = check_efficient(fam)
    assert brute.status is fast.status
    assert brute.family_slope == fast.family_slope


@given(mixed_families())
@settings(max_examples=150, deadline=None)
def test_checkers_agree_mixed_degrees(fam):
    brute = check_brute_force(fam)
    fast = check_efficient(fam)
    assert brute.status is fast.status
    assert brute.family_slope == fast.family_slope


@given(equal_degree_families(), st.permutations(range(3)))
@settings(max_examples=100, deadline=None)
def test_status_invariant_under_variable_permutation(fam, perm):
    perm = perm[: fam.var_count]
    if sorted(perm) != list(range(fam.var_count)):
        perm = list(range(fam.var_count))
    permuted = MonomialFamily.of(
        [tuple(m.exponents[p] for p in perm) for m in fam.members]
    )
    assert check_efficient(fam).status is check_efficient(permuted).status


@given(mixed_families(), st.integers(min_value=1, max_value=4))
@settings(max_examples=100, deadline=None)
def test_status_invariant_under_exponent_scaling(fam, c):
    scaled = MonomialFamily.of(
        [tuple(c * e for e in m.exponents) for m in fam.members]
    )
    original = check_efficient(fam)
    stretched = check_efficient(scaled)
    assert original.status is stretched.status
    assert stretched.family_slope == c * original.family_slope
