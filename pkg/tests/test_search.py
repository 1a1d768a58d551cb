import json

import pytest

from syzstab.criterion import Stability, check_efficient
from syzstab.errors import Error, UnsupportedRangeError
from syzstab.families import generate_P2
from syzstab.monomial import MonomialFamily
from syzstab.search import NONE_SEMISTABLE, exhaustive_search


def test_cubic_binary_forms_have_no_semistable_triple():
    # Nine monomials of degree 9 in two variables; pure powers are forced,
    # leaving eight choices of third member, four up to swapping x and y.
    report = exhaustive_search(1, 9, 3)
    assert report.families_examined == 8
    assert report.orbits_examined == 4
    assert report.best_status == NONE_SEMISTABLE
    assert report.best_family is None
    assert report.exhausted
    assert report.resume_token is None


def test_five_quadrics_best_is_semistable():
    report = exhaustive_search(2, 2, 5)
    assert report.exhausted
    assert report.best_status == Stability.SEMISTABLE_ONLY.value
    assert report.families_examined == 3
    assert report.orbits_examined == 1
    fam = report.best_family
    assert check_efficient(fam).status is Stability.SEMISTABLE_ONLY


def test_quartic_search_finds_stable_family():
    report = exhaustive_search(2, 4, 5)
    assert report.exhausted
    assert report.best_status == Stability.STABLE.value
    assert check_efficient(report.best_family).status is Stability.STABLE


def test_search_agrees_with_generators():
    for (n, d) in [(4, 2), (5, 3), (6, 2)]:
        generated, _ = generate_P2(n, d)
        assert check_efficient(generated).status is Stability.STABLE
        report = exhaustive_search(2, d, n)
        assert report.exhausted
        assert report.best_status == Stability.STABLE.value


def test_budget_truncation_and_resume():
    full = exhaustive_search(2, 3, 6)
    assert full.exhausted
    assert full.families_examined == 35

    first = exhaustive_search(2, 3, 6, budget=17)
    assert not first.exhausted
    assert first.families_examined == 17
    assert first.resume_token is not None

    second = exhaustive_search(2, 3, 6, resume_token=first.resume_token)
    assert second.exhausted
    assert second.families_examined == full.families_examined
    assert second.orbits_examined == full.orbits_examined
    assert second.best_status == full.best_status
    assert second.best_family == full.best_family


def test_resume_in_many_small_hops():
    full = exhaustive_search(2, 3, 6)
    token = None
    report = None
    for hop in range(1, 100):
        # The budget counts cumulatively across resumed runs, so each hop
        # raises it by five to advance five fresh families.
        report = exhaustive_search(2, 3, 6, budget=5 * hop, resume_token=token)
        if report.exhausted:
            break
        state = json.loads(report.resume_token)
        assert state["families_examined"] == report.families_examined == 5 * hop
        token = report.resume_token
    assert report.exhausted
    assert report.families_examined == full.families_examined
    assert report.best_status == full.best_status
    assert report.best_family == full.best_family


def test_parallel_jobs_match_serial():
    serial = exhaustive_search(2, 3, 7)
    parallel = exhaustive_search(2, 3, 7, jobs=3)
    assert serial == parallel

    serial_cut = exhaustive_search(2, 3, 7, budget=40)
    parallel_cut = exhaustive_search(2, 3, 7, budget=40, jobs=3)
    assert serial_cut == parallel_cut


def test_progress_reports_partitions():
    events = []
    exhaustive_search(1, 9, 3, progress=events.append)
    assert len(events) == 8
    assert sum(e["families"] for e in events) == 8


def test_orbit_reduction_is_sound():
    # Permuting the variables of the best family never changes its verdict,
    # so scanning only lexicographic-minimal representatives loses nothing.
    report = exhaustive_search(2, 2, 6)
    fam = report.best_family
    status = check_efficient(fam).status
    for perm in [(1, 0, 2), (2, 1, 0), (1, 2, 0)]:
        permuted = MonomialFamily.of(
            [tuple(m.exponents[p] for p in perm) for m in fam.members]
        )
        assert check_efficient(permuted).status is status


def test_resume_token_validation():
    with pytest.raises(Error):
        exhaustive_search(2, 3, 6, resume_token="not json")
    with pytest.raises(Error):
        exhaustive_search(2, 3, 6, resume_token="{}")
    other = exhaustive_search(2, 3, 7, budget=10).resume_token
    assert other is not None
    with pytest.raises(Error):
        exhaustive_search(2, 3, 6, resume_token=other)


def test_parameter_validation():
    with pytest.raises(UnsupportedRangeError):
        exhaustive_search(0, 3, 4)
    with pytest.raises(UnsupportedRangeError):
        exhaustive_search(2, 0, 4)
    with pytest.raises(UnsupportedRangeError):
        exhaustive_search(2, 3, 1)
    with pytest.raises(UnsupportedRangeError):
        exhaustive_search(2, 3, 6, budget=0)


def test_oversized_request_is_empty():
    # More members than monomials of that degree: nothing to enumerate.
    report = exhaustive_search(1, 2, 5)
    assert report.exhausted
    assert report.families_examined == 0
    assert report.best_status == NONE_SEMISTABLE
