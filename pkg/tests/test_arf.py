from hypothesis import given
from hypothesis import strategies as st

from conftest import generator_tuples, small_p
from psemigroups import (
    build,
    is_arf,
    verify_arf_conductor_kunz,
    verify_arf_heredity,
)


def _naive_arf(sp, limit):
    members = [n for n in range(limit) if sp.contains(n)]
    for x in members:
        for y in members:
            if y > x:
                continue
            for z in members:
                if z > y:
                    continue
                if not sp.contains(x + y - z):
                    return False, (x, y, z)
    return True, None


def test_smallest_closed_instance():
    assert is_arf(build((2, 3), 0)).is_arf


def test_witness_for_open_instance():
    report = is_arf(build((3, 4), 0))
    assert not report.is_arf
    assert report.witness == (4, 4, 3)
    x, y, z = report.witness
    sp = build((3, 4), 0)
    assert x >= y >= z
    assert sp.contains(x) and sp.contains(y) and sp.contains(z)
    assert not sp.contains(x + y - z)


def test_higher_p_instance_is_closed():
    sp = build((2, 3), 1)
    assert sp.small_elements == (6, 8)
    assert is_arf(sp).is_arf


def test_heredity_families():
    assert verify_arf_heredity(2, 3, 5).passed
    assert verify_arf_heredity(2, 5, 5).passed
    assert verify_arf_heredity(2, 7, 4).passed
    skipped = verify_arf_heredity(3, 4, 3)
    assert not skipped.applicable
    assert "witness" in skipped.note


def test_conductor_kunz_zero_residue_branch():
    report = verify_arf_conductor_kunz(build((2, 3), 1))
    sp = build((2, 3), 1)
    assert sp.conductor == 8 and sp.conductor % 2 == 0
    assert report.apery_checks == (True, True)
    assert report.kunz_checks == (True, True)
    assert sp.apery_by_residue[1] == 9
    assert sp.kunz[1] == 4

    report25 = verify_arf_conductor_kunz(build((2, 5), 0))
    assert report25.apery_checks == (True, True)
    assert build((2, 5), 0).apery_by_residue[1] == 5

    trivial = verify_arf_conductor_kunz(build((2, 3), 0))
    assert trivial.apery_checks == (True, True)
    assert build((2, 3), 0).apery_by_residue[1] == 3


def test_conductor_kunz_nonzero_residue_branch():
    sp = build((3, 5, 7), 0)
    assert is_arf(sp).is_arf
    assert sp.conductor % sp.modulus == 2
    report = verify_arf_conductor_kunz(sp)
    assert report.apery_checks == (True, True)
    assert report.kunz_checks == (True, True)
    assert sp.apery_by_residue[1] == 7 and sp.apery_by_residue[2] == 5
    assert sp.kunz[1] == 2 and sp.kunz[2] == 1


def test_not_applicable_on_open_instance():
    report = verify_arf_conductor_kunz(build((3, 4), 0))
    assert not report.applicable
    assert report.witness == (4, 4, 3)


@given(gens=generator_tuples(max_value=12, max_size=3), p=st.integers(0, 2))
def test_bitmask_scan_matches_naive_triples(gens, p):
    sp = build(gens, p)
    verdict, _ = _naive_arf(sp, sp.conductor)
    assert is_arf(sp).is_arf == verdict


@given(gens=generator_tuples(max_value=12, max_size=3), p=st.integers(0, 2))
def test_raising_the_cutoff_never_changes_the_verdict(gens, p):
    sp = build(gens, p)
    assert is_arf(sp).is_arf == is_arf(sp, limit=2 * sp.conductor).is_arf


@given(b=st.integers(3, 19).filter(lambda b: b % 2 == 1), p=st.integers(0, 4))
def test_two_generator_even_family_is_closed(b, p):
    assert is_arf(build((2, b), p)).is_arf
