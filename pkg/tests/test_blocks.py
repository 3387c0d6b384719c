import pytest

from orbits.blocks import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    THREE_BLOCK_DYNAMICS,
    _table_dynamics,
    _verify,
    check_block_systems,
    minus_identity_pairing_check,
    minus_identity_pairs,
    one_cylinder_bound_check,
)
from orbits.orbit import enumerate_orbit, enumerate_stratum
from surfaces.origami import StratumSignature, from_h2_params, monodromy_class


def test_a_orbit_distinct_value_blocks():
    orbit = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 0))
    report = check_block_systems(orbit)
    assert report.ok
    check = report.by_name("three distinct-value blocks")
    assert check.status == PASS
    assert sum(len(members) for members in check.blocks.values()) == len(orbit)
    assert report.by_name("six ordered-HLK blocks").status == NOT_APPLICABLE


def test_b_orbit_has_no_distinct_value():
    orbit = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 1))
    report = check_block_systems(orbit)
    assert report.ok
    assert report.by_name("three distinct-value blocks").status == NOT_APPLICABLE
    assert report.by_name("minus-identity pairing").status == NOT_APPLICABLE


def test_minus_identity_fixes_every_h2_member(three_square):
    orbit = enumerate_orbit(three_square)
    assert minus_identity_pairs(orbit) == [0, 1, 2]


def test_wrong_blocks_are_reported(three_square):
    orbit = enumerate_orbit(three_square)
    check = _verify("all in one", orbit, [1, 1, 1], _table_dynamics(THREE_BLOCK_DYNAMICS))
    assert check.status == FAIL
    assert check.violations
    assert not check.passed


@pytest.fixture(scope="module")
def four_orbit():
    return enumerate_orbit(from_h2_params(1, 2, 0, 2, 1, 0))


def test_four_square_orbit_blocks(four_orbit):
    report = check_block_systems(four_orbit)
    assert report.ok
    assert report.by_name("three distinct-value blocks").status == PASS
    parity = report.by_name("parity blocks")
    assert parity.status == PASS
    assert sorted(parity.blocks) == [1, 2, 3]


def test_one_cylinder_bound_on_symmetric_monodromy(four_orbit):
    assert monodromy_class(four_orbit.origami(0)).kind == "Sym"
    check = one_cylinder_bound_check(four_orbit)
    assert check.status == PASS
    assert check.note.endswith("of 4 one-cylinder members have one vertical cylinder")


@pytest.mark.slow
def test_one_cylinder_bound_in_h4():
    checked = []
    for orbit in enumerate_stratum(6, StratumSignature.from_zero_orders((4,)), "brute", progress=False):
        check = one_cylinder_bound_check(orbit)
        assert check.status != FAIL
        if check.status == PASS:
            checked.append(orbit)
    assert checked


@pytest.mark.slow
def test_minus_identity_pairing_without_symmetry():
    candidates = [(5, (4,)), (6, (3, 1)), (6, (4,))]
    for n, orders in candidates:
        for orbit in enumerate_stratum(n, StratumSignature.from_zero_orders(orders), "brute", progress=False):
            pair_of = minus_identity_pairs(orbit)
            if pair_of[0] == 0:
                continue
            check = minus_identity_pairing_check(orbit)
            assert check.status == PASS
            assert all(len(block) == 2 for block in check.blocks.values())
            assert all(pair_of[j] != j for j in range(len(orbit)))
            return
    pytest.fail("no orbit without -I symmetry among the candidates")
