import pytest

from orbits import orbit as orbit_module
from orbits.orbit import (
    coverage_against_brute,
    cycle_type_representatives,
    enumerate_orbit,
    enumerate_stratum,
    h2_orbits,
    orbit_from_members,
)
from surfaces.origami import StratumSignature, from_h2_params
from surfaces.perm import cycles_of
from surfaces.sl2z import parse_word
from utils.errors import CapExceeded, EmptyOrbit
from utils.parsing import parse_origami

H2 = StratumSignature.from_zero_orders((2,))
H11 = StratumSignature.from_zero_orders((1, 1))


def _cycle_lengths(perm):
    return sorted(len(c) for c in cycles_of(perm))


def test_three_square_orbit(three_square):
    orbit = enumerate_orbit(three_square)
    assert len(orbit) == 3
    assert str(orbit.stratum) == "H(2)"
    assert orbit.label == "single"
    assert orbit.digests == sorted(orbit.digests)
    assert _cycle_lengths(orbit.action("T")) == [1, 2]
    assert _cycle_lengths(orbit.action("S")) == [1, 2]
    for text in ("((2,3),(1,2))", "((1,2,3),(2,3))"):
        assert orbit.index_of(parse_origami(text, 3)) is not None


def test_inverse_action_undoes_forward(three_square):
    orbit = enumerate_orbit(three_square)
    forward, backward = orbit.action("S"), orbit.action("S", -1)
    assert [backward[j] for j in forward] == list(range(len(orbit)))


def test_word_fixed_points(three_square):
    orbit = enumerate_orbit(three_square)
    assert orbit.fixed_by(parse_word("S^2T^2")) == [0, 1, 2]
    assert len(orbit.fixed_by(parse_word("T"))) == 1


def test_elliptic_generators_give_same_members(three_square):
    parabolic = enumerate_orbit(three_square)
    elliptic = enumerate_orbit(three_square, generators="elliptic")
    assert elliptic.digests == parabolic.digests
    assert set(elliptic.edges) == {"R", "U"}


def test_h2_orbits_at_five_squares():
    orbits = h2_orbits(5)
    assert [(o.label, len(o)) for o in orbits] == [("A", 18), ("B", 9)]
    a = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 0))
    b = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 1))
    assert (a.label, len(a)) == ("A", 18)
    assert (b.label, len(b)) == ("B", 9)


def test_st_fixed_points_in_b_orbit():
    b = enumerate_orbit(from_h2_params(1, 1, 0, 2, 2, 1))
    expected = {
        b.index_of(parse_origami("((1,2,3,4,5),(3,4,5))")),
        b.index_of(parse_origami("((3,4,5),(1,2,3,5,4))", 5)),
    }
    assert None not in expected
    assert set(b.fixed_by(parse_word("ST"))) == expected


def test_h2_orbits_at_seven_squares():
    orbits = h2_orbits(7)
    assert [len(o) for o in orbits] == [54, 36]
    assert len(h2_orbits(4)) == 1


def test_seeded_matches_brute_force():
    cov = coverage_against_brute(h2_orbits(5), 5, H2)
    assert cov["equal"] is True
    assert cov["missing"] == 0
    brute = enumerate_stratum(4, H2, "brute")
    assert len(brute) == 1


def test_h11_orbits_at_seven_squares():
    orbits = enumerate_stratum(7, H11, "brute")
    assert sorted((o.label, len(o)) for o in orbits) == [("Alt", 16), ("Sym", 144)]


def test_brute_force_cap():
    with pytest.raises(CapExceeded):
        enumerate_stratum(11, H2, "brute", brute_cap=10)


def test_orbit_from_members_round_trip(three_square):
    orbit = enumerate_orbit(three_square)
    rebuilt = orbit_from_members(list(reversed(orbit.members)))
    assert rebuilt.digests == orbit.digests
    assert rebuilt.edges == orbit.edges
    with pytest.raises(EmptyOrbit):
        orbit_from_members([])


def test_cycle_type_representatives():
    reps = cycle_type_representatives(4)
    assert len(reps) == 5
    assert sorted(_cycle_lengths(r) for r in reps) == [[1, 1, 1, 1], [1, 1, 2], [1, 3], [2, 2], [4]]


@pytest.mark.slow
def test_parallel_expansion_matches_serial(monkeypatch):
    seed = from_h2_params(1, 1, 0, 2, 4, 0)
    serial = enumerate_orbit(seed)
    monkeypatch.setattr(orbit_module, "PARALLEL_THRESHOLD", 1)
    parallel = enumerate_orbit(seed, workers=2)
    assert parallel.digests == serial.digests
    assert parallel.edges == serial.edges
