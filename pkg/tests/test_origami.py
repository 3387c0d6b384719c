import pytest

from orbits.orbit import enumerate_orbit, h2_orbits
from surfaces.origami import (
    StratumSignature,
    canonical_form,
    cusp_data,
    cylinder_decomposition,
    from_h2_params,
    from_images,
    h2_parameters,
    hlk_invariant,
    involution_data,
    is_isomorphic,
    make_origami,
    minus_identity,
    monodromy_class,
    relabel,
    stratum_and_genus,
)
from surfaces.perm import Permutation, cycles_of, parse_cycles
from surfaces.sl2z import apply_word, parse_word
from utils.errors import BadParams, DegreeMismatch, NotConnected, ParityError
from utils.parsing import parse_origami


def test_make_origami_validates():
    with pytest.raises(DegreeMismatch):
        make_origami(parse_cycles("(1,2)", 2), parse_cycles("(1,2,3)"))
    with pytest.raises(NotConnected):
        make_origami(parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4))


def test_three_square_stratum(three_square):
    signature = stratum_and_genus(three_square)
    assert str(signature) == "H(2)"
    assert signature.genus == 2
    assert monodromy_class(three_square).kind == "Sym"
    assert monodromy_class(three_square).order == 6


def test_stratum_signature_parity():
    assert StratumSignature.from_zero_orders((1, 1)).genus == 2
    assert str(StratumSignature.from_zero_orders((1, 3))) == "H(3,1)"
    with pytest.raises(ParityError):
        StratumSignature.from_zero_orders((1, 2))


def test_canonical_form_is_relabeling_invariant(three_square):
    sigma = parse_cycles("(1,3)")
    other = relabel(three_square, sigma)
    assert canonical_form(other) == canonical_form(three_square)
    assert is_isomorphic(other, three_square)
    assert len(canonical_form(three_square).digest) == 64


def test_three_square_hlk(three_square):
    hlk = hlk_invariant(three_square)
    assert hlk.label == "(0,[3,1,1])"
    assert hlk.ordered_triple == (3, 1, 1)
    assert hlk.fixed_cone_points == 1
    assert involution_data(three_square).kind == "hyperelliptic"


def test_h2_parameter_builder():
    X = from_h2_params(1, 1, 0, 2, 2, 0)
    assert str(X) == "((1,2)(3,4),(1,3,5)(2,4))"
    assert str(stratum_and_genus(X)) == "H(2)"
    assert hlk_invariant(X).label == "(0,[3,1,1])"
    assert hlk_invariant(from_h2_params(1, 1, 0, 2, 2, 1)).label == "(2,[1,1,1])"
    assert h2_parameters(X) == (1, 1, 0, 2, 2, 0)
    assert len(cylinder_decomposition(X)) == 2
    assert cylinder_decomposition(X).area == 5


@pytest.mark.parametrize(
    "params",
    [(2, 1, 0, 2, 2, 0), (1, 1, 1, 2, 2, 0), (0, 1, 0, 2, 2, 0), (1, 1, 0, 2, 2, 2)],
)
def test_h2_parameter_builder_rejects(params):
    with pytest.raises(BadParams):
        from_h2_params(*params)


def test_cusp_of_t_fixed_origami():
    cusp = cusp_data(from_h2_params(1, 1, 0, 2, 2, 0))
    assert cusp.width == 1
    assert cusp.h2_params == (1, 1, 0, 2, 2, 0)
    assert cusp.twists_reduced is True


def test_minus_identity_inverts_both_permutations(three_square):
    flipped = minus_identity(three_square)
    assert flipped.h == three_square.h.inverse()
    assert flipped.v == three_square.v.inverse()
    # -I acts trivially on the three-square surface
    assert is_isomorphic(flipped, three_square)


def test_parse_origami_forms():
    a = parse_origami("((2,3),(1,2,3))")
    b = parse_origami("(2,3),(1,2,3)")
    assert a == b
    assert a.n == 3


def test_spec_style_examples():
    torus = make_origami(parse_cycles("()", 1), parse_cycles("()", 1))
    assert stratum_and_genus(torus).zero_orders == ()
    assert stratum_and_genus(torus).genus == 1
    seven = parse_origami("((1,2,3,4,5,6,7),(4,5,6,7))")
    assert str(stratum_and_genus(seven)) == "H(2)"
    with pytest.raises(NotConnected):
        parse_origami("((1,2),(1,2))", 3)


def test_monodromy_examples():
    assert monodromy_class(parse_origami("((1,2,3,4,5),(3,4,5))")).kind == "Alt"
    other = monodromy_class(parse_origami("((1,2,3,4),(1,3))"))
    assert (other.kind, other.order, other.primitive) == ("Other", 8, False)
    assert str(other) == "Other(8)"


def test_canonical_examples():
    a = parse_origami("((1,3,2),(1,2))")
    b = parse_origami("((1,2,3),(2,3))")
    assert canonical_form(a) == canonical_form(b)
    once = canonical_form(parse_origami("((2,3),(1,2,3))"))
    assert canonical_form(once.origami) == once


def test_canonical_form_random_relabelings(rng):
    X = parse_origami("((1,2,3,4,5,6,7),(4,5,6,7))")
    base = canonical_form(X)
    for _ in range(100):
        images = list(range(X.n))
        rng.shuffle(images)
        assert canonical_form(relabel(X, Permutation(tuple(images)))) == base


def test_cylinder_area_random(rng):
    for _ in range(200):
        n = rng.randint(1, 9)
        h, v = list(range(n)), list(range(n))
        rng.shuffle(h)
        rng.shuffle(v)
        X = from_images(h, v)
        try:
            make_origami(X.h, X.v)
        except NotConnected:
            continue
        assert cylinder_decomposition(X).area == n


def test_cusp_width_two_in_a_orbit():
    X = from_h2_params(1, 3, 0, 2, 1, 0)
    assert X.n == 5
    assert cusp_data(X).width == 2
    assert hlk_invariant(X).label == "(0,[3,1,1])"


def test_four_square_hlk():
    X = from_h2_params(1, 2, 0, 2, 1, 0)
    assert X.n == 4
    assert hlk_invariant(X).label == "(1,[2,2,0])"


@pytest.mark.parametrize("params", [(1, 1, 0, 2, 2, 0), (1, 2, 0, 2, 1, 0)])
def test_hlk_triple_follows_t_and_s(params):
    orbit = enumerate_orbit(from_h2_params(*params))
    triples = [hlk_invariant(orbit.origami(i)).ordered_triple for i in range(len(orbit))]
    t_perm, s_perm = orbit.action("T"), orbit.action("S")
    for i, (a, b, c) in enumerate(triples):
        assert triples[t_perm[i]] == (b, a, c)
        assert triples[s_perm[i]] == (a, c, b)


def test_h2_parameters_round_trip_random(rng):
    for _ in range(100):
        w2 = rng.randint(2, 6)
        w1 = rng.randint(1, w2 - 1)
        h1, h2 = rng.randint(1, 3), rng.randint(1, 3)
        params = (w1, h1, rng.randrange(w1), w2, h2, rng.randrange(w2))
        X = from_h2_params(*params)
        assert h2_parameters(X) == params
        decomposition = cylinder_decomposition(X)
        assert len(decomposition) == 2
        assert decomposition.area == w1 * h1 + w2 * h2


def test_cusp_width_is_t_orbit_length():
    orbit = next(o for o in h2_orbits(7) if o.label == "A")
    T = orbit.action("T")
    for cycle in cycles_of(T):
        X = orbit.origami(min(cycle))
        width = cusp_data(X).width
        assert width == len(cycle)
        assert is_isomorphic(apply_word(parse_word(f"T^{width}"), X), X)
        assert all(cusp_data(orbit.origami(i)).width == width for i in cycle)


def test_stratum_is_invariant_under_t_and_s(rng):
    checked = 0
    for _ in range(200):
        n = rng.randint(3, 8)
        h, v = list(range(n)), list(range(n))
        rng.shuffle(h)
        rng.shuffle(v)
        try:
            X = make_origami(Permutation(tuple(h)), Permutation(tuple(v)))
        except NotConnected:
            continue
        checked += 1
        stratum = stratum_and_genus(X)
        for letter in ("T", "S", "T^-1", "S^-1"):
            assert stratum_and_genus(apply_word(parse_word(letter), X)) == stratum
    assert checked
