from fractions import Fraction

import pytest

from arith.class_numbers import (
    class_number_by_reduction,
    class_number_table,
    class_numbers,
    conductor,
    h_reduced,
    reduce_form,
)
from arith.cusps import t_fixed_count_h2, two_cylinder_shapes
from arith.formulas import e3_h11, predicted_orbit_size, psl2_order, sl2_order
from arith.orbifold import e2_square, h3_set, orbifold_sets
from arith.quadrics import (
    cusp_equation_shape,
    diagonal_quadric,
    ellipse,
    quadric_solutions,
    three_cylinder_conic,
)
from utils.errors import BadParams, InvalidDiscriminant, NonIntegral


@pytest.mark.parametrize("D, h", [(-3, 1), (-4, 1), (-12, 1), (-23, 3), (-48, 2), (-71, 7)])
def test_class_numbers(D, h):
    assert class_numbers(D).h == h
    assert class_number_by_reduction(D) == h


def test_reduced_class_number():
    assert h_reduced(-3) == Fraction(1, 3)
    assert h_reduced(-4) == Fraction(1, 2)
    assert h_reduced(-23) == 3


def test_invalid_discriminants():
    for D in (-5, 0, 8):
        with pytest.raises(InvalidDiscriminant):
            class_numbers(D)


def test_reduce_form():
    assert reduce_form((3, 8, 6)) == (1, 0, 2)
    assert [r.D for r in class_number_table(8)] == [-3, -4, -7, -8]


def test_conductor():
    assert conductor(-48) == 4
    assert conductor(-23) == 1
    assert conductor(36) == 6
    assert conductor(17) == 1


def test_orbifold_sets():
    assert h3_set(17) == frozenset({(-7, 0, -9)})
    assert orbifold_sets(36, "H2sq").count == 24
    assert e2_square(6) == 1
    assert e2_square(5) == 0
    with pytest.raises(InvalidDiscriminant):
        orbifold_sets(35, "H2sq")
    with pytest.raises(InvalidDiscriminant):
        orbifold_sets(-3, "H3")


def test_group_orders():
    assert sl2_order(3) == 24
    assert psl2_order(7) == 168
    assert psl2_order(2) == 6


@pytest.mark.parametrize(
    "family, params, size",
    [
        ("H2_A", {"n": 5}, 18),
        ("H2_B", {"n": 5}, 9),
        ("H2_A", {"n": 7}, 54),
        ("H2_B", {"n": 7}, 36),
        ("Zmiaikou_Alt", {"n": 7}, 16),
        ("Zmiaikou_Sym", {"n": 7}, 144),
        ("KappesMoller", {"d": 7, "epsilon": 0}, 16),
        ("KappesMoller", {"d": 7, "epsilon": 1}, 144),
        ("Duryev", {"d": 2, "n": 3, "epsilon": 0}, 4),
    ],
)
def test_predicted_orbit_sizes(family, params, size):
    assert predicted_orbit_size(family, **params) == size


def test_formula_domains():
    with pytest.raises(BadParams):
        predicted_orbit_size("H2_A", n=4)
    with pytest.raises(BadParams):
        predicted_orbit_size("KappesMoller", d=6)
    with pytest.raises(NonIntegral):
        predicted_orbit_size("Duryev", d=2, n=1, epsilon=0)


def test_order_three_points():
    assert e3_h11(2, 3, 0) == Fraction(1, 2)
    assert e3_h11(4, 1, 0) == 1
    assert e3_h11(5, 1, 0) == 0
    assert e3_h11(4, 1, 1) == 0
    assert e3_h11(4, 2, 0) == 0


@pytest.mark.parametrize(
    "genus, zeros, cylinders, shape",
    [(2, 1, 2, (2, 0)), (2, 2, 2, (2, 1)), (2, 2, 3, (2, 0)), (3, 1, 2, (2, 2)), (3, 1, 3, (3, 0))],
)
def test_cusp_equation_shape(genus, zeros, cylinders, shape):
    assert cusp_equation_shape(genus, zeros, cylinders) == shape


def test_cusp_equation_shape_rejects_too_many_cylinders():
    with pytest.raises(BadParams):
        cusp_equation_shape(2, 1, 3)


def test_quadrics():
    assert quadric_solutions(ellipse(1, 1, 25)) == [(3, 4)]
    assert quadric_solutions(ellipse(1, 1, 25, increasing=False)) == [(3, 4), (4, 3)]
    q = ellipse(Fraction(1, 2), 1, 3)
    assert q.scale == 2 and q.target == 6
    assert quadric_solutions(q) == []
    assert quadric_solutions(ellipse(Fraction(1, 2), 1, 3, increasing=False)) == [(2, 1)]
    assert quadric_solutions(diagonal_quadric([1, 1, 1], 3)) == [(1, 1, 1)]
    conic = three_cylinder_conic(1, 1, 1, 8)
    # w1^2 + (w1 + w3)^2 + w3^2
    assert conic.value((1, 1)) == 6
    assert conic.target == 8


def test_t_fixed_census():
    assert t_fixed_count_h2(5, 1).count == 2
    assert t_fixed_count_h2(3, 1).count == 1
    assert (1, 1, 2, 2) in two_cylinder_shapes(5, 1)
    with pytest.raises(BadParams):
        t_fixed_count_h2(2, 1)


@pytest.mark.parametrize(
    "q, solutions",
    [
        (ellipse(1, 1, 5), [(1, 2)]),
        (ellipse(6, 1, 10), [(1, 2)]),
        (ellipse(3, Fraction(1, 2), 5), [(1, 2)]),
        (ellipse(1, 4, 3), []),
        (ellipse(1, 4, 3, increasing=False), []),
    ],
)
def test_ellipse_examples(q, solutions):
    assert quadric_solutions(q) == solutions


def test_width_two_cusp_at_five_squares():
    result = t_fixed_count_h2(5, 2)
    assert result.count == 2
    assert result.by_label == {"A": 2}
    assert [c.h2_params for c in result.cusps] == [(1, 3, 0, 2, 1, 0)]
    assert all(c.width == 2 for c in result.cusps)


def test_class_numbers_agree_with_reduction_up_to_200():
    for D in range(-3, -201, -1):
        if D % 4 not in (0, 1):
            continue
        assert class_numbers(D).h == class_number_by_reduction(D), D
