import pytest
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from surfaces.perm import (
    Permutation,
    StabilizerChain,
    compose,
    cycle_data,
    find_blocks,
    format_cycles,
    from_cycles,
    from_list,
    group_describe,
    identity,
    inverse,
    is_primitive_images,
    is_transitive_images,
    pair_conjugators,
    parse_cycles,
)
from utils.errors import DegreeMismatch, ParseError


def test_parse_and_format_cycles():
    p = parse_cycles("(1,2)(3,4,5)")
    assert p.n == 5
    assert p(1) == 2 and p(5) == 3
    assert format_cycles(p) == "(1,2)(3,4,5)"
    assert format_cycles(parse_cycles("()", 3)) == "()"


def test_parse_cycles_rejects_garbage():
    with pytest.raises(ParseError):
        parse_cycles("(1,2")
    with pytest.raises(ParseError):
        parse_cycles("(1,2)(2,3)")
    with pytest.raises(ParseError):
        parse_cycles("(1,4)", 3)


def test_compose_applies_right_factor_first():
    p = from_cycles([(1, 2)], 3)
    q = from_cycles([(2, 3)], 3)
    # q sends 2 to 3, p fixes 3
    assert compose(p, q)(2) == 3
    assert compose(p, q)(1) == 2
    with pytest.raises(DegreeMismatch):
        compose(p, from_cycles([(1, 2)], 4))


def test_cycle_data_parity():
    data = cycle_data(parse_cycles("(1,2)(3,4,5)"))
    assert data.cycle_type == (3, 2)
    assert data.parity == "odd"
    assert cycle_data(from_list([2, 3, 1])).is_even


def test_stabilizer_chain_orders():
    five_cycle = from_cycles([(1, 2, 3, 4, 5)], 5).images
    swap = from_cycles([(1, 2)], 5).images
    assert StabilizerChain([five_cycle, swap]).order() == 120
    three = from_cycles([(1, 2, 3)], 5).images
    assert StabilizerChain([three]).order() == 3


def test_stabilizer_chain_uses_the_fixed_base():
    fixes_one = from_cycles([(2, 3, 4)], 5).images
    chain = StabilizerChain([fixes_one])
    assert chain.base() == [0, 1]
    assert chain.order() == 3
    assert chain.contains(from_cycles([(2, 4, 3)], 5).images)
    assert not chain.contains(from_cycles([(1, 2)], 5).images)
    full = StabilizerChain([from_cycles([(1, 2, 3, 4)], 4).images, from_cycles([(1, 2)], 4).images])
    assert full.base() == [0, 1, 2]
    assert full.order() == 24
    assert StabilizerChain([identity(3).images]).base() == []


def test_block_detection():
    a = parse_cycles("(1,2)(3,4)").images
    b = parse_cycles("(1,3)(2,4)").images
    assert is_transitive_images([a, b])
    assert not is_primitive_images([a, b])
    assert find_blocks([a, b]) is not None

    h = parse_cycles("(1,2,3,4,5)").images
    v = parse_cycles("(1,2)", 5).images
    assert is_primitive_images([h, v])
    assert not is_transitive_images([parse_cycles("(1,2)", 4).images])


def _random_perm(rng, n):
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_compose_example():
    assert format_cycles(compose(parse_cycles("(2,3)"), parse_cycles("(1,2,3)"))) == "(1,3)"
    assert compose(parse_cycles("(1,2,3)"), parse_cycles("(1,3,2)")).is_identity()


def test_compose_properties(rng):
    for _ in range(50):
        n = rng.randint(1, 12)
        p, q, r = (_random_perm(rng, n) for _ in range(3))
        assert compose(compose(p, q), r) == compose(p, compose(q, r))
        assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


def test_group_describe_examples():
    alt5 = group_describe([parse_cycles("(1,2,3,4,5)"), parse_cycles("(3,4,5)", 5)])
    assert (alt5.order, alt5.transitive, alt5.primitive) == (60, True, True)
    dihedral = group_describe([parse_cycles("(1,2,3,4)"), parse_cycles("(1,3)", 4)])
    assert (dihedral.order, dihedral.transitive, dihedral.primitive) == (8, True, False)
    assert dihedral.minimal_blocks == ((1, 3), (2, 4))
    cyclic = group_describe([parse_cycles("(1,2,3)")])
    assert (cyclic.order, cyclic.primitive) == (3, True)
    intransitive = group_describe([parse_cycles("(1,2)", 4)])
    assert not intransitive.transitive and not intransitive.primitive


def test_group_order_matches_sympy(rng):
    for _ in range(20):
        n = rng.randint(2, 8)
        gens = [_random_perm(rng, n) for _ in range(rng.randint(1, 3))]
        oracle = PermutationGroup([SympyPermutation(list(g.images)) for g in gens])
        assert group_describe(gens).order == oracle.order()


def test_blocks_are_invariant():
    a = parse_cycles("(1,2,3,4,5,6)")
    b = parse_cycles("(1,4)", 6)
    blocks = group_describe([a, b]).minimal_blocks
    assert blocks is not None
    as_sets = [set(block) for block in blocks]
    for g in (a, b):
        for block in as_sets:
            assert {g(x) for x in block} in as_sets


def test_pair_conjugators_examples():
    a = (parse_cycles("(1,3,2)"), parse_cycles("(1,2)", 3))
    b = (parse_cycles("(1,2,3)"), parse_cycles("(2,3)", 3))
    assert parse_cycles("(1,3)") in pair_conjugators(a, b)

    same = (parse_cycles("(2,3)"), parse_cycles("(1,2,3)"))
    assert identity(3) in pair_conjugators(same, same)

    swap = parse_cycles("(1,2)")
    assert pair_conjugators((swap, swap), (swap, identity(2))) == []


def test_pair_conjugators_verify(rng):
    for _ in range(20):
        n = rng.randint(2, 7)
        h, v, sigma = (_random_perm(rng, n) for _ in range(3))
        target = tuple(compose(sigma, compose(p, inverse(sigma))) for p in (h, v))
        found = pair_conjugators((h, v), target)
        assert sigma in found
        for s in found:
            assert compose(s, compose(h, inverse(s))) == target[0]
            assert compose(s, compose(v, inverse(s))) == target[1]
