import random

import pytest

from qrwe.finite_field import (FieldContext, field, poly_degree, poly_eval,
                               poly_gcd)


def test_construction_errors_name_the_condition():
    with pytest.raises(ValueError, match="odd"):
        FieldContext(2, 3)
    with pytest.raises(ValueError, match="prime"):
        FieldContext(9, 1)
    with pytest.raises(ValueError, match="degree"):
        FieldContext(5, 0)


def test_prime_field_modulus_is_x():
    assert field(7, 1).modulus == (0, 1)


def test_default_moduli_are_smallest_irreducible():
    assert field(3, 2).modulus == (1, 0, 1)        # x^2 + 1
    assert field(3, 3).modulus == (1, 2, 0, 1)     # x^3 + 2x + 1
    with pytest.raises(ValueError, match="reducible"):
        FieldContext(3, 2, modulus=(0, 0, 1))      # x^2


def test_element_enumeration():
    assert list(field(3, 1).elements()) == [0, 1, 2]
    ctx = field(3, 2)
    elems = list(ctx.elements())
    assert len(elems) == 9 and len(set(elems)) == 9 and elems[0] == 0


def test_square_count_is_half():
    for p, v in ((5, 1), (3, 2), (5, 2), (3, 3)):
        ctx = field(p, v)
        squares = sum(1 for x in ctx.elements() if ctx.quadratic_character(x) == 1)
        assert squares == (ctx.q - 1) // 2


def test_f25_has_twelve_squares():
    ctx = field(5, 2)
    assert sum(1 for x in ctx.elements()
               if ctx.quadratic_character(x) == 1) == 12


def test_quadratic_character_basics():
    ctx = field(7, 1)
    assert ctx.quadratic_character(2) == 1   # 2 = 3^2 mod 7
    assert ctx.quadratic_character(0) == 0
    ctx9 = field(3, 2)
    assert ctx9.quadratic_character(ctx9.generator) == -1


def test_quadratic_character_rejects_unreduced():
    with pytest.raises(ValueError, match="not reduced"):
        field(7, 1).quadratic_character(7)


def test_generator_order_is_q_minus_1():
    ctx = field(3, 3)
    g = ctx.generator
    power, order = g, 1
    while power != 1:
        power = ctx.mul(power, g)
        order += 1
    assert order == 26


@pytest.mark.parametrize("p,v", [(3, 1), (5, 1), (3, 2), (5, 2), (3, 3)])
def test_field_axioms_exhaustive(p, v):
    ctx = field(p, v)
    elems = list(ctx.elements())
    for a in elems:
        for b in elems:
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)
            assert ctx.add(a, ctx.neg(a)) == 0
            if a != 0:
                assert ctx.mul(a, ctx.inv(a)) == 1
    rng = random.Random(41)
    for _ in range(2000):
        a, b, c = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))


def test_field_axioms_random_large():
    ctx = field(7, 2)  # q = 49, beyond the exhaustive tier
    rng = random.Random(271828)
    elems = list(ctx.elements())
    for _ in range(10_000):
        a, b, c = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


@pytest.mark.parametrize("p,v", [(3, 1), (7, 1), (3, 2), (5, 2), (3, 4)])
def test_character_multiplicative(p, v):
    ctx = field(p, v)
    for a in range(1, ctx.q):
        for b in range(1, ctx.q):
            assert (ctx.quadratic_character(ctx.mul(a, b))
                    == ctx.quadratic_character(a) * ctx.quadratic_character(b))


def test_character_matches_square_powers():
    ctx = field(5, 1)
    for a in ctx.elements():
        sq = ctx.mul(a, a)
        if a:
            assert ctx.quadratic_character(sq) == 1


def test_poly_gcd_convention():
    ctx = field(3, 1)
    f = [1, 0, 1]
    assert poly_gcd(ctx, f, []) == f
    assert poly_degree([]) == -1
    assert poly_eval(ctx, [2, 1], 1) == 0  # x + 2 at x = 1 over F_3


def test_numpy_tables_agree_with_ops():
    ctx = field(3, 2)
    add, mul = ctx.add_table, ctx.mul_table
    for a in ctx.elements():
        for b in ctx.elements():
            assert int(add[a, b]) == ctx.add(a, b)
            assert int(mul[a, b]) == ctx.mul(a, b)
