import math

import pytest
from tests.util import *


def test_parse_poly():
    assert parse_poly("x^2+3x+6", 11).coeffs == (6, 3, 1)
    assert parse_poly("6 + x^2 + 3*x", 11).coeffs == (6, 3, 1)
    assert parse_poly("x^3+x+1", 2).coeffs == (1, 1, 0, 1)
    assert parse_poly("x^2-1", 5).coeffs == (4, 0, 1)
    # repeated degrees are summed and reduced
    assert parse_poly("x+x+x", 3).is_zero()


@pytest.mark.parametrize("text", ["", "x^^2", "2y+1", "x^2++1", "3x^"])
def test_parse_poly_malformed(text):
    with pytest.raises(ValueError):
        parse_poly(text, 11)


@pytest.mark.parametrize("text,q", [("x^3+x^2+6x+4", 11), ("x^2+3x+6", 11), ("x^2+x+2", 3), ("x", 7), ("5", 7)])
def test_format_poly(text, q):
    assert format_poly(parse_poly(text, q)) == text


def test_is_irreducible():
    assert is_irreducible(11, parse_poly("x^2+3x+6", 11))
    assert is_irreducible(11, parse_poly("x^3+x^2+6x+4", 11))
    assert is_irreducible(2, parse_poly("x^3+x+1", 2))
    assert not is_irreducible(5, parse_poly("x^2+1", 5))
    assert not is_irreducible(2, parse_poly("x^3+1", 2))
    assert is_irreducible(7, parse_poly("x+3", 7))


def test_is_irreducible_rejects_unsupported_degrees():
    with pytest.raises(InvalidInputError):
        is_irreducible(3, parse_poly("x^4+x+2", 3))
    with pytest.raises(InvalidInputError):
        is_irreducible(3, parse_poly("2", 3))
    with pytest.raises(InvalidInputError):
        is_irreducible(5, parse_poly("x^2+1", 3))


def test_make_field_with_modulus():
    ctx = make_field(11, 2, parse_poly("x^2+3x+6", 11))
    assert ctx.order == 121
    assert ctx.group_order == 120
    assert element_order(ctx, ctx.generator) == 120
    assert ctx.to_json() == {'q': 11, 'p': 11, 'e': 2, 'modulus': "x^2+3x+6", 'generator': [0, 1]}

    ctx = make_field(11, 3, parse_poly("x^3+x^2+6x+4", 11))
    assert is_primitive(ctx, ctx.generator)


def test_make_field_errors():
    with pytest.raises(ModulusError):
        make_field(5, 2, parse_poly("x^2+1", 5))
    # x^2+1 is irreducible over F_3 but x has order 4
    with pytest.raises(PrimitivityError):
        make_field(3, 2, parse_poly("x^2+1", 3))
    with pytest.raises(InvalidInputError):
        make_field(11, 2, parse_poly("x^3+x^2+6x+4", 11))
    with pytest.raises(InvalidInputError):
        make_field(11, 2, Poly([6, 3, 2], 11))
    with pytest.raises(InvalidInputError):
        make_field(11, 4)
    with pytest.raises(InvalidInputError):
        make_field(6, 1)
    with pytest.raises(InvalidInputError):
        make_field(2 ** 13, 1)


def test_make_field_default_modulus():
    assert make_field(3, 2).modulus == parse_poly("x^2+x+2", 3)
    assert make_field(2, 3).modulus == parse_poly("x^3+x^2+1", 2)
    ctx = make_field(7, 1)
    assert ctx.generator.coeffs == (3,)


@pytest.mark.parametrize("q,root", [(3, 2), (5, 2), (7, 3), (11, 2), (13, 2), (4, 2)])
def test_primitive_root(q, root):
    assert primitive_root(q) == root


@pytest.mark.parametrize("q,e", [(4, 2), (8, 2), (9, 2), (4, 3)])
def test_prime_power_base(q, e):
    ctx = make_field(q, e)
    assert ctx.group_order == q ** e - 1
    assert is_primitive(ctx, ctx.generator)
    seen = {elem for _, elem in powers(ctx)}
    assert len(seen) == q ** e - 1


@pytest.mark.parametrize("q,e", [(3, 2), (5, 2), (4, 2), (2, 3), (3, 3)])
def test_field_axioms(q, e):
    ctx = make_field(q, e)
    elements = [ctx.element(coeffs) for coeffs in itertools.product(range(q), repeat=e)]
    one = ctx.one()
    zero = ctx.zero()
    for a in elements:
        assert fe_add(ctx, a, fe_neg(ctx, a)) == zero
        assert fe_sub(ctx, a, a) == zero
        if not a.is_zero():
            assert fe_mul(ctx, a, fe_inv(ctx, a)) == one
    rnd = np.random.RandomState(0)
    for _ in range(50):
        a, b, c = (elements[i] for i in rnd.randint(0, len(elements), size=3))
        assert fe_mul(ctx, a, fe_add(ctx, b, c)) == fe_add(ctx, fe_mul(ctx, a, b), fe_mul(ctx, a, c))
        assert fe_mul(ctx, a, b) == fe_mul(ctx, b, a)


def test_powers():
    ctx = make_field(3, 2)
    sequence = list(powers(ctx))
    assert [a for a, _ in sequence] == list(range(1, 9))
    assert sequence[0][1] == ctx.generator
    assert sequence[-1][1] == ctx.one()
    assert fe_pow(ctx, ctx.generator, 5) == sequence[4][1]


def test_element_errors():
    ctx = make_field(3, 2)
    other = make_field(5, 2)
    with pytest.raises(ContextError):
        fe_add(ctx, ctx.one(), other.one())
    with pytest.raises(InvalidInputError):
        ctx.element([3, 0])
    with pytest.raises(InvalidInputError):
        fe_inv(ctx, ctx.zero())


def test_field_backends():
    ctx = make_field(11, 2, parse_poly("x^2+3x+6", 11))
    assert ctx.array is not None and ctx.array.order == 121
    assert ctx.array.irreducible_poly == ctx.modulus_poly
    assert make_field(7, 1).array.order == 7
    assert make_field(4, 2).array is None
    assert make_field(16, 2).group_order == 255


@pytest.mark.parametrize("q,e,c,order", [(11, 2, 10, 2), (11, 2, 3, 5), (3, 2, 2, 2), (4, 2, 2, 3), (4, 3, 3, 3),
                                         (9, 2, 3, 8), (7, 1, 2, 3)])
def test_element_order_of_scalars(q, e, c, order):
    ctx = make_field(q, e)
    assert element_order(ctx, ctx.scalar(c)) == order
    assert not is_primitive(ctx, ctx.scalar(c))


@pytest.mark.parametrize("q,e", [(5, 2), (4, 2), (2, 3)])
def test_inverse_and_order_agree_with_powers(q, e):
    ctx = make_field(q, e)
    for a, elem in powers(ctx):
        assert fe_mul(ctx, elem, fe_inv(ctx, elem)) == ctx.one()
        assert element_order(ctx, elem) == ctx.group_order // math.gcd(a, ctx.group_order)


def test_linear_modulus_root():
    ctx = make_field(7, 1, parse_poly("x+4", 7))
    assert ctx.generator.coeffs == (3,)
    with pytest.raises(PrimitivityError):
        make_field(7, 1, parse_poly("x+5", 7))
