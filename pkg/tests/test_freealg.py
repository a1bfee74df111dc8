import random

import pytest

from ncfilt.errors import FieldMismatch, SingularMatrix, ZeroPolynomial
from ncfilt.fields import QQ, prime_field
from ncfilt.freealg import (
    GenOrder,
    NcPoly,
    apply_linear_change,
    leading_monomial,
    poly_mul,
    render_poly,
    word_compare,
)

X, Y = (0,), (1,)
ORD_XY = GenOrder((0, 1))  # x < y
ORD_YX = GenOrder((1, 0))  # y < x


def mono(word, coeff=1, field=QQ):
    return NcPoly.monomial(field, word, coeff)


def test_word_compare_lex_on_equal_degree():
    assert word_compare((0, 1), (1, 0), ORD_XY) == -1


def test_word_compare_degree_dominates():
    assert word_compare((0,), (0, 1), ORD_XY) == -1
    assert word_compare((1, 1), (0, 0, 0), ORD_YX) == -1


def test_word_compare_equal():
    assert word_compare((0, 1), (0, 1), ORD_XY) == 0


def test_order_total_and_multiplicative():
    rng = random.Random(5)
    words = [tuple(rng.randrange(3) for _ in range(rng.randrange(4)))
             for _ in range(60)]
    ord3 = GenOrder((2, 0, 1))
    for _ in range(200):
        u, v, w = rng.choice(words), rng.choice(words), rng.choice(words)
        cuv = word_compare(u, v, ord3)
        assert cuv == -word_compare(v, u, ord3)
        if cuv == -1:
            assert word_compare(w + u, w + v, ord3) == -1
            assert word_compare(u + w, v + w, ord3) == -1


def test_poly_mul_bilinear():
    f = mono(X) + mono(Y)
    g = mono(X) - mono(Y)
    product = poly_mul(f, g)
    assert product.terms == {(0, 0): 1, (0, 1): -1, (1, 0): 1, (1, 1): -1}


def test_poly_mul_identity():
    f = mono((0, 1), 3) + mono((1, 1), -2)
    assert poly_mul(f, NcPoly.one(QQ)) == f


def test_poly_mul_char2():
    F2 = prime_field(2)
    f = mono(X, 1, F2) + mono(Y, 1, F2)
    sq = poly_mul(f, f)
    assert sq.terms == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}


def test_poly_field_mismatch():
    with pytest.raises(FieldMismatch):
        poly_mul(mono(X), mono(X, 1, prime_field(5)))


def test_leading_monomial_deglex():
    f = mono((0, 0)) - mono((0, 1))
    word, coeff = leading_monomial(f, ORD_XY)
    assert word == (0, 1) and coeff == -1
    g = mono((1, 0)) - mono((0, 1))
    assert leading_monomial(g, ORD_XY)[0] == (1, 0)
    assert leading_monomial(mono((0, 1, 0), 7), ORD_XY) == ((0, 1, 0), 7)
    with pytest.raises(ZeroPolynomial):
        leading_monomial(NcPoly.zero(QQ), ORD_XY)


def test_lm_multiplicative():
    rng = random.Random(9)
    ord3 = GenOrder((0, 1, 2))
    for _ in range(40):
        f = NcPoly(QQ, {tuple(rng.randrange(3) for _ in range(2)):
                        rng.choice([1, -1, 2]) for _ in range(3)})
        g = NcPoly(QQ, {tuple(rng.randrange(3) for _ in range(3)):
                        rng.choice([1, -1, 3]) for _ in range(2)})
        if f.is_zero() or g.is_zero():
            continue
        lf, _ = f.leading(ord3)
        lg, _ = g.leading(ord3)
        assert (f * g).leading(ord3)[0] == lf + lg


def test_apply_linear_change_swap():
    swap = [[0, 1], [1, 0]]
    assert apply_linear_change(mono((0, 1)), swap).terms == {(1, 0): 1}


def test_apply_linear_change_identity():
    f = mono((0, 1), 2) - mono((1, 1))
    assert apply_linear_change(f, [[1, 0], [0, 1]]) == f


def test_apply_linear_change_expand_square():
    # x -> x + y applied to x^2
    image = apply_linear_change(mono((0, 0)), [[1, 1], [0, 1]])
    assert image.terms == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}


def test_apply_linear_change_inverse_round_trip():
    f = mono((0, 1), 2) + mono((1, 0), -5) + mono((0, 0), 3)
    forward = [[1, 2], [1, 3]]
    inverse = [[3, -2], [-1, 1]]
    assert apply_linear_change(apply_linear_change(f, forward), inverse) == f


def test_apply_linear_change_singular():
    with pytest.raises(SingularMatrix):
        apply_linear_change(mono((0, 1)), [[1, 1], [1, 1]])


def test_render_words():
    f = mono((1, 0)) - mono((0, 1))
    assert render_poly(f, ["x", "y"], ORD_XY) == "y*x - x*y"
    assert render_poly(NcPoly.zero(QQ), ["x", "y"]) == "0"
