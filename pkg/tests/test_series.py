import random
from fractions import Fraction

import pytest

from ncfilt.errors import NonInvertibleDenominator, SingularSystem
from ncfilt.series import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    poly_arith,
    poly_gcd,
    ratfunc_expand,
    series_match,
    solve_rational_system,
)


def expand_by_long_division(num, den, trunc):
    """Independent oracle: schoolbook power-series long division."""
    out = []
    rem = list(num) + [Fraction(0)] * (trunc + 1)
    for k in range(trunc + 1):
        c = rem[k] / den[0]
        out.append(c)
        for i, d in enumerate(den):
            rem[k + i] -= c * d
    return out


def test_poly_mul_expansion():
    assert Polynomial((1, -1)) * Polynomial((1, -2)) == Polynomial((1, -3, 2))


def test_poly_add_identity():
    p = Polynomial((2, 0, 5))
    assert poly_arith(p, Polynomial(), "add") == p


def test_poly_telescoping_product():
    product = Polynomial((1, -1)) * Polynomial((1, 1, 1, 1))
    assert product == Polynomial((1, 0, 0, 0, -1))


def test_expand_geometric():
    f = RationalFunction(Polynomial((1,)), Polynomial((1, -2)))
    assert ratfunc_expand(f, 4) == TruncatedSeries([1, 2, 4, 8, 16])


def test_expand_against_long_division():
    f = RationalFunction(Polynomial((1,)), Polynomial((1, -3, 2)))
    got = ratfunc_expand(f, 4)
    oracle = expand_by_long_division([Fraction(1)],
                                     [Fraction(1), Fraction(-3), Fraction(2)],
                                     4)
    assert list(got.coeffs) == oracle == [1, 3, 7, 15, 31]
    assert all(c == 2 ** (k + 1) - 1 for k, c in enumerate(got.coeffs))


def test_expand_cancellation():
    f = RationalFunction(Polynomial((1, -1)), Polynomial((1, -1)))
    assert ratfunc_expand(f, 3) == TruncatedSeries([1, 0, 0, 0])


def test_expand_rejects_zero_constant_term():
    with pytest.raises(NonInvertibleDenominator):
        RationalFunction(Polynomial((1,)), Polynomial((0, 1)))


def test_series_match():
    f = RationalFunction(Polynomial((1,)), Polynomial((1, -2, 1)))
    assert series_match(TruncatedSeries([1, 2, 3, 4]), f)
    assert not series_match(TruncatedSeries([1, 2, 3, 5]), f)
    assert series_match(TruncatedSeries([1]), RationalFunction.one())


def test_reduction_and_normalization():
    # (2 - 2z^2) / (2 + 2z) reduces to 1 - z with constant term 1
    f = RationalFunction(Polynomial((2, 0, -2)), Polynomial((2, 2)))
    assert f.num == Polynomial((1, -1))
    assert f.den == Polynomial((1,))
    g = poly_gcd(f.num, f.den)
    assert g == Polynomial((1,))


def test_round_trip_property():
    rng = random.Random(71)
    for _ in range(25):
        num = Polynomial([rng.randint(-4, 4) for _ in range(rng.randint(0, 4))])
        den = Polynomial([1] + [rng.randint(-3, 3)
                                for _ in range(rng.randint(0, 3))])
        f = RationalFunction(num, den)
        trunc = 9
        series = ratfunc_expand(f, trunc)
        # multiply the series back by the denominator: must reproduce num
        back = [sum(series[k - i] * f.den[i]
                    for i in range(min(k, f.den.degree) + 1))
                for k in range(trunc + 1)]
        for k in range(trunc + 1):
            assert back[k] == f.num[k]
        g = poly_gcd(f.num, f.den)
        assert g.degree <= 0


def test_ratfunc_arithmetic_exact():
    half = RationalFunction(Polynomial((Fraction(1, 2),)))
    z = RationalFunction(Polynomial((0, 1)))
    combo = (half + z) * (half - z)
    assert combo == RationalFunction(
        Polynomial((Fraction(1, 4), 0, -1)))
    ratio = z / (RationalFunction.one() + z)
    assert ratio.num == Polynomial((0, 1))
    assert ratio.den == Polynomial((1, 1))


def test_rendering_round_shape():
    f = RationalFunction(Polynomial((1, Fraction(-2, 3))),
                         Polynomial((1, 0, 2)))
    assert str(f) == "(1 - 2/3*z)/(1 + 2*z^2)"


def test_solver_identity_system():
    one = RationalFunction.one()
    zero = RationalFunction.zero()
    z = RationalFunction(Polynomial((0, 1)))
    # u = 1 + z*u  =>  u = 1/(1-z)
    solution = solve_rational_system([[one - z]], [one])
    assert solution[0] == RationalFunction(Polynomial((1,)),
                                           Polynomial((1, -1)))
    with pytest.raises(SingularSystem):
        solve_rational_system([[zero]], [one])
