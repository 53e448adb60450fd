"""Exact rational polynomial arithmetic and series expansion."""

import random
from fractions import Fraction

import pytest

from splitstat.errors import SeriesError, VariableTagMismatch
from splitstat.exact import (
    Q_VAR,
    U_VAR,
    UPoly,
    divmod_poly,
    format_rational,
    monomial,
    over_q_power,
    parse_rational,
    poly,
    series_expand,
)


def rand_poly(rng, var, max_deg=6):
    n = rng.randrange(max_deg + 1)
    return poly(var, [Fraction(rng.randrange(-9, 10), rng.randrange(1, 8)) for _ in range(n + 1)])


def test_rational_arithmetic_stays_reduced():
    # the rational backend must keep values in lowest terms with a
    # positive denominator after every operation
    from math import gcd

    rng = random.Random(19)
    for _ in range(80):
        a = Fraction(rng.randrange(-60, 60), rng.randrange(1, 40))
        b = Fraction(rng.randrange(-60, 60), rng.randrange(1, 40))
        c = Fraction(rng.randrange(-60, 60), rng.randrange(1, 40))
        for x in (a + b, a - b, a * b, a + b * c, (a + b) * c):
            assert x.denominator > 0
            assert gcd(x.numerator, x.denominator) == 1
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_difference_of_squares():
    one_plus = poly(U_VAR, [1, 1])
    one_minus = poly(U_VAR, [1, -1])
    assert one_plus * one_minus == poly(U_VAR, [1, 0, -1])


def test_additive_identity():
    rng = random.Random(1)
    zero = UPoly(U_VAR, ())
    for _ in range(20):
        p = rand_poly(rng, U_VAR)
        assert zero + p == p
        assert p + zero == p


def test_scalar_path():
    p = poly(Q_VAR, [0, -1, 1])  # q^2 - q
    assert p * Fraction(1, 2) == poly(Q_VAR, [0, Fraction(-1, 2), Fraction(1, 2)])


def test_normalization_strips_trailing_zeros():
    assert poly(U_VAR, [1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert poly(U_VAR, [0, 0]).is_zero()
    assert poly(U_VAR, []).degree == -1


def test_tag_mismatch_rejected():
    with pytest.raises(VariableTagMismatch):
        poly(Q_VAR, [1]) + poly(U_VAR, [1])
    with pytest.raises(VariableTagMismatch):
        poly(Q_VAR, [1, 1]) * poly(U_VAR, [1, 1])


def test_ring_axioms_on_random_triples():
    rng = random.Random(7)
    for _ in range(60):
        a, b, c = (rand_poly(rng, U_VAR) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_eval_is_multiplicative():
    rng = random.Random(11)
    for _ in range(40):
        a, b = rand_poly(rng, U_VAR), rand_poly(rng, U_VAR)
        x = Fraction(rng.randrange(-5, 6), rng.randrange(1, 7))
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)


def test_eval_examples():
    assert poly(U_VAR, [1, -1]).evaluate(1) == 0
    assert poly(U_VAR, [0, 2, 1]).evaluate(Fraction(1, 3)) == Fraction(7, 9)
    # E_3(Q) = 2u + u^2 at u=1 gives 3 = C(3,2)
    assert poly(U_VAR, [0, 2, 1]).evaluate(1) == 3


def test_divmod_reconstructs():
    rng = random.Random(3)
    for _ in range(40):
        a = rand_poly(rng, U_VAR, 8)
        b = rand_poly(rng, U_VAR, 4)
        if b.is_zero():
            continue
        q, r = divmod_poly(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_series_geometric():
    one = poly(U_VAR, [1])
    assert series_expand(one, poly(U_VAR, [1, -1]), 3) == [1, 1, 1, 1]
    assert series_expand(one, poly(U_VAR, [1, 1]), 3) == [1, -1, 1, -1]


def test_series_of_polynomial_is_padded_coeffs():
    rng = random.Random(5)
    one = poly(U_VAR, [1])
    for _ in range(20):
        p = rand_poly(rng, U_VAR, 5)
        got = series_expand(p, one, 8)
        assert got == [p.coeff(k) for k in range(9)]


def test_series_matches_product():
    # if c = a/b to high order then (sum c_k u^k) * b agrees with a on low terms
    rng = random.Random(13)
    for _ in range(20):
        a = rand_poly(rng, U_VAR, 5)
        b = rand_poly(rng, U_VAR, 5)
        if b.coeff(0) == 0:
            b = b + 1
        order = 12
        c = series_expand(a, b, order)
        back = poly(U_VAR, c) * b
        for k in range(order + 1 - b.degree):
            assert back.coeff(k) == a.coeff(k)


def test_series_needs_nonzero_constant_term():
    with pytest.raises(SeriesError):
        series_expand(poly(U_VAR, [1]), poly(U_VAR, [0, 1]), 3)


def test_quadratic_excess_limit_series():
    # (1/2)(1+u)/(1-u)^2 - (1/2)(1-u)/(1-u^2), expanded to order 9
    one = poly(U_VAR, [1])
    u = monomial(U_VAR, 1)
    num = (one + u) * Fraction(1, 2) * (one - u * u) - (one - u) * Fraction(1, 2) * (one - u) ** 2
    den = ((one - u) ** 2) * (one - u * u)
    assert series_expand(num, den, 9) == [0, 2, 2, 4, 4, 6, 6, 8, 8, 10]


def test_over_q_power_reverses():
    p = poly(Q_VAR, [3, 0, 1])  # q^2 + 3
    assert over_q_power(p, 2) == poly(U_VAR, [1, 0, 3])
    assert over_q_power(poly(Q_VAR, [0, 1]), 2) == poly(U_VAR, [0, 1])  # q/q^2 = u
    with pytest.raises(ValueError):
        over_q_power(poly(Q_VAR, [0, 0, 0, 1]), 2)
    with pytest.raises(VariableTagMismatch):
        over_q_power(poly(U_VAR, [1]), 1)


def test_rational_serialization():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(5)) == "5"
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    rng = random.Random(17)
    for _ in range(40):
        x = Fraction(rng.randrange(-1000, 1000), rng.randrange(1, 1000))
        assert parse_rational(format_rational(x)) == x


def test_json_coeffs():
    p = poly(U_VAR, [0, 2, Fraction(1, 2)])
    assert p.json_coeffs() == ["0", "2", "1/2"]
