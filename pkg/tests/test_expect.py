"""Expected values: dual routes, specializations, squarefree variants, limits."""

from fractions import Fraction
from math import comb

import pytest

from splitstat.errors import DegreeMismatch, NotStabilized, SeriesError
from splitstat.exact import U_VAR, poly
from splitstat.expect import (
    NORM_SF_COUNT,
    VIA_MEASURE,
    eval_q1,
    expected,
    expected_sf,
    q_limit_closed_form,
    stable_limit,
    trivial_coeff,
)
from splitstat.gf import census, make_field
from splitstat.sym_chars import (
    CharacterPolynomial,
    builtin,
    builtin_polynomial,
    even_type,
    one,
    parse_character_polynomial,
    quadratic_excess,
    roots,
    sgn,
)

GOLDEN_QUADRATIC_EXCESS = {
    3: [0, 2, 1],
    4: [0, 2, 2, 2],
    5: [0, 2, 2, 4, 2],
    6: [0, 2, 2, 4, 4, 3],
    10: [0, 2, 2, 4, 4, 6, 6, 8, 8, 5],
}


def test_quadratic_excess_golden_rows():
    for d, coeffs in GOLDEN_QUADRATIC_EXCESS.items():
        assert expected(d, quadratic_excess(d)).value == poly(U_VAR, coeffs)


def test_result_metadata():
    r = expected(3, quadratic_excess(3))
    assert (r.d, r.statistic, r.route) == (3, "Q", VIA_MEASURE)
    assert "psi_route_equal" in r.checks
    assert r.normalization is None


def test_sign_expectation_is_a_single_power():
    for d in range(1, 11):
        got = expected(d, sgn(d)).value
        want = [Fraction(0)] * (d // 2) + [Fraction(1)]
        assert got == poly(U_VAR, want)


def test_roots_expectation_is_geometric():
    for d in range(1, 11):
        assert expected(d, roots(d)).value == poly(U_VAR, [1] * d)


def test_even_type_bias():
    half = Fraction(1, 2)
    for d in range(2, 11):
        want = [half] + [Fraction(0)] * (d // 2 - 1) + [half]
        assert expected(d, even_type(d)).value == poly(U_VAR, want)


def test_degree_bound():
    for d in range(1, 9):
        for name in ("one", "sgn", "ET", "R", "Q"):
            assert expected(d, builtin(name, d)).value.degree <= d - 1


def test_expected_validates_arguments():
    with pytest.raises(DegreeMismatch):
        expected(3, one(4))
    with pytest.raises(ValueError):
        expected(0, one(0))


def test_q1_specializations():
    for d in range(1, 11):
        assert eval_q1(d, quadratic_excess(d)) == comb(d, 2)
        assert eval_q1(d, roots(d)) == d
        assert eval_q1(d, sgn(d)) == 1


def test_large_q_specializations():
    for d in range(1, 11):
        assert trivial_coeff(d, quadratic_excess(d)) == 0
        assert trivial_coeff(d, roots(d)) == 1
    # the even-type statistic only splits off a half trivial once the sign
    # character is distinct from the trivial one, i.e. for d >= 2
    for d in range(2, 11):
        assert trivial_coeff(d, even_type(d)) == Fraction(1, 2)
    assert trivial_coeff(1, even_type(1)) == 1


def test_squarefree_even_type_probability_is_exactly_half():
    for d in range(2, 9):
        r = expected_sf(d, even_type(d), NORM_SF_COUNT)
        assert r.value == poly(U_VAR, [Fraction(1, 2)])
        assert "exact_division" in r.checks


def test_squarefree_roots_q_power():
    assert expected_sf(2, roots(2)).value == poly(U_VAR, [1, -1])
    assert expected_sf(3, roots(3)).value == poly(U_VAR, [1, -2, 1])


def test_squarefree_roots_conditional_mean_is_alternating_geometric():
    # verified against the census below; the conditional mean over
    # squarefree polynomials alternates: 1 - u + u^2 - ... (d-1 terms)
    for d in range(2, 9):
        got = expected_sf(d, roots(d), NORM_SF_COUNT).value
        want = poly(U_VAR, [(-1) ** k for k in range(d - 1)])
        assert got == want


def test_squarefree_values_match_census():
    F = make_field(3)
    for d in (2, 3, 4):
        for name in ("one", "sgn", "ET", "R", "Q"):
            P = builtin(name, d)
            sf_census = census(F, d, P, squarefree_only=True)
            assert expected_sf(d, P).at_q(3) == sf_census
            conditional = expected_sf(d, P, NORM_SF_COUNT).at_q(3)
            assert conditional * (1 - Fraction(1, 3)) == sf_census


def test_squarefree_degree_one():
    r = expected_sf(1, one(1))
    assert r.value == poly(U_VAR, [1])
    # dividing by the squarefree density is not exact at d = 1
    with pytest.raises(SeriesError):
        expected_sf(1, one(1), NORM_SF_COUNT)
    truncated = expected_sf(1, one(1), NORM_SF_COUNT, series_order=4)
    assert truncated.value == poly(U_VAR, [1, 1, 1, 1, 1])
    assert truncated.truncated_at == 4


def test_main_theorem_census_sweep_subset():
    for p, n in ((2, 1), (3, 1), (2, 2)):
        F = make_field(p, n)
        for d in (1, 2, 3, 4):
            for name in ("one", "sgn", "ET", "R", "Q"):
                P = builtin(name, d)
                assert census(F, d, P) == expected(d, P).at_q(F.q)


def test_stable_limit_quadratic_excess():
    limit = stable_limit(builtin_polynomial("Q"), 9)
    assert [int(c) for c in limit.coeffs] == [0, 2, 2, 4, 4, 6, 6, 8, 8, 10]
    assert all(d <= 30 for d in limit.stabilized_at)
    assert limit.coeffs == tuple(q_limit_closed_form(9))


def test_stable_limit_roots():
    limit = stable_limit(builtin_polynomial("R"), 5)
    assert list(limit.coeffs) == [1, 1, 1, 1, 1, 1]


def test_stable_limit_constant():
    limit = stable_limit(builtin_polynomial("one"), 4)
    assert list(limit.coeffs) == [1, 0, 0, 0, 0]


def test_stable_limit_reports_witnesses():
    limit = stable_limit(parse_character_polynomial("x1"), 3)
    # coefficient k is sampled for d > k, so the witness is past k
    for k, d_seen in enumerate(limit.stabilized_at):
        assert d_seen >= k + 1


def test_stable_limit_cap_error_names_coefficient():
    with pytest.raises(NotStabilized, match="u\\^1"):
        stable_limit(builtin_polynomial("Q"), 1, d_cap=3)


def test_closed_form_prefix():
    assert q_limit_closed_form(0) == [0]
    assert q_limit_closed_form(2) == [0, 2, 2]


def test_stable_limit_of_higher_binomial():
    # C(x1, 3) counts triples of fixed points; its limit coefficients are
    # another instance of eventual constancy
    cp = CharacterPolynomial.binomial(1, 3)
    limit = stable_limit(cp, 3)
    e20 = expected(20, cp.class_function(20)).value
    assert limit.coeffs == tuple(e20.coeff(k) for k in range(4))
