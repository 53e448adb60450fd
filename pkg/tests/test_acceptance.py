"""Acceptance suite: every exit criterion, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
All comparisons are exact (rational arithmetic); there are no tolerances
to tune.
"""

import random
from contextlib import contextmanager
from fractions import Fraction
from math import comb, factorial

from splitstat.exact import U_VAR, UPoly, over_q_power, poly, series_expand
from splitstat.expect import (
    NORM_SF_COUNT,
    eval_q1,
    expected,
    expected_sf,
    q_limit_closed_form,
    stable_limit,
    trivial_coeff,
)
from splitstat.gf import census, irreducibles, make_field, type_counts
from splitstat.lie_chars import psi_table, regular_check
from splitstat.measures import necklace, sf_splitting_measure, splitting_measure
from splitstat.partitions import Partition, partitions_of
from splitstat.sym_chars import (
    ClassFunction,
    builtin,
    builtin_polynomial,
    decompose,
    even_type,
    inner,
    irr_dim,
    irreducible_character,
    quadratic_excess,
    reconstruct,
    roots,
    sgn,
)

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1)]
STATS = ("one", "sgn", "ET", "R", "Q")


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"[FAIL] {label}")
        raise
    print(f"[PASS] {label}")


def test_c01_golden_quadratic_excess_table():
    golden = {
        3: [0, 2, 1],
        4: [0, 2, 2, 2],
        5: [0, 2, 2, 4, 2],
        6: [0, 2, 2, 4, 4, 3],
        10: [0, 2, 2, 4, 4, 6, 6, 8, 8, 5],
    }
    with criterion("criterion 1: golden expected-value table for Q"):
        for d, coeffs in golden.items():
            assert expected(d, quadratic_excess(d)).value == poly(U_VAR, coeffs)


def test_c02_sign_localization():
    with criterion("criterion 2: expected sign is a single inverse power"):
        for d in range(1, 11):
            want = [Fraction(0)] * (d // 2) + [Fraction(1)]
            assert expected(d, sgn(d)).value == poly(U_VAR, want)
            table = psi_table(d)
            for k in table.degrees:
                assert inner(sgn(d), table.row(k)) == (1 if k == d // 2 else 0)


def test_c03_roots_geometric():
    with criterion("criterion 3: expected root count is the geometric sum"):
        for d in range(1, 11):
            assert expected(d, roots(d)).value == poly(U_VAR, [1] * d)
            table = psi_table(d)
            for k in table.degrees:
                assert inner(roots(d), table.row(k)) == 1


def test_c04_even_type_bias():
    with criterion("criterion 4: even-type bias and squarefree half"):
        half = Fraction(1, 2)
        for d in range(2, 11):
            want = [half] + [Fraction(0)] * (d // 2 - 1) + [half]
            assert expected(d, even_type(d)).value == poly(U_VAR, want)
        for d in range(2, 9):
            got = expected_sf(d, even_type(d), NORM_SF_COUNT).value
            assert got == poly(U_VAR, [half])


def test_c05_regular_representation():
    with criterion("criterion 5: character rows sum to the regular character"):
        for d in range(1, 11):
            assert regular_check(d)
            table = psi_table(d)
            identity = Partition([1] * d)
            assert sum(table.value(k, identity) for k in table.degrees) == factorial(d)


def test_c06_nonnegative_integral_decomposition():
    with criterion("criterion 6: multiplicities are nonnegative integers"):
        for d in range(1, 9):
            table = psi_table(d)
            identity = Partition([1] * d)
            for k in table.degrees:
                row = table.row(k)
                dim_total = 0
                for shape in partitions_of(d):
                    m = inner(row, irreducible_character(shape))
                    assert m.denominator == 1 and m >= 0, (d, k, shape, m)
                    dim_total += int(m) * irr_dim(shape)
                assert dim_total == table.value(k, identity)
            assert decompose(table.row(0)) == {Partition([d]): 1}


def test_c07_main_theorem_census_oracle():
    with criterion("criterion 7: census equals formula for q<=5, d<=5"):
        for p, n in FIELDS:
            field = make_field(p, n)
            for d in range(1, 6):
                for name in STATS:
                    P = builtin(name, d)
                    u = Fraction(1, field.q)
                    assert census(field, d, P) == expected(d, P).value.evaluate(u)
                    assert census(field, d, P, squarefree_only=True) == expected_sf(
                        d, P
                    ).value.evaluate(u)


def test_c08_measure_identities():
    with criterion("criterion 8: measure normalization and point mass"):
        one_poly = poly(U_VAR, [1])
        density = poly(U_VAR, [1, -1])
        for d in range(1, 13):
            assert splitting_measure(d).total() == one_poly
            # at d = 1 every monic linear polynomial is squarefree, so the
            # squarefree mass is 1 rather than 1 - u (confirmed by census)
            assert sf_splitting_measure(d).total() == (one_poly if d == 1 else density)
        for d in range(1, 13):
            for lam, value in splitting_measure(d).items():
                assert value.evaluate(1) == (1 if lam.mult(1) == d else 0)


def test_c09_stable_limits():
    with criterion("criterion 9: coefficientwise stable limits"):
        limit = stable_limit(builtin_polynomial("Q"), 9, d_cap=30)
        assert list(limit.coeffs) == [0, 2, 2, 4, 4, 6, 6, 8, 8, 10]
        assert limit.coeffs == tuple(q_limit_closed_form(9))
        assert all(d <= 30 for d in limit.stabilized_at)
        ones = stable_limit(builtin_polynomial("R"), 8, d_cap=30)
        assert list(ones.coeffs) == [1] * 9
        assert all(d <= 30 for d in ones.stabilized_at)


def test_c10_specializations():
    with criterion("criterion 10: q = 1 and large-q specializations"):
        for d in range(1, 11):
            assert eval_q1(d, quadratic_excess(d)) == comb(d, 2)
            assert eval_q1(d, roots(d)) == d
            assert trivial_coeff(d, quadratic_excess(d)) == 0
        # the half trivial component of the even-type statistic needs the
        # sign character to differ from the trivial one, i.e. d >= 2
        for d in range(2, 11):
            assert trivial_coeff(d, even_type(d)) == Fraction(1, 2)


def test_c11_irreducible_counts():
    with criterion("criterion 11: sieved counts match the count polynomial"):
        for p, n in FIELDS:
            field = make_field(p, n)
            table = irreducibles(field, 6)
            for j in range(1, 7):
                assert len(table[j]) == necklace(j).evaluate(field.q)
        sixth = Fraction(1, 6)
        assert over_q_power(necklace(6), 6) == poly(
            U_VAR, [sixth, 0, 0, -sixth, -sixth, sixth]
        )


def test_c12_property_suites():
    with criterion("criterion 12: orthonormality, round trips, determinism"):
        # character orthonormality, d <= 8
        for d in range(1, 9):
            shapes = partitions_of(d)
            for a in shapes:
                for b in shapes:
                    got = inner(irreducible_character(a), irreducible_character(b))
                    assert got == (1 if a == b else 0)
        # decompose / reconstruct round-trip on randomized class functions
        rng = random.Random(2024)
        for d in (3, 5, 8):
            for _ in range(3):
                X = ClassFunction(
                    d,
                    {
                        lam: Fraction(rng.randrange(-30, 31), rng.randrange(1, 11))
                        for lam in partitions_of(d)
                    },
                )
                assert reconstruct(d, decompose(X)) == X
        # census determinism under varied thread counts
        histograms = []
        for threads in (1, 2, 5):
            field = make_field(3)
            histograms.append(type_counts(field, 4, threads=threads))
        assert histograms[0] == histograms[1] == histograms[2]
        # series expansion against direct polynomial multiplication
        for _ in range(20):
            a = poly(U_VAR, [rng.randrange(-5, 6) for _ in range(rng.randrange(1, 6))])
            b = poly(U_VAR, [rng.randrange(-5, 6) for _ in range(rng.randrange(1, 6))])
            if b.coeff(0) == 0:
                b = b + 1
            order = 10
            coeffs = series_expand(a, b, order)
            back = UPoly(U_VAR, tuple(coeffs)) * b
            for k in range(order + 1 - b.degree):
                assert back.coeff(k) == a.coeff(k)
