"""Expected values of factorization statistics, by every available route.

The expected value of a statistic P over monic degree-d polynomials can
be computed two ways: summing P(lam) against the splitting measure, or
summing inner products against the cohomology characters.  Their
agreement is the central identity of the subject, so it is asserted on
every call rather than tested once.  The squarefree variant has the same
dual structure (with alternating signs on the character side) plus a
choice of normalization: by q**d, or by the actual squarefree count,
which divides out a factor of 1 - u.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, DegreeMismatch, NotStabilized, SeriesError
from .exact import U_VAR, UPoly, divmod_poly, monomial, series_expand
from .lie_chars import phi_table, psi_table
from .measures import SplittingMeasure, sf_splitting_measure, splitting_measure
from .partitions import partitions_of
from .sym_chars import CharacterPolynomial, ClassFunction, inner

VIA_MEASURE = "measure"
VIA_PSI = "psi"
VIA_PHI_SIGNED = "phi_signed"

NORM_Q_POWER = "q_power"
NORM_SF_COUNT = "sf_count"


@dataclass(frozen=True)
class ExpectationResult:
    """An exact expected value as a polynomial in u = 1/q."""

    d: int
    statistic: str
    value: UPoly
    route: str
    normalization: str | None = None
    checks: tuple[str, ...] = ()
    truncated_at: int | None = None

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.value.coeffs

    def at_q(self, q: int | Fraction) -> Fraction:
        """Evaluate at a concrete field size."""
        return self.value.evaluate(Fraction(1, q))


def _measure_sum(P: ClassFunction, measure: SplittingMeasure) -> UPoly:
    out = UPoly(U_VAR, ())
    for lam in partitions_of(measure.d):
        c = P.value(lam)
        if c:
            out = out + measure.value(lam) * c
    return out


def _stat_name(P: ClassFunction, name: str | None) -> str:
    return name if name is not None else (P.name or "stat")


def expected(d: int, P: ClassFunction, name: str | None = None) -> ExpectationResult:
    """E_d(P): the mean of P over all monic degree-d polynomials.

    Computed from the splitting measure and cross-checked against the
    character route sum_k <P, psi_d^k> u**k; the two must agree exactly.
    """
    if d < 1:
        raise ValueError("expected values start at degree 1")
    if P.d != d:
        raise DegreeMismatch(f"statistic is for degree {P.d}, not {d}")
    value = _measure_sum(P, splitting_measure(d))
    psi = psi_table(d)
    via_chars = UPoly(U_VAR, tuple(inner(P, psi.row(k)) for k in range(d)))
    if value != via_chars:
        raise ConsistencyError(
            f"measure route {value} and character route {via_chars} disagree "
            f"for {_stat_name(P, name)} at d={d}"
        )
    return ExpectationResult(
        d=d,
        statistic=_stat_name(P, name),
        value=value,
        route=VIA_MEASURE,
        checks=("psi_route_equal",),
    )


def expected_sf(
    d: int,
    P: ClassFunction,
    normalization: str = NORM_Q_POWER,
    series_order: int | None = None,
    name: str | None = None,
) -> ExpectationResult:
    """Squarefree expected value of P, under a choice of normalization.

    NORM_Q_POWER divides the squarefree sum by q**d (so the all-types and
    squarefree results are directly comparable); NORM_SF_COUNT divides by
    the squarefree count, giving a true conditional mean.  The second is
    the first divided by 1 - u; when that division is not exact (it is
    exact for every d >= 2) the result is a truncated series and
    series_order must be given.
    """
    if d < 1:
        raise ValueError("expected values start at degree 1")
    if P.d != d:
        raise DegreeMismatch(f"statistic is for degree {P.d}, not {d}")
    if normalization not in (NORM_Q_POWER, NORM_SF_COUNT):
        raise ValueError(f"unknown normalization {normalization!r}")
    value = _measure_sum(P, sf_splitting_measure(d))
    phi = phi_table(d)
    via_chars = UPoly(
        U_VAR, tuple(inner(P, phi.row(k)) * (-1) ** k for k in range(d))
    )
    if value != via_chars:
        raise ConsistencyError(
            f"measure route {value} and character route {via_chars} disagree "
            f"for squarefree {_stat_name(P, name)} at d={d}"
        )
    checks = ["phi_route_equal"]
    truncated_at = None
    if normalization == NORM_SF_COUNT:
        density = UPoly(U_VAR, (Fraction(1), Fraction(-1)))  # 1 - u
        quo, rem = divmod_poly(value, density)
        if rem.is_zero():
            value = quo
            checks.append("exact_division")
        elif series_order is not None:
            value = UPoly(U_VAR, tuple(series_expand(value, density, series_order)))
            truncated_at = series_order
            checks.append(f"series_to_order_{series_order}")
        else:
            raise SeriesError(
                f"squarefree-count normalization is not an exact polynomial at d={d}; "
                "pass series_order for a truncated expansion"
            )
    return ExpectationResult(
        d=d,
        statistic=_stat_name(P, name),
        value=value,
        route=VIA_MEASURE,
        normalization=normalization,
        checks=tuple(checks),
        truncated_at=truncated_at,
    )


def eval_q1(d: int, P: ClassFunction) -> Fraction:
    """E_d(P) evaluated at q = 1.

    Equals P at the all-ones partition: the character rows sum to the
    regular character, whose inner product with P picks out that value.
    """
    return expected(d, P).value.evaluate(1)


def trivial_coeff(d: int, P: ClassFunction) -> Fraction:
    """Constant term of E_d(P): the large-q limit of the expected value.

    Equals the coefficient of the trivial character in the expansion of
    P into irreducibles.
    """
    return expected(d, P).value.coeff(0)


@dataclass(frozen=True)
class StableLimit:
    """Coefficientwise limit of E_d(P) as d grows, with witnesses.

    coeffs[k] is the stable value of the u**k coefficient;
    stabilized_at[k] is the first d of the run of three consecutive
    degrees on which that value was observed.
    """

    statistic: str
    order: int
    coeffs: tuple[Fraction, ...]
    stabilized_at: tuple[int, ...]


def stable_limit(
    P: CharacterPolynomial, order: int, d_cap: int = 30
) -> StableLimit:
    """Limit of the first `order`+1 coefficients of E_d(P) as d grows.

    A statistic given by a character polynomial has eventually constant
    coefficients; each coefficient is accepted once it agrees for three
    consecutive d (sampled only for d > k, where the coefficient is a
    genuine character multiplicity rather than a vanishing artifact).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if d_cap < 3:
        raise ValueError("d_cap must allow at least three degrees")
    pending = set(range(order + 1))
    settled_value: dict[int, Fraction] = {}
    settled_at: dict[int, int] = {}
    last: dict[int, Fraction] = {}
    run_start: dict[int, int] = {}
    run_len: dict[int, int] = {}
    for d in range(1, d_cap + 1):
        e = expected(d, P.class_function(d), name=P.name or str(P))
        for k in sorted(pending):
            if d < k + 1:
                continue
            v = e.value.coeff(k)
            if k in last and v == last[k] and run_start[k] + run_len[k] == d:
                run_len[k] += 1
            else:
                run_start[k] = d
                run_len[k] = 1
            last[k] = v
            if run_len[k] == 3:
                settled_value[k] = v
                settled_at[k] = run_start[k]
                pending.discard(k)
        if not pending:
            break
    if pending:
        k = min(pending)
        raise NotStabilized(
            f"coefficient of u^{k} for {P.name or P} did not settle on three "
            f"consecutive degrees by d_cap={d_cap}; raise the cap"
        )
    return StableLimit(
        statistic=P.name or str(P),
        order=order,
        coeffs=tuple(settled_value[k] for k in range(order + 1)),
        stabilized_at=tuple(settled_at[k] for k in range(order + 1)),
    )


def q_limit_closed_form(order: int) -> list[Fraction]:
    """Series coefficients of the closed-form large-d limit for the
    quadratic-excess statistic:

        (1/2)(1 + u)/(1 - u)**2 - (1/2)(1 - u)/(1 - u**2),

    expanded exactly to the requested order.
    """
    one = UPoly(U_VAR, (Fraction(1),))
    u = monomial(U_VAR, 1)
    num1 = (one + u) * Fraction(1, 2)
    den1 = (one - u) ** 2
    num2 = (one - u) * Fraction(1, 2)
    den2 = one - u * u
    numer = num1 * den2 - num2 * den1
    denom = den1 * den2
    return series_expand(numer, denom, order)
