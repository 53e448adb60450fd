"""Dense univariate polynomials with exact rational coefficients.

Every polynomial carries a variable tag: ``q`` for the field-size variable
or ``u`` for its reciprocal (u = 1/q).  Arithmetic refuses to combine
polynomials with different tags; the one sanctioned bridge is
:func:`over_q_power`, which rewrites p(q)/q**d as a polynomial in u by
reversing the coefficient list.

Coefficients are `fractions.Fraction` throughout -- there is no floating
point anywhere in the computation path.  Coefficients are stored densely,
index = exponent, with the top coefficient nonzero unless the polynomial
is zero.  Instances are immutable and hashable, safe to share between
concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import SeriesError, VariableTagMismatch

Q_VAR = "q"
U_VAR = "u"

Scalar = Fraction | int


def _normalized(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class UPoly:
    """A polynomial in a single tagged variable over the rationals."""

    var: str
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.var not in (Q_VAR, U_VAR):
            raise ValueError(f"unknown variable tag {self.var!r}")
        object.__setattr__(self, "coeffs", _normalized(self.coeffs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        """Coefficient of the k-th power (0 beyond the stored degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other: UPoly | Scalar) -> UPoly:
        if isinstance(other, UPoly):
            if other.var != self.var:
                raise VariableTagMismatch(
                    f"cannot combine a polynomial in {self.var!r} with one in {other.var!r}"
                )
            return other
        return UPoly(self.var, (Fraction(other),))

    def __add__(self, other: UPoly | Scalar) -> UPoly:
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UPoly(self.var, tuple(self.coeff(k) + o.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __sub__(self, other: UPoly | Scalar) -> UPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: UPoly | Scalar) -> UPoly:
        return self._coerce(other) - self

    def __neg__(self) -> UPoly:
        return UPoly(self.var, tuple(-c for c in self.coeffs))

    def __mul__(self, other: UPoly | Scalar) -> UPoly:
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return UPoly(self.var, ())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return UPoly(self.var, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UPoly:
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = UPoly(self.var, (Fraction(1),))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def json_coeffs(self) -> list[str]:
        """Coefficients as "a/b" strings, index = exponent."""
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                term = format_rational(c)
            else:
                var = self.var if k == 1 else f"{self.var}^{k}"
                term = var if abs(c) == 1 else f"{format_rational(abs(c))}*{var}"
                if c < 0:
                    term = "-" + term
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text


def poly(var: str, coeffs: Iterable[Scalar]) -> UPoly:
    """Build a polynomial from low-to-high coefficients."""
    return UPoly(var, tuple(Fraction(c) for c in coeffs))


def monomial(var: str, k: int, c: Scalar = 1) -> UPoly:
    """The single term c * var**k."""
    return UPoly(var, (Fraction(0),) * k + (Fraction(c),))


def divmod_poly(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    """Exact polynomial long division: a = q*b + r with deg r < deg b."""
    if a.var != b.var:
        raise VariableTagMismatch(
            f"cannot divide a polynomial in {a.var!r} by one in {b.var!r}"
        )
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    quo = [Fraction(0)] * max(len(rem) - len(b.coeffs) + 1, 0)
    lead = b.coeffs[-1]
    db = b.degree
    for shift in range(len(rem) - len(b.coeffs), -1, -1):
        c = rem[shift + db] / lead
        if c == 0:
            continue
        quo[shift] = c
        for i, bc in enumerate(b.coeffs):
            rem[shift + i] -= c * bc
    return UPoly(a.var, tuple(quo)), UPoly(a.var, tuple(rem))


def series_expand(numer: UPoly, denom: UPoly, order: int) -> list[Fraction]:
    """Power-series coefficients c_0..c_order of numer/denom.

    Exact long division; requires a nonzero constant term in the
    denominator (otherwise the quotient is not a power series).
    """
    if numer.var != denom.var:
        raise VariableTagMismatch(
            f"cannot expand a quotient mixing {numer.var!r} and {denom.var!r}"
        )
    if order < 0:
        raise ValueError("order must be nonnegative")
    d0 = denom.coeff(0)
    if d0 == 0:
        raise SeriesError("denominator has zero constant term; quotient is not a power series")
    out: list[Fraction] = []
    for k in range(order + 1):
        s = numer.coeff(k)
        for i in range(1, k + 1):
            s -= denom.coeff(i) * out[k - i]
        out.append(s / d0)
    return out


def over_q_power(p: UPoly, d: int) -> UPoly:
    """Rewrite p(q)/q**d as a polynomial in u = 1/q.

    Requires deg p <= d (otherwise the quotient has positive powers of q
    and is not a u-polynomial).  The coefficient of u**k is the
    coefficient of q**(d-k) in p.
    """
    if p.var != Q_VAR:
        raise VariableTagMismatch("over_q_power expects a polynomial in q")
    if p.degree > d:
        raise ValueError(f"degree {p.degree} exceeds q-power {d}; quotient not polynomial in u")
    return UPoly(U_VAR, tuple(p.coeff(d - k) for k in range(d + 1)))


def format_rational(x: Scalar) -> str:
    """Serialize a rational as "a/b", or "a" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse an "a/b" or "a" string; the inverse of :func:`format_rational`."""
    return Fraction(text.strip())
