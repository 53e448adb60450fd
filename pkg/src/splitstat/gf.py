"""Brute-force ground truth over finite fields.

Constructs F_q for prime powers q, enumerates and factors every monic
polynomial of a given degree by trial division against a sieved table of
irreducibles, and computes exact census averages of factorization
statistics.  This module is an oracle, not a performance artifact:
everything is deterministic and exact, and enumeration is capped by an
explicit budget (default 10**7 polynomials).

Field elements are encoded as integers 0..q-1.  For a prime field the
integer is the residue itself; for F_{p^n} it encodes the length-n
coefficient vector over F_p in base p (digit i = coefficient of the i-th
power of the residue class of x modulo the field's defining polynomial).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import BudgetExceeded, DegreeMismatch, InvalidCharacteristic
from .partitions import Partition
from .sym_chars import ClassFunction

DEFAULT_BUDGET = 10**7

# Extension fields up to this size get full add/mul lookup tables.
_TABLE_LIMIT = 256


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    i = 2
    while i * i <= m:
        if m % i == 0:
            return False
        i += 1
    return True


# --- polynomial helpers over the prime field (coefficients are ints mod p) --

def _pf_rem(num: tuple[int, ...], den: tuple[int, ...], p: int) -> tuple[int, ...]:
    # den is monic; returns num mod den with trailing zeros stripped
    rem = list(num)
    dd = len(den) - 1
    for shift in range(len(rem) - len(den), -1, -1):
        c = rem[shift + dd]
        if c:
            for i, dc in enumerate(den):
                rem[shift + i] = (rem[shift + i] - c * dc) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(rem)


def _pf_irreducibles(p: int, max_deg: int) -> dict[int, list[tuple[int, ...]]]:
    # Sieve of monic irreducibles over F_p by increasing degree.
    table: dict[int, list[tuple[int, ...]]] = {}
    for deg in range(1, max_deg + 1):
        found = []
        for tail in product(range(p), repeat=deg):
            cand = tail + (1,)
            if any(
                not _pf_rem(cand, irr, p)
                for dd in range(1, deg // 2 + 1)
                for irr in table[dd]
            ):
                continue
            found.append(cand)
        table[deg] = found
    return table


def _lex_min_irreducible(p: int, n: int) -> tuple[int, ...]:
    # Smallest monic irreducible of degree n over F_p, candidates compared
    # low-to-high coefficient (constant term most significant).
    lower = _pf_irreducibles(p, n // 2)
    for tail in product(range(p), repeat=n):
        cand = tail + (1,)
        if all(
            _pf_rem(cand, irr, p)
            for dd in range(1, n // 2 + 1)
            for irr in lower[dd]
        ):
            return cand
    raise AssertionError(f"no irreducible of degree {n} over F_{p}")  # unreachable


class FqField:
    """The field with q = p**n elements.

    Use :func:`make_field` to construct one; direct construction assumes
    the modulus is a valid monic irreducible.
    """

    __slots__ = ("p", "n", "q", "modulus", "_add", "_mul", "_inv", "_irr", "_hist")

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]) -> None:
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = modulus
        self._irr: dict[int, tuple[tuple[int, ...], ...]] = {}
        self._hist: dict[int, tuple[dict, dict]] = {}
        self._add = self._mul = self._inv = None
        if n > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- element encoding --------------------------------------------------

    def _decode(self, e: int) -> list[int]:
        digits = []
        for _ in range(self.n):
            e, r = divmod(e, self.p)
            digits.append(r)
        return digits

    def _encode(self, digits: list[int]) -> int:
        e = 0
        for c in reversed(digits):
            e = e * self.p + c
        return e

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic ----------------------------------------------------------

    def _ext_mul(self, a: int, b: int) -> int:
        da, db = self._decode(a), self._decode(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = list(_pf_rem(tuple(prod), self.modulus, self.p))
        rem += [0] * (self.n - len(rem))
        return self._encode(rem)

    def _build_tables(self) -> None:
        q = self.q
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = self._decode(a)
            for b in range(a, q):
                db = self._decode(b)
                s = self._encode([(x + y) % self.p for x, y in zip(da, db)])
                add[a][b] = add[b][a] = s
                m = self._ext_mul(a, b)
                mul[a][b] = mul[b][a] = m
        inv = [0] * q
        for a in range(1, q):
            inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
        self._add, self._mul, self._inv = add, mul, inv

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._encode(
            [(x + y) % self.p for x, y in zip(self._decode(a), self._decode(b))]
        )

    def neg(self, a: int) -> int:
        if self.n == 1:
            return (-a) % self.p
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a * b) % self.p
        if self._mul is not None:
            return self._mul[a][b]
        return self._ext_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- identity ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FqField)
            and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def __repr__(self) -> str:
        return f"FqField(q={self.p}^{self.n})" if self.n > 1 else f"FqField(q={self.p})"


def make_field(p: int, n: int = 1) -> FqField:
    """Construct F_{p^n}.

    For n = 1 the defining modulus is x (prime-field fast path); for
    n > 1 it is the lexicographically smallest monic irreducible of
    degree n over F_p, coefficients compared low-to-high.
    """
    if not _is_prime(p):
        raise InvalidCharacteristic(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be at least 1")
    modulus = (0, 1) if n == 1 else _lex_min_irreducible(p, n)
    return FqField(p, n, modulus)


@dataclass(frozen=True)
class FqPoly:
    """A monic polynomial over a finite field, coefficients low-to-high."""

    field: FqField
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("FqPoly must be monic")
        if any(not 0 <= c < self.field.q for c in self.coeffs):
            raise ValueError("coefficients must be field elements 0..q-1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.field.add(self.field.mul(acc, x), c)
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                x = "x" if k == 1 else f"x^{k}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms) if terms else "0"


def _divrem(F: FqField, num: tuple[int, ...], den: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # den is monic.  Returns (quotient, remainder) with trailing zeros stripped.
    rem = list(num)
    dd = len(den) - 1
    qlen = max(len(rem) - dd, 0)
    quo = [0] * qlen
    for shift in range(len(rem) - len(den), -1, -1):
        c = rem[shift + dd]
        if c:
            quo[shift] = c
            for i, dc in enumerate(den):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, dc))
    del rem[dd:]
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(quo), tuple(rem)


def _check_budget(q: int, degree: int, budget: int, what: str) -> None:
    total = sum(q**j for j in range(1, degree + 1))
    if total > budget:
        raise BudgetExceeded(
            f"{what} needs {total} polynomial enumerations over F_{q}, "
            f"above the budget of {budget}; raise the budget to proceed"
        )


def _irreducibles_raw(field: FqField, max_degree: int, budget: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    _check_budget(field.q, max_degree, budget, f"sieving irreducibles to degree {max_degree}")
    for deg in range(1, max_degree + 1):
        if deg in field._irr:
            continue
        found = []
        lower = [irr for dd in range(1, deg // 2 + 1) for irr in field._irr[dd]]
        for tail in product(field.elements(), repeat=deg):
            cand = tail + (1,)
            if all(_divrem(field, cand, irr)[1] for irr in lower):
                found.append(cand)
        field._irr[deg] = tuple(found)
    return {deg: field._irr[deg] for deg in range(1, max_degree + 1)}


def irreducibles(
    field: FqField, max_degree: int, budget: int = DEFAULT_BUDGET
) -> dict[int, tuple[FqPoly, ...]]:
    """All monic irreducibles of degree 1..max_degree, grouped by degree.

    Sieve order: polynomials are enumerated with the constant coefficient
    most significant, and anything divisible by a lower-degree
    irreducible is discarded.
    """
    raw = _irreducibles_raw(field, max_degree, budget)
    return {deg: tuple(FqPoly(field, c) for c in raw[deg]) for deg in raw}


def _type_and_squarefree(
    F: FqField,
    coeffs: tuple[int, ...],
    irr_by_deg: dict[int, tuple[tuple[int, ...], ...]],
) -> tuple[tuple[int, ...], bool]:
    # Trial division in (degree, lex) order.  Once all factors of degree
    # < s are removed, a remainder of degree < 2s must itself be
    # irreducible, which bounds the sieve at half the degree.
    rest = coeffs
    degs: list[int] = []
    squarefree = True
    half = (len(coeffs) - 1) // 2
    for step in range(1, half + 1):
        if len(rest) - 1 < 2 * step:
            break
        for irr in irr_by_deg.get(step, ()):
            mult = 0
            while len(rest) >= len(irr):
                quo, rem = _divrem(F, rest, irr)
                if rem:
                    break
                rest = quo
                mult += 1
            if mult:
                degs.extend([step] * mult)
                if mult > 1:
                    squarefree = False
                if len(rest) - 1 < 2 * step:
                    break
    if len(rest) > 1:
        degs.append(len(rest) - 1)
    return tuple(sorted(degs, reverse=True)), squarefree


def factorization_type(f: FqPoly, budget: int = DEFAULT_BUDGET) -> Partition:
    """The partition of deg f given by irreducible factor degrees.

    Repeated factors contribute repeatedly: x**2 has type [1,1], the same
    as a product of two distinct linear factors.
    """
    if f.degree < 1:
        raise ValueError("factorization type needs degree at least 1")
    irr = _irreducibles_raw(f.field, f.degree // 2, budget)
    degs, _ = _type_and_squarefree(f.field, f.coeffs, irr)
    return Partition(degs)


def _histograms(
    field: FqField, d: int, budget: int, threads: int
) -> tuple[dict[Partition, int], dict[Partition, int]]:
    if d in field._hist:
        return field._hist[d]
    if field.q**d > budget:
        raise BudgetExceeded(
            f"census of q^d = {field.q**d} polynomials is above the budget of "
            f"{budget}; raise the budget to proceed"
        )
    irr = _irreducibles_raw(field, d // 2, budget)
    q = field.q

    def block(lead: int) -> tuple[dict, dict]:
        # One enumeration block: all monic f with fixed coefficient of x**(d-1).
        all_counts: dict[tuple[int, ...], int] = {}
        sf_counts: dict[tuple[int, ...], int] = {}
        for tail in product(range(q), repeat=d - 1):
            coeffs = tail + (lead, 1)
            degs, squarefree = _type_and_squarefree(field, coeffs, irr)
            all_counts[degs] = all_counts.get(degs, 0) + 1
            if squarefree:
                sf_counts[degs] = sf_counts.get(degs, 0) + 1
        return all_counts, sf_counts

    leads = list(field.elements())
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(block, leads))
    else:
        results = [block(lead) for lead in leads]

    # Merge per-block partial counts in block order.
    merged_all: dict[Partition, int] = {}
    merged_sf: dict[Partition, int] = {}
    for all_counts, sf_counts in results:
        for degs, c in all_counts.items():
            lam = Partition(degs)
            merged_all[lam] = merged_all.get(lam, 0) + c
        for degs, c in sf_counts.items():
            lam = Partition(degs)
            merged_sf[lam] = merged_sf.get(lam, 0) + c
    field._hist[d] = (merged_all, merged_sf)
    return merged_all, merged_sf


def census(
    field: FqField,
    d: int,
    stat: ClassFunction,
    squarefree_only: bool = False,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> Fraction:
    """(1/q**d) * sum of stat(type(f)) over all monic degree-d f.

    With squarefree_only, the sum is restricted to polynomials with no
    repeated irreducible factor (the q**d normalization is kept).  The
    result is exact and independent of the thread count.
    """
    if d < 1:
        raise ValueError("census needs degree at least 1")
    if stat.d != d:
        raise DegreeMismatch(f"statistic is for degree {stat.d}, census is for {d}")
    all_counts, sf_counts = _histograms(field, d, budget, threads)
    counts = sf_counts if squarefree_only else all_counts
    total = Fraction(0)
    for lam, c in counts.items():
        total += stat.value(lam) * c
    return total / Fraction(field.q) ** d


def type_counts(
    field: FqField,
    d: int,
    squarefree_only: bool = False,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> dict[Partition, int]:
    """Exact histogram of factorization types among monic degree-d polynomials."""
    if d < 1:
        raise ValueError("census needs degree at least 1")
    all_counts, sf_counts = _histograms(field, d, budget, threads)
    return dict(sf_counts if squarefree_only else all_counts)
