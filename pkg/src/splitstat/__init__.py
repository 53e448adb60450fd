"""Exact factorization statistics for monic polynomials over finite fields.

The library computes expected values of factorization statistics three
independent ways -- splitting measures, symmetric-group character inner
products, and a brute-force finite-field census -- and checks that they
agree exactly.  All arithmetic is rational; nothing is floating point.
"""

from .errors import (
    BudgetExceeded,
    ConsistencyError,
    DegreeMismatch,
    InvalidCharacteristic,
    NotStabilized,
    SeriesError,
    SplitstatError,
    UnknownStatistic,
    VariableTagMismatch,
)
from .exact import (
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
from .expect import (
    NORM_Q_POWER,
    NORM_SF_COUNT,
    VIA_MEASURE,
    VIA_PHI_SIGNED,
    VIA_PSI,
    ExpectationResult,
    StableLimit,
    eval_q1,
    expected,
    expected_sf,
    q_limit_closed_form,
    stable_limit,
    trivial_coeff,
)
from .gf import (
    DEFAULT_BUDGET,
    FqField,
    FqPoly,
    census,
    factorization_type,
    irreducibles,
    make_field,
    type_counts,
)
from .lie_chars import CharTable, phi_table, psi_table, regular_check
from .measures import (
    FLAVOR_ALL,
    FLAVOR_SQUAREFREE,
    SplittingMeasure,
    necklace,
    sf_splitting_measure,
    splitting_measure,
)
from .partitions import Partition, partitions_of
from .sym_chars import (
    CharacterPolynomial,
    ClassFunction,
    builtin,
    builtin_names,
    builtin_polynomial,
    decompose,
    even_type,
    indicator,
    inner,
    irr_dim,
    irreducible_character,
    mn_character,
    one,
    parse_character_polynomial,
    quadratic_excess,
    reconstruct,
    roots,
    sgn,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CharTable",
    "CharacterPolynomial",
    "ClassFunction",
    "ConsistencyError",
    "DEFAULT_BUDGET",
    "DegreeMismatch",
    "ExpectationResult",
    "FLAVOR_ALL",
    "FLAVOR_SQUAREFREE",
    "FqField",
    "FqPoly",
    "InvalidCharacteristic",
    "NORM_Q_POWER",
    "NORM_SF_COUNT",
    "NotStabilized",
    "Partition",
    "Q_VAR",
    "SeriesError",
    "SplitstatError",
    "SplittingMeasure",
    "StableLimit",
    "UPoly",
    "U_VAR",
    "UnknownStatistic",
    "VIA_MEASURE",
    "VIA_PHI_SIGNED",
    "VIA_PSI",
    "VariableTagMismatch",
    "builtin",
    "builtin_names",
    "builtin_polynomial",
    "census",
    "decompose",
    "divmod_poly",
    "eval_q1",
    "even_type",
    "expected",
    "expected_sf",
    "factorization_type",
    "format_rational",
    "indicator",
    "inner",
    "irr_dim",
    "irreducible_character",
    "irreducibles",
    "make_field",
    "mn_character",
    "monomial",
    "necklace",
    "one",
    "over_q_power",
    "parse_character_polynomial",
    "parse_rational",
    "partitions_of",
    "phi_table",
    "poly",
    "psi_table",
    "q_limit_closed_form",
    "quadratic_excess",
    "reconstruct",
    "regular_check",
    "roots",
    "series_expand",
    "sf_splitting_measure",
    "sgn",
    "splitting_measure",
    "stable_limit",
    "trivial_coeff",
    "type_counts",
]
