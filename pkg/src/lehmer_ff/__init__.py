"""Totients over F_q[x], cyclotomic integers, and divisibility sweeps."""

from .cyclo import (
    DEFAULT_FACTORING_BUDGET,
    IntPoly,
    ZsigmondyResult,
    cyclotomic,
    cyclotomic_eval,
    has_primitive_divisor,
    ord_p,
    primitive_part,
    zsigmondy,
)
from .errors import (
    CannotFactorZero,
    DivisionByZero,
    FactoringBudgetExceeded,
    FieldMismatch,
    InvalidDegree,
    InvalidInput,
    InvalidModulus,
    InvalidPrime,
    LehmerFFError,
    OracleOverflow,
    ParseError,
    PrecisionAlert,
    UndefinedGcd,
    UndefinedValuation,
    VerificationError,
)
from .ffield import FieldElement, FieldSpec, field_from_order, field_inv, field_make
from .fpoly import (
    NEG_INF,
    Factorization,
    Poly,
    enumerate_polys,
    factor,
    format_poly,
    irreducible_count,
    irreducibles,
    is_irreducible,
    parse_poly,
    poly_gcd,
    poly_powmod,
)
from .lehmer_search import (
    ExponentMap,
    Partition,
    abundancy,
    c_factor,
    candidate_degrees,
    classify_a_ge_3,
    exponent_map,
    mersenne_divisibility,
    partitions_of,
    verify_prop36,
)
from .totient import (
    TotientReport,
    is_lehmer,
    lehmer_set,
    totient,
    totient_bruteforce,
    totient_report,
)

__version__ = "0.1.0"

__all__ = [
    "CannotFactorZero",
    "DEFAULT_FACTORING_BUDGET",
    "DivisionByZero",
    "ExponentMap",
    "Factorization",
    "FactoringBudgetExceeded",
    "FieldElement",
    "FieldMismatch",
    "FieldSpec",
    "IntPoly",
    "InvalidDegree",
    "InvalidInput",
    "InvalidModulus",
    "InvalidPrime",
    "LehmerFFError",
    "NEG_INF",
    "OracleOverflow",
    "ParseError",
    "Partition",
    "Poly",
    "PrecisionAlert",
    "TotientReport",
    "UndefinedGcd",
    "UndefinedValuation",
    "VerificationError",
    "ZsigmondyResult",
    "abundancy",
    "c_factor",
    "candidate_degrees",
    "classify_a_ge_3",
    "cyclotomic",
    "cyclotomic_eval",
    "enumerate_polys",
    "exponent_map",
    "factor",
    "field_from_order",
    "field_inv",
    "field_make",
    "format_poly",
    "has_primitive_divisor",
    "irreducible_count",
    "irreducibles",
    "is_irreducible",
    "is_lehmer",
    "lehmer_set",
    "mersenne_divisibility",
    "ord_p",
    "parse_poly",
    "partitions_of",
    "poly_gcd",
    "poly_powmod",
    "primitive_part",
    "totient",
    "totient_bruteforce",
    "totient_report",
    "verify_prop36",
    "zsigmondy",
]
