from .factor import CoprimeFactorization, coprime_factorization
from .laurent import (
    AS_WRITTEN,
    COLLAPSED,
    LaurentSystem,
    LaurentTerm,
    collapse,
    content,
    evaluate_at_s,
    evaluate_point,
    format_system,
    is_primitive,
    make_system,
    parse_system,
)
from .upoly import (
    INF,
    UniPoly,
    format_rational,
    initial_coeff,
    ord_at,
    ord_inf,
    ord_place,
    upoly_gcd,
)

__all__ = [
    "AS_WRITTEN",
    "COLLAPSED",
    "CoprimeFactorization",
    "INF",
    "LaurentSystem",
    "LaurentTerm",
    "UniPoly",
    "collapse",
    "content",
    "coprime_factorization",
    "evaluate_at_s",
    "evaluate_point",
    "format_rational",
    "format_system",
    "initial_coeff",
    "is_primitive",
    "make_system",
    "ord_at",
    "ord_inf",
    "ord_place",
    "parse_system",
    "upoly_gcd",
]
