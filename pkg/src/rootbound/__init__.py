"""Exact adelic root bounds for Laurent systems with coefficients in Q[s]."""

from .adelic import (
    BoundReport,
    bound_corrected,
    bound_mainthm,
    bound_unmixed,
    kb_bound,
    lattice_diagnostics,
    positivity_predicate,
    roof,
    vadic_polytope,
)
from .algebra import AS_WRITTEN, COLLAPSED, INF, LaurentSystem, UniPoly, make_system, parse_system
from .concave import ConcavePWA, from_lifted_points, sup_convolution
from .equality import Certificate, equality_certificate, initial_system, slopes_at_place
from .errors import (
    CommonComponent,
    ExtensionFieldNeeded,
    Inconclusive,
    InvalidInput,
    NotPrimitive,
    ParseError,
    RootBoundError,
    UnsupportedDimension,
)
from .mixed import mixed_integral, mixed_volume
from .oracle import OracleResult, count_roots_n1, resultant_t, verify_claimed_root
from .polytope import Polytope, convex_hull, minkowski_sum

__all__ = [
    "AS_WRITTEN",
    "COLLAPSED",
    "INF",
    "BoundReport",
    "Certificate",
    "CommonComponent",
    "ConcavePWA",
    "ExtensionFieldNeeded",
    "Inconclusive",
    "InvalidInput",
    "LaurentSystem",
    "NotPrimitive",
    "OracleResult",
    "ParseError",
    "Polytope",
    "RootBoundError",
    "UniPoly",
    "UnsupportedDimension",
    "bound_corrected",
    "bound_mainthm",
    "bound_unmixed",
    "convex_hull",
    "count_roots_n1",
    "equality_certificate",
    "from_lifted_points",
    "initial_system",
    "kb_bound",
    "lattice_diagnostics",
    "make_system",
    "minkowski_sum",
    "mixed_integral",
    "mixed_volume",
    "parse_system",
    "positivity_predicate",
    "resultant_t",
    "roof",
    "slopes_at_place",
    "sup_convolution",
    "vadic_polytope",
    "verify_claimed_root",
]
