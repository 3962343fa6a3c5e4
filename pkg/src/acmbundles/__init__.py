"""Exact Chern-class calculus for ACM vector bundles on low-degree
hypersurfaces in P^4: Riemann-Roch, twisting, genus, admissibility bounds,
the rank-3/rank-4 invariant tables, and extension-realizability search."""

from .chern import (
    BundleInvariants,
    CurveInvariants,
    DomainError,
    HypersurfaceContext,
    NonIntegral,
    Rational,
    chi_bundle,
    chi_line_bundle,
    genus_general,
    genus_r4,
    require_integer,
    twist,
)
from .constraints import (
    C2Interval,
    EnumerationRow,
    RowEntry,
    c1_bounds,
    c2_interval_r4,
    c2_upper_general,
    c3_from_acm,
    enumerate_acm_r4,
    genus_from_acm,
    hs_sufficient_condition,
)
from .extensions import (
    BUILTIN_CATALOG,
    Catalog,
    CatalogParseError,
    CoverageItem,
    CoverageReport,
    ExtensionWitness,
    GlobalGeneration,
    Rank2CatalogEntry,
    RankUnsupported,
    UnsupportedDegree,
    catalog,
    coverage_report,
    decompose,
    distinct_quadruples,
    extend_rank2,
    extension_quadruples,
    load_catalog,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BundleInvariants",
    "CurveInvariants",
    "DomainError",
    "HypersurfaceContext",
    "NonIntegral",
    "Rational",
    "chi_bundle",
    "chi_line_bundle",
    "genus_general",
    "genus_r4",
    "require_integer",
    "twist",
    "C2Interval",
    "EnumerationRow",
    "RowEntry",
    "c1_bounds",
    "c2_interval_r4",
    "c2_upper_general",
    "c3_from_acm",
    "enumerate_acm_r4",
    "genus_from_acm",
    "hs_sufficient_condition",
    "BUILTIN_CATALOG",
    "Catalog",
    "CatalogParseError",
    "CoverageItem",
    "CoverageReport",
    "ExtensionWitness",
    "GlobalGeneration",
    "Rank2CatalogEntry",
    "RankUnsupported",
    "UnsupportedDegree",
    "catalog",
    "coverage_report",
    "decompose",
    "distinct_quadruples",
    "extend_rank2",
    "extension_quadruples",
    "load_catalog",
]
