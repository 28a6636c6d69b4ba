"""Census and classification of Perron polynomials and bi-Perron algebraic
units, with root-localization certificates and growth-law diagnostics."""

__version__ = "0.1.0"

from .asymptotics import (
    ExponentFit,
    RegionEstimate,
    count_lattice_in_U,
    fit_exponent,
    genus_threshold,
    geodesic_growth,
    log_ratio_bound,
    ratio_bound,
    sample_region_U,
)
from .census import (
    BudgetExceededError,
    CensusRecord,
    CensusSpec,
    bi_perron_unit_set,
    enumerate_bi_perron_census,
    enumerate_perron_census,
    factor_pair_bound,
    reducible_fraction,
    run_census,
)
from .classify import (
    Classification,
    UndecidedIrreducibilityError,
    Verdict,
    classify,
    factor_monic,
    is_bi_perron_unit,
    is_irreducible,
    is_perron_poly,
)
from .poly import (
    IntPolynomial,
    TraceLiftPair,
    char_palindromic_poly,
    inverse_trace_lift,
    is_palindromic,
    multiply,
    negate_variable,
    reciprocal,
    trace_lift,
)
from .roots import (
    RootFindingError,
    RootProfile,
    RoucheCertificate,
    find_roots,
    rouche_certificate,
    spectral_radius,
)

__all__ = [
    "__version__",
    "BudgetExceededError", "CensusRecord", "CensusSpec", "Classification",
    "ExponentFit", "IntPolynomial", "RegionEstimate", "RootFindingError",
    "RootProfile", "RoucheCertificate", "TraceLiftPair",
    "UndecidedIrreducibilityError", "Verdict", "bi_perron_unit_set",
    "char_palindromic_poly", "classify", "count_lattice_in_U",
    "enumerate_bi_perron_census", "enumerate_perron_census", "factor_monic",
    "factor_pair_bound", "find_roots", "fit_exponent", "genus_threshold",
    "geodesic_growth", "inverse_trace_lift", "is_bi_perron_unit",
    "is_irreducible", "is_palindromic", "is_perron_poly", "log_ratio_bound",
    "multiply", "negate_variable", "ratio_bound", "reciprocal",
    "reducible_fraction", "rouche_certificate", "run_census",
    "sample_region_U", "spectral_radius", "trace_lift",
]
