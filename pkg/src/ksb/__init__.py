"""Exact spectral and rank bounds for vector families with constrained
pairwise Hamming distances, with brute-force oracles and extremal
constructions sandwiching every bound.

All arithmetic is exact (arbitrary-precision integers); a compiled extension
accelerates the hot kernels when available, with a pure-Python fallback
selected automatically at import.
"""

from .bounds import (
    BoundReport,
    consecutive_closed_form,
    cvetkovic_bound,
    frankl_wilson_form,
    kleitman_closed_form,
    parity_bound,
    report_from_json,
    report_to_json,
)
from .clp import (
    F2Matrix,
    build_divisibility_matrix,
    build_kleitman_matrix,
    clp_degree_bound,
    divisibility_bound,
    f2_rank,
    lucas_binomial_mod,
)
from .constructions import (
    Construction,
    hamming_ball,
    lemma5_bound,
    packing_family,
    pair_chain_bound,
    prism,
    validate_family,
)
from .errors import DomainError, ResourceLimitError
from .intmath import (
    ClosedFormSeries,
    LaurentPoly,
    binomial,
    consecutive_series,
    constant_term,
    kleitman_even_series,
    kleitman_odd_series,
)
from .intersective import (
    EigSignCount,
    FpParams,
    closed_form_bound,
    exact_sign_count,
    spectral_bound_fp,
    stratified_pair_count,
)
from .kernels import BACKEND as kernel_backend
from .oracle import (
    CompatGraph,
    VectorFamily,
    build_compat_graph,
    max_clique,
    oracle_exact,
    oracle_fp_exact,
)
from .spectrum import (
    KrawtchoukTable,
    SpectrumSummary,
    krawtchouk_table,
    verify_fourier_eigenvectors,
    weighted_spectrum,
)
from .weights import (
    DistanceSet,
    WeightScheme,
    consecutive_scheme,
    custom_scheme,
    distance_set,
    kleitman_even,
    kleitman_odd,
    scheme_for_diameter,
    validate_support,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ClosedFormSeries",
    "CompatGraph",
    "Construction",
    "DistanceSet",
    "DomainError",
    "EigSignCount",
    "F2Matrix",
    "FpParams",
    "KrawtchoukTable",
    "LaurentPoly",
    "ResourceLimitError",
    "SpectrumSummary",
    "VectorFamily",
    "WeightScheme",
    "binomial",
    "build_compat_graph",
    "build_divisibility_matrix",
    "build_kleitman_matrix",
    "closed_form_bound",
    "clp_degree_bound",
    "consecutive_closed_form",
    "consecutive_scheme",
    "consecutive_series",
    "constant_term",
    "custom_scheme",
    "cvetkovic_bound",
    "distance_set",
    "divisibility_bound",
    "exact_sign_count",
    "f2_rank",
    "frankl_wilson_form",
    "hamming_ball",
    "kernel_backend",
    "kleitman_closed_form",
    "kleitman_even",
    "kleitman_even_series",
    "kleitman_odd",
    "kleitman_odd_series",
    "krawtchouk_table",
    "lemma5_bound",
    "lucas_binomial_mod",
    "max_clique",
    "oracle_exact",
    "oracle_fp_exact",
    "packing_family",
    "pair_chain_bound",
    "parity_bound",
    "prism",
    "report_from_json",
    "report_to_json",
    "scheme_for_diameter",
    "spectral_bound_fp",
    "stratified_pair_count",
    "validate_family",
    "validate_support",
    "verify_fourier_eigenvectors",
    "weighted_spectrum",
]
