"""Weighted analytic-function space toolkit.

Core objects: truncated power series, the weighted coefficient spaces
(hardy, bergman, h21, h22) with their reproducing kernels, truncated
matrices of multiplication / composition / weighted-composition operators,
transpose-symmetry tests, and deterministic verification suites for the
quantitative inequalities of the h22 space.
"""

from .series import (
    SeriesOpConfig,
    SupNormEstimate,
    TruncatedSeries,
    cauchy_product,
    compose,
    differentiate,
    divide,
    evaluate,
    linear_combine,
    power,
    sup_norm_estimate,
)
from .spaces import (
    BERGMAN,
    H21,
    H22,
    HARDY,
    SPACES,
    NormComponents,
    SpaceWeights,
    basis_vector,
    default_kernel_order,
    gram_matrix,
    inner_product,
    kernel_series,
    norm,
    norm_sq,
    norm_sq_components,
    space_by_name,
)
from .operators import (
    HsPartialSum,
    OperatorMatrix,
    adjoint,
    composition_matrix,
    hs_partial_curve,
    hs_partial_sum,
    multiplication_matrix,
    operator_norm_estimate,
    weighted_composition_matrix,
)
from .symmetry import (
    SymbolParams,
    Z3wComparison,
    apply_J,
    build_p_q,
    c_expansion,
    default_grid,
    kernel_identity_residual,
    symbols_from_params,
    symmetry_residual,
    z3w_coefficient_check,
)
from .harness import (
    SUITE_IDS,
    CheckReport,
    Constants,
    TailBound,
    check_hs,
    check_inclusion_example,
    check_multiplier_bounds,
    check_product_inequality,
    check_supnorm_bound,
    compute_constants,
    random_polynomial,
    random_self_map,
    run_suite,
    tail_bound,
    zeta,
)

__version__ = "0.1.0"
