"""Truncated spin-boson models with a diagonal similarity metric."""

from ._core import (
    BogoliubovReduction,
    ContractError,
    ConvergenceSettings,
    CriticalData,
    EigenSolution,
    GeneralOrderParams,
    MetricFactors,
    ModelParams,
    NumericalError,
    ScanRecord,
    SpectralComparison,
    SweepSpec,
    TCBlockSolution,
    ValidationError,
    ValidationReport,
    analytic_order_params_dicke,
    analytic_order_params_general,
    analytic_order_params_tc,
    build_hamiltonian,
    build_image,
    compare_spectra,
    critical_data,
    exact_spectrum,
    finite_j_order_params,
    flatten_spectrum,
    hermitian_dicke,
    jaynes_cummings,
    metric_factors,
    nonhermitian_dicke,
    pseudo_hermiticity_residual,
    reduce,
    scan,
    solve_eigensystem,
    standard_dicke,
    swanson,
    swanson_spectrum,
    tavis_cummings,
    trivial_reduction,
    validate,
    with_tc_constraint,
)

__all__ = [
    "BogoliubovReduction",
    "ContractError",
    "ConvergenceSettings",
    "CriticalData",
    "EigenSolution",
    "GeneralOrderParams",
    "MetricFactors",
    "ModelParams",
    "NumericalError",
    "ScanRecord",
    "SpectralComparison",
    "SweepSpec",
    "TCBlockSolution",
    "ValidationError",
    "ValidationReport",
    "analytic_order_params_dicke",
    "analytic_order_params_general",
    "analytic_order_params_tc",
    "build_hamiltonian",
    "build_image",
    "compare_spectra",
    "critical_data",
    "exact_spectrum",
    "finite_j_order_params",
    "flatten_spectrum",
    "hermitian_dicke",
    "jaynes_cummings",
    "metric_factors",
    "nonhermitian_dicke",
    "pseudo_hermiticity_residual",
    "reduce",
    "scan",
    "solve_eigensystem",
    "standard_dicke",
    "swanson",
    "swanson_spectrum",
    "tavis_cummings",
    "trivial_reduction",
    "validate",
    "with_tc_constraint",
]

__version__ = "0.1.0"
