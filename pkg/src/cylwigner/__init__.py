"""Wigner quasiprobability functions for the canonical angle /
orbital-angular-momentum pair on the cylinder phase space S^1 x R and its
two-mode extension on S^1 x S^1 x R^2.

Three independent evaluation routes are provided for every state: explicit
closed forms for the parametrized families, the exact sparse bilinear
kernel sum, and a direct quadrature of the defining angular-offset
integral.  The hot kernels run on a compiled core when the optional
extension is built, with a pure-NumPy fallback selected at import time
(see :data:`BACKEND`).
"""

from ._backend import BACKEND
from .closedforms import (
    bell_family_wigner,
    bell_family_wigner_arrays,
    bell_wigner,
    bell_wigner_arrays,
    density_wigner,
    density_wigner_arrays,
    interference_argument,
    invert_interference,
    qubit_wigner,
    qubit_wigner_arrays,
    spiral_period,
    spiral_samples,
    spiral_slopes,
    two_qubit_wigner,
    two_qubit_wigner_arrays,
)
from .errors import (
    CylWignerError,
    DegenerateModes,
    DuplicateMode,
    InvalidBlochVector,
    InvalidGrid,
    NonNormalizedState,
    NumericalHermiticityViolation,
    QuadratureNotConverged,
    StateParseError,
    SubspaceMismatch,
    ZeroMode,
)
from .grids import GridAxis, GridResult, PhaseGrid, evaluate_grid, negativity_scan
from .kernel import (
    KernelElement,
    PhasePoint,
    PhasePoint4,
    evaluate_bilinear_1d,
    evaluate_bilinear_2d,
    kernel_element,
    reduce_angle,
    sinc_pi,
    wigner_bilinear_1d,
    wigner_bilinear_2d,
)
from .marginals import (
    WhittakerProfile,
    angle_integrated_profile,
    density_overlap,
    extract_oam_probabilities,
    marginal_angle,
    marginal_momentum,
    momentum_integrated_density,
    normalization_integral,
    transition_probability_direct,
    transition_probability_phase_space,
    whittaker_profile,
)
from .oracle import (
    OracleEstimate,
    SincIdentityReport,
    oracle_wigner_1d,
    oracle_wigner_1d_detailed,
    oracle_wigner_2d,
    oracle_wigner_2d_detailed,
    verify_sinc_identities,
)
from .states import (
    BELL_KINDS,
    BellSpec,
    BlochDensity,
    GeneralState,
    QubitSpec,
    TwoModeState,
    TwoQubitSpec,
    WindingDecomposition,
    bell_family_state,
    bell_state,
    decompose_winding,
    density_from_qubit,
    expectation_L,
    product_state,
    qubit_from_state,
    qubit_to_state,
    state_from_json,
    state_to_json,
    two_qubit_to_state,
    uniform_qudit,
)
from .verification import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BELL_KINDS",
    "BellSpec",
    "BlochDensity",
    "CylWignerError",
    "DegenerateModes",
    "DuplicateMode",
    "GeneralState",
    "GridAxis",
    "GridResult",
    "InvalidBlochVector",
    "InvalidGrid",
    "KernelElement",
    "NonNormalizedState",
    "NumericalHermiticityViolation",
    "OracleEstimate",
    "PhaseGrid",
    "PhasePoint",
    "PhasePoint4",
    "QuadratureNotConverged",
    "QubitSpec",
    "SincIdentityReport",
    "StateParseError",
    "SubspaceMismatch",
    "TwoModeState",
    "TwoQubitSpec",
    "VerificationReport",
    "WhittakerProfile",
    "WindingDecomposition",
    "ZeroMode",
    "angle_integrated_profile",
    "bell_family_state",
    "bell_family_wigner",
    "bell_family_wigner_arrays",
    "bell_state",
    "bell_wigner",
    "bell_wigner_arrays",
    "decompose_winding",
    "density_from_qubit",
    "density_overlap",
    "density_wigner",
    "density_wigner_arrays",
    "evaluate_bilinear_1d",
    "evaluate_bilinear_2d",
    "evaluate_grid",
    "expectation_L",
    "extract_oam_probabilities",
    "interference_argument",
    "invert_interference",
    "kernel_element",
    "marginal_angle",
    "marginal_momentum",
    "momentum_integrated_density",
    "negativity_scan",
    "normalization_integral",
    "oracle_wigner_1d",
    "oracle_wigner_1d_detailed",
    "oracle_wigner_2d",
    "oracle_wigner_2d_detailed",
    "product_state",
    "qubit_from_state",
    "qubit_to_state",
    "qubit_wigner",
    "qubit_wigner_arrays",
    "reduce_angle",
    "run_verification",
    "sinc_pi",
    "spiral_period",
    "spiral_samples",
    "spiral_slopes",
    "state_from_json",
    "state_to_json",
    "transition_probability_direct",
    "transition_probability_phase_space",
    "two_qubit_to_state",
    "two_qubit_wigner",
    "two_qubit_wigner_arrays",
    "uniform_qudit",
    "verify_sinc_identities",
    "whittaker_profile",
    "wigner_bilinear_1d",
    "wigner_bilinear_2d",
]
