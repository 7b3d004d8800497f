"""Bounded-error special functions and verification of a cotangent-zeta-digamma inequality."""

from .grid import GridSpec, Refinement
from .inequality import (
    certify_theorem1,
    monotonicity_check,
    scan_conjecture,
    squeeze_chain,
    theorem_margin,
    verify_theorem1,
)
from .numerics import (
    BoundedValue,
    ConvergenceError,
    DomainError,
    PoleError,
    SingularityError,
    constants,
    euler_gamma,
)
from .replicative import CATALOG, KubertCandidate, fourier_coefficients, replicative_test
from .special import ZetaRoute, cot_pi, digamma, polylog_unit_circle, zeta, zeta_regularized

__version__ = "0.1.0"

__all__ = [
    "BoundedValue",
    "CATALOG",
    "ConvergenceError",
    "DomainError",
    "GridSpec",
    "KubertCandidate",
    "PoleError",
    "Refinement",
    "SingularityError",
    "ZetaRoute",
    "certify_theorem1",
    "constants",
    "cot_pi",
    "digamma",
    "euler_gamma",
    "fourier_coefficients",
    "monotonicity_check",
    "polylog_unit_circle",
    "replicative_test",
    "scan_conjecture",
    "squeeze_chain",
    "theorem_margin",
    "verify_theorem1",
    "zeta",
    "zeta_regularized",
]
