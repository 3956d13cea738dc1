"""Quantum-vacuum photon production from a dielectric bubble.

Mode mixing between a bubble-in-fluid quantisation and a homogeneous-fluid
quantisation creates photon pairs; this package evaluates the mixing kernel
|beta|^2, the emitted spectrum and totals, the closed-form large-volume and
static Casimir cross-checks, adiabatic suppression, and the photon-pair
counting statistics that distinguish squeezed from thermal light.
"""

__version__ = "0.1.0"

from .analytic import (
    AnalyticResult,
    analytic_dn_domega,
    analytic_result,
    analytic_total_energy,
    analytic_total_number,
    dispersion_casimir_energy,
    dispersion_casimir_energy_quadrature,
    schwinger_casimir_energy,
)
from .bogolubov import BetaKernel, beta_squared, beta_squared_term, kernel_prefactor
from .errors import NumericalDegeneracyError, QuadratureError, TruncationError
from .modes import InModeCoefficients, out_mode_value, solve_matching
from .photonstats import (
    KIND_SQUEEZED,
    KIND_THERMAL,
    PairEnsemble,
    sample,
    theoretical_variance,
    variance_nab,
    variance_nab_expansion,
)
from .specfun import (
    HalfIntOrder,
    bessel_j,
    bessel_j_prime,
    bessel_n,
    bessel_n_prime,
    cross_wronskian_ratio,
)
from .spectrum import GridSpec, Spectrum, build_grid, dn_domega, scan, shape_distance
from .suppression import TimescaleModel, apply_suppression, suppression_factor
from .units import BubbleConfig

__all__ = [
    "__version__",
    "AnalyticResult",
    "BetaKernel",
    "BubbleConfig",
    "GridSpec",
    "HalfIntOrder",
    "InModeCoefficients",
    "KIND_SQUEEZED",
    "KIND_THERMAL",
    "NumericalDegeneracyError",
    "PairEnsemble",
    "QuadratureError",
    "Spectrum",
    "TimescaleModel",
    "TruncationError",
    "analytic_dn_domega",
    "analytic_result",
    "analytic_total_energy",
    "analytic_total_number",
    "apply_suppression",
    "bessel_j",
    "bessel_j_prime",
    "bessel_n",
    "bessel_n_prime",
    "beta_squared",
    "beta_squared_term",
    "build_grid",
    "cross_wronskian_ratio",
    "dispersion_casimir_energy",
    "dispersion_casimir_energy_quadrature",
    "dn_domega",
    "kernel_prefactor",
    "out_mode_value",
    "sample",
    "scan",
    "schwinger_casimir_energy",
    "shape_distance",
    "solve_matching",
    "suppression_factor",
    "theoretical_variance",
    "variance_nab",
    "variance_nab_expansion",
]
