"""Adiabatic suppression of the emitted spectrum.

A refractive-index change over a timescale tau suppresses production of a
mode at frequency w by exp(-w * tau): fast changes (w tau << 1) convert
vacuum fluctuations efficiently, slow ones do not.  The factor is applied
to the number spectrum; whether it belongs on the amplitude instead is a
factor-of-two-in-the-exponent ambiguity, documented here and left on the
number-spectrum side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import units
from .spectrum import Spectrum

__all__ = ["TimescaleModel", "suppression_factor", "apply_suppression"]


@dataclass(frozen=True)
class TimescaleModel:
    """Refractive-index change timescale, in internal units (um, c = 1)."""

    tau: float
    description: str = ""

    def __post_init__(self) -> None:
        if self.tau < 0.0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")

    @classmethod
    def from_femtoseconds(cls, tau_fs: float, description: str = "") -> "TimescaleModel":
        return cls(tau=units.time_to_internal(tau_fs * 1e-15), description=description)


def suppression_factor(omega: float, tau_internal: float) -> float:
    """exp(-w tau) in [0, 1]; both arguments in internal units."""
    if omega < 0.0:
        raise ValueError(f"omega must be >= 0, got {omega}")
    if tau_internal < 0.0:
        raise ValueError(f"tau must be >= 0, got {tau_internal}")
    return math.exp(-omega * tau_internal)


def apply_suppression(spectrum: Spectrum, model: TimescaleModel) -> Spectrum:
    """Pointwise-suppressed copy of a spectrum with totals re-integrated.

    At tau = 0 this is the identity (factor 1 everywhere); composing two
    applications multiplies the exponents: tau1 then tau2 equals tau1+tau2.
    """
    factor = np.exp(-spectrum.omega_grid * model.tau)
    dn = spectrum.dn_domega * factor
    report = dict(spectrum.quadrature_report)
    report["suppression_tau_internal"] = model.tau
    return Spectrum(
        omega_grid=spectrum.omega_grid,
        dn_domega=dn,
        total_n=float(np.trapezoid(dn, spectrum.omega_grid)),
        total_e=float(np.trapezoid(dn * spectrum.omega_grid, spectrum.omega_grid)),
        quadrature_report=report,
    )
