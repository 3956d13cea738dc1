"""Closed-form results: static Casimir energies and the large-volume limit.

Two static zero-point energy accounts of the same configuration change
(all in natural units, hbar = c = 1, energies in 1/um):

    cavity energy      E = R^3 K^4 / (6 pi) * (1/n_in - 1/n_out)
    dispersion form    E = V/(2 pi^2) * integral k^2 [w_in(k) - w_out(k)] dk

with w(k) = k/n below the cutoff K and k above it, V = (4/3) pi R^3.  The
two are algebraically identical; the quadrature route is kept as an
independent check.

The large-volume (R -> infinity) radiated spectrum is pure phase space up
to the cutoff,

    dN/dw = n^2 ((n-1)/n)^2 R^3 w^2 / (2 pi) * Theta(K - n w),

whose integrals give

    N = ((n-1)/n)^2 (R K)^3 / (6 pi n)
    E = ((n-1)/n)^2 K (R K)^3 / (8 pi n^2).

Note the radiated energy is second order in (n-1) while the static cavity
energy is first order: only a fraction of the static budget converts to
photons.  These closed forms are the oracles for the finite-volume kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate

from .units import BubbleConfig

__all__ = [
    "AnalyticResult",
    "schwinger_casimir_energy",
    "dispersion_casimir_energy",
    "dispersion_casimir_energy_quadrature",
    "analytic_dn_domega",
    "analytic_total_number",
    "analytic_total_energy",
    "analytic_result",
]


@dataclass(frozen=True)
class AnalyticResult:
    """Large-volume photon totals plus the formula tag they came from."""

    photon_number: float
    energy: float
    provenance: str

    def __post_init__(self) -> None:
        if self.photon_number < 0.0 or self.energy < 0.0:
            raise ValueError("photon number and energy must be >= 0")


def schwinger_casimir_energy(config: BubbleConfig) -> float:
    """Static cavity energy (1/6pi) R^3 K^4 (1/sqrt(eps_in) - 1/sqrt(eps_out))."""
    r3k4 = config.radius_R**3 * config.cutoff_K**4
    return r3k4 / (6.0 * math.pi) * (1.0 / config.n_inside - 1.0 / config.n_outside)


def dispersion_casimir_energy(config: BubbleConfig) -> float:
    """Zero-point energy difference of the two dispersion relations (closed form)."""
    r3k4 = config.radius_R**3 * config.cutoff_K**4
    return r3k4 / (6.0 * math.pi) * (1.0 / config.n_inside - 1.0 / config.n_outside)


def dispersion_casimir_energy_quadrature(config: BubbleConfig) -> float:
    """Same zero-point difference, evaluated by quadrature of the k-integral.

    E = 2V int d^3k/(2pi)^3 (1/2)[w_in(k) - w_out(k)]; the integrand
    vanishes identically above K where both media disperse like vacuum.
    """
    volume = 4.0 / 3.0 * math.pi * config.radius_R**3
    n_in, n_out = config.n_inside, config.n_outside

    def integrand(k: float) -> float:
        return k * k * (k / n_in - k / n_out)

    val, _ = integrate.quad(integrand, 0.0, config.cutoff_K, epsabs=0.0, epsrel=1e-12)
    return volume / (2.0 * math.pi**2) * val


def _require_vacuum_interior(config: BubbleConfig) -> None:
    if config.n_inside != 1.0:
        raise ValueError(
            "large-volume spectrum formulas assume a vacuum-like interior "
            f"(n_inside = 1), got n_inside = {config.n_inside}"
        )


def analytic_dn_domega(config: BubbleConfig, omega_out: float) -> float:
    """Phase-space spectral density, zero above the cutoff n*w = K."""
    if omega_out <= 0.0:
        raise ValueError(f"omega_out must be > 0, got {omega_out}")
    _require_vacuum_interior(config)
    n = config.n_outside
    if n * omega_out > config.cutoff_K:
        return 0.0
    return n**2 * ((n - 1.0) / n) ** 2 * config.radius_R**3 * omega_out**2 / (2.0 * math.pi)


def analytic_total_number(config: BubbleConfig) -> float:
    """N = ((n-1)/n)^2 (RK)^3 / (6 pi n)."""
    _require_vacuum_interior(config)
    n = config.n_outside
    rk = config.radius_R * config.cutoff_K
    return ((n - 1.0) / n) ** 2 * rk**3 / (6.0 * math.pi * n)


def analytic_total_energy(config: BubbleConfig) -> float:
    """E = (1/(8 pi n^2)) ((n-1)/n)^2 K (RK)^3 in internal units (hbar = c = 1)."""
    _require_vacuum_interior(config)
    n = config.n_outside
    rk = config.radius_R * config.cutoff_K
    return ((n - 1.0) / n) ** 2 * config.cutoff_K * rk**3 / (8.0 * math.pi * n * n)


def analytic_result(config: BubbleConfig) -> AnalyticResult:
    """Bundle of the large-volume totals."""
    return AnalyticResult(
        photon_number=analytic_total_number(config),
        energy=analytic_total_energy(config),
        provenance="large-volume phase-space limit",
    )
