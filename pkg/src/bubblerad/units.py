"""Natural-unit conventions, frozen constants, and the bubble scenario config.

Everything downstream of the CLI works in natural units: c = hbar = 1 and
lengths in micrometres.  Frequencies, wavenumbers, energies and inverse
times are then all measured in 1/um, and times in um.  SI enters only
through the conversion helpers below, which the CLI applies at its
boundaries.

Frozen constants (CODATA 2018 / exact SI definitions):

    C_M_PER_S     speed of light, exact by SI definition
    HBAR_C_EV_UM  hbar*c in eV*um (197.3269804 MeV*fm)
    EV_J          electronvolt in joules, exact by SI definition
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

C_M_PER_S = 299_792_458.0
HBAR_C_EV_UM = 0.197_326_980_4
EV_J = 1.602_176_634e-19

#: metres per internal length unit
LENGTH_UNIT_M = 1.0e-6


def omega_to_internal(omega_si: float) -> float:
    """Angular frequency [rad/s] -> internal frequency [1/um].

    Multiplies by (1 um)/c.  Raises ``ValueError`` for negative input.
    """
    if omega_si < 0.0:
        raise ValueError(f"angular frequency must be >= 0, got {omega_si}")
    return omega_si * LENGTH_UNIT_M / C_M_PER_S


def omega_to_si(omega_internal: float) -> float:
    """Internal frequency [1/um] -> angular frequency [rad/s]."""
    if omega_internal < 0.0:
        raise ValueError(f"frequency must be >= 0, got {omega_internal}")
    return omega_internal * C_M_PER_S / LENGTH_UNIT_M


def energy_to_ev(e_internal: float) -> float:
    """Internal energy [1/um] -> energy [eV] (multiplies by hbar*c / 1 um)."""
    return e_internal * HBAR_C_EV_UM


def energy_from_ev(e_ev: float) -> float:
    """Energy [eV] -> internal energy [1/um]."""
    return e_ev / HBAR_C_EV_UM


def time_to_internal(t_si: float) -> float:
    """Time [s] -> internal time [um] (multiplies by c / 1 um)."""
    if t_si < 0.0:
        raise ValueError(f"time must be >= 0, got {t_si}")
    return t_si * C_M_PER_S / LENGTH_UNIT_M


def time_from_internal(t_internal: float) -> float:
    """Internal time [um] -> time [s]."""
    if t_internal < 0.0:
        raise ValueError(f"time must be >= 0, got {t_internal}")
    return t_internal * LENGTH_UNIT_M / C_M_PER_S


def wavelength_to_cutoff(lambda_um: float) -> float:
    """Cutoff wavelength [um] -> cutoff wavenumber K = 2*pi/lambda [rad/um]."""
    if lambda_um <= 0.0:
        raise ValueError(f"wavelength must be > 0, got {lambda_um}")
    return 2.0 * math.pi / lambda_um


@dataclass(frozen=True)
class BubbleConfig:
    """Physical scenario: a vacuum-like bubble inside a uniform dielectric.

    Attributes:
        n_inside:  refractive index of the bubble interior (air ~ 1).
        n_outside: refractive index of the surrounding fluid.
        radius_R:  bubble radius in um.
        cutoff_K:  wavenumber [rad/um] above which both media look like
                   vacuum; a physical condensed-matter scale, not a
                   regularisation parameter.
        label:     free-text tag carried into manifests.
    """

    n_outside: float
    radius_R: float
    cutoff_K: float
    n_inside: float = 1.0
    label: str = ""

    def __post_init__(self) -> None:
        if not (self.n_inside >= 1.0):
            raise ValueError(f"n_inside must be >= 1, got {self.n_inside}")
        if not (self.n_outside >= 1.0):
            raise ValueError(f"n_outside must be >= 1, got {self.n_outside}")
        if not (self.radius_R > 0.0):
            raise ValueError(f"radius_R must be > 0, got {self.radius_R}")
        if not (self.cutoff_K > 0.0):
            raise ValueError(f"cutoff_K must be > 0, got {self.cutoff_K}")

    @property
    def eps_inside(self) -> float:
        return self.n_inside**2

    @property
    def eps_outside(self) -> float:
        return self.n_outside**2
