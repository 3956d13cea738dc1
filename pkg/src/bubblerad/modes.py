"""Radial eigenmode matching across the bubble wall.

An in-state mode of frequency w is J_nu(w r) inside the bubble (interior
index 1) and B J_nu(n w r) + C N_nu(n w r) outside.  Continuity of the mode
and of its radial derivative at r = R fixes (A, B, C) up to overall scale;
the scale is pinned by B^2 + C^2 = 1, which gives the in-mode the same
exterior asymptotic amplitude as the out-modes J_nu(n w r).  Signs follow
B >= 0 (C >= 0 if B vanishes).

The 2x2 exterior system is solved in closed form; its determinant is the
exact Bessel Wronskian n * W[J_nu, N_nu](n w R) = 2/(pi w R), so the system
is never singular and the analytic value is used directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import NumericalDegeneracyError
from .specfun import BesselTables, HalfIntOrder
from .units import BubbleConfig

__all__ = [
    "InModeCoefficients",
    "solve_matching",
    "matching_residuals",
    "interior_amplitude_sq_all",
    "out_mode_value",
]


@dataclass(frozen=True)
class InModeCoefficients:
    """Matched amplitudes for one in-state radial mode.

    ``A`` multiplies the interior J_nu(w r); ``B`` and ``C`` multiply the
    exterior J_nu(n w r) and N_nu(n w r), normalised to B^2 + C^2 = 1.
    """

    order: HalfIntOrder
    omega_in: float
    A: float
    B: float
    C: float


def _raw_exterior(
    n: float, x1: float, t1: BesselTables, t2: BesselTables
) -> tuple[np.ndarray, np.ndarray]:
    """(B, C) for unit interior amplitude, for every l in the tables.

    Cramer on [J_nu(x2), N_nu(x2); n J'_nu(x2), n N'_nu(x2)] (B, C)^T =
    (J_nu(x1), J'_nu(x1))^T with the exact determinant 2/(pi x1).
    """
    det = 2.0 / (math.pi * x1)
    b_raw = (t1.j * (n * t2.yp) - t2.y * t1.jp) / det
    c_raw = (t2.j * t1.jp - t1.j * (n * t2.jp)) / det
    return b_raw, c_raw


def interior_amplitude_sq_all(
    config: BubbleConfig,
    l_max: int,
    omega_in: float,
    *,
    interior: BesselTables | None = None,
    exterior: BesselTables | None = None,
) -> np.ndarray:
    """|A_nu|^2 for l = 0 .. l_max under the B^2 + C^2 = 1 normalisation.

    Modes whose interior Bessel values underflow at double precision (deep
    centrifugal suppression) get |A|^2 = 0; likewise when the exterior
    Neumann values saturate, 1/(B^2+C^2) degrades to 0.  Both limits are the
    physically correct direction for the kernel sum.
    """
    if omega_in <= 0.0:
        raise ValueError(f"omega_in must be > 0, got {omega_in}")
    n = config.n_outside
    x1 = omega_in * config.radius_R
    t1 = interior if interior is not None else specfun.bessel_tables(l_max, x1)
    t2 = exterior if exterior is not None else specfun.bessel_tables(l_max, n * x1, neumann=True)
    b_raw, c_raw = _raw_exterior(n, x1, t1, t2)
    norm_sq = b_raw * b_raw + c_raw * c_raw
    with np.errstate(divide="ignore"):
        a_sq = np.where(norm_sq > 0.0, 1.0 / norm_sq, 0.0)
    return np.where(np.isfinite(a_sq), a_sq, 0.0)


def solve_matching(
    config: BubbleConfig, order: HalfIntOrder | int, omega_in: float
) -> InModeCoefficients:
    """Solve the wall-matching system for one (l, omega_in)."""
    if omega_in <= 0.0:
        raise ValueError(f"omega_in must be > 0, got {omega_in}")
    order = order if isinstance(order, HalfIntOrder) else HalfIntOrder(int(order))
    l = order.l
    n = config.n_outside
    x1 = omega_in * config.radius_R
    t1 = specfun.bessel_tables(l, x1)
    t2 = specfun.bessel_tables(l, n * x1, neumann=True)
    b_raw, c_raw = _raw_exterior(n, x1, t1, t2)
    b_raw = float(b_raw[l])
    c_raw = float(c_raw[l])
    norm = math.hypot(b_raw, c_raw)
    if norm == 0.0 or not math.isfinite(norm):
        raise NumericalDegeneracyError(
            f"matching system degenerate at l={l}, omega_in={omega_in}: "
            f"|(B,C)| = {norm}",
            residual=norm,
        )
    a, b, c = 1.0 / norm, b_raw / norm, c_raw / norm
    if b < 0.0 or (b == 0.0 and c < 0.0):
        a, b, c = -a, -b, -c
    return InModeCoefficients(order=order, omega_in=float(omega_in), A=a, B=b, C=c)


def matching_residuals(config: BubbleConfig, coeffs: InModeCoefficients) -> tuple[float, float]:
    """Relative residuals of the two matching equations (value, derivative).

    Each residual is normalised by the largest participating term.
    """
    l = coeffs.order.l
    n = config.n_outside
    x1 = coeffs.omega_in * config.radius_R
    t1 = specfun.bessel_tables(l, x1)
    t2 = specfun.bessel_tables(l, n * x1, neumann=True)
    lhs_v = coeffs.A * float(t1.j[l])
    rhs_v1 = coeffs.B * float(t2.j[l])
    rhs_v2 = coeffs.C * float(t2.y[l])
    lhs_d = coeffs.A * coeffs.omega_in * float(t1.jp[l])
    rhs_d1 = coeffs.B * n * coeffs.omega_in * float(t2.jp[l])
    rhs_d2 = coeffs.C * n * coeffs.omega_in * float(t2.yp[l])
    scale_v = max(abs(lhs_v), abs(rhs_v1), abs(rhs_v2))
    scale_d = max(abs(lhs_d), abs(rhs_d1), abs(rhs_d2))
    res_v = abs(lhs_v - rhs_v1 - rhs_v2) / scale_v if scale_v > 0 else 0.0
    res_d = abs(lhs_d - rhs_d1 - rhs_d2) / scale_d if scale_d > 0 else 0.0
    return res_v, res_d


def out_mode_value(
    config: BubbleConfig, order: HalfIntOrder | int, omega_out: float, r: float
) -> float:
    """Out-state radial eigenmode J_nu(n * omega_out * r)."""
    if omega_out <= 0.0:
        raise ValueError(f"omega_out must be > 0, got {omega_out}")
    return specfun.bessel_j(order, config.n_outside * omega_out * r)
