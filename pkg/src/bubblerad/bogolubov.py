"""Squared Bogolubov coefficient |beta(w_in, w_out)|^2 for the bubble.

The mode-pair mixing density between the bubble ("in") and homogeneous
("out") quantisations is

    |beta|^2 = [ (n^2-1)/n^2 * w_in^2 R / (w_out + w_in) ]^2
               * sum_nu (2 nu) |A_nu|^2
                 [ W[J_nu(n w_out r), J_nu(w_in r)]_R / ((n w_out)^2 - w_in^2) ]^2

with nu = l + 1/2 and A_nu from the wall matching.  The oscillatory phase
exp(i (w_out + w_in) t) of the underlying amplitude has unit modulus and is
dropped here; do not reintroduce it.

Above the physical cutoff the media are vacuum-like and no mixing occurs:
the kernel is defined as exactly 0 when n * w_out > K (sharp cutoff).

The l-sum is truncated with a certificate: summation proceeds upward and,
from l_start = ceil(n w_out R) on (the centrifugal-barrier estimate of
where terms turn over), stops once the largest of 3 consecutive terms drops
below rel_tol times the partial sum.  That max is recorded as the tail
bound; past the barrier terms decay super-polynomially, so the bound is
dominated by its first term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import modes, specfun
from .errors import TruncationError
from .specfun import HalfIntOrder
from .units import BubbleConfig

__all__ = [
    "BetaKernel",
    "kernel_prefactor",
    "beta_squared_term",
    "beta_squared",
    "DEFAULT_REL_TOL",
]

#: default certification tolerance for a single kernel evaluation;
#: spectrum scans pass a looser 1e-4 (see spectrum module)
DEFAULT_REL_TOL = 1e-6


@dataclass(frozen=True)
class BetaKernel:
    """One evaluated kernel point with truncation diagnostics."""

    omega_in: float
    omega_out: float
    value: float
    l_used: int
    tail_estimate: float

    def __post_init__(self) -> None:
        if self.value < 0.0:
            raise ValueError(f"|beta|^2 must be >= 0, got {self.value}")


def kernel_prefactor(config: BubbleConfig, omega_in: float, omega_out: float) -> float:
    """[(n^2-1)/n^2 * w_in^2 R / (w_out + w_in)]^2."""
    n = config.n_outside
    base = (n * n - 1.0) / (n * n) * omega_in**2 * config.radius_R / (omega_out + omega_in)
    return base * base


def _term_ladder(
    config: BubbleConfig, l_max: int, omega_in: float, omega_out: float
) -> np.ndarray:
    """Un-prefactored summands (2 nu) |A_nu|^2 ratio_nu^2 for l = 0..l_max."""
    n = config.n_outside
    radius = config.radius_R
    t_in = specfun.bessel_tables(l_max, omega_in * radius)
    t_ext = specfun.bessel_tables(l_max, n * omega_in * radius, neumann=True)
    t_out = specfun.bessel_tables(l_max, n * omega_out * radius)
    a_sq = modes.interior_amplitude_sq_all(
        config, l_max, omega_in, interior=t_in, exterior=t_ext
    )
    ratio = specfun.cross_wronskian_ratio_all(
        l_max, n * omega_out, omega_in, radius, table_a=t_out, table_b=t_in
    )
    nu = np.arange(l_max + 1) + 0.5
    terms = 2.0 * nu * a_sq * ratio * ratio
    if not np.all(np.isfinite(terms)):
        bad = int(np.flatnonzero(~np.isfinite(terms))[0])
        raise FloatingPointError(
            f"non-finite kernel term at l={bad}, omega_in={omega_in}, omega_out={omega_out}"
        )
    return terms


def beta_squared_term(
    config: BubbleConfig, order: HalfIntOrder | int, omega_in: float, omega_out: float
) -> float:
    """Single-nu summand of the kernel (without the global prefactor)."""
    if omega_in <= 0.0 or omega_out <= 0.0:
        raise ValueError("frequencies must be > 0")
    l = order.l if isinstance(order, HalfIntOrder) else int(order)
    return float(_term_ladder(config, l, omega_in, omega_out)[l])


def beta_squared(
    config: BubbleConfig,
    omega_in: float,
    omega_out: float,
    rel_tol: float = DEFAULT_REL_TOL,
    l_cap: int | None = None,
) -> BetaKernel:
    """Evaluate |beta(w_in, w_out)|^2 with a certified angular-momentum sum."""
    if omega_in <= 0.0 or omega_out <= 0.0:
        raise ValueError("frequencies must be > 0")
    if not (0.0 < rel_tol < 1.0):
        raise ValueError(f"rel_tol must be in (0, 1), got {rel_tol}")

    n = config.n_outside
    if n * omega_out > config.cutoff_K or n == 1.0:
        return BetaKernel(omega_in, omega_out, 0.0, l_used=0, tail_estimate=0.0)

    l_start = max(2, math.ceil(n * omega_out * config.radius_R))
    if l_cap is None:
        l_cap = 10 * l_start + 100
    pref = kernel_prefactor(config, omega_in, omega_out)

    l_max = min(l_cap, l_start + 16)
    while True:
        terms = _term_ladder(config, l_max, omega_in, omega_out)
        partial = np.cumsum(terms)
        # window maxima over (l-2, l-1, l), defined for l >= 2
        win = np.maximum(terms[2:], np.maximum(terms[1:-1], terms[:-2]))
        ls = np.arange(2, l_max + 1)
        hit = (ls >= l_start) & (win < rel_tol * partial[2:])
        idx = np.flatnonzero(hit)
        if idx.size:
            stop = int(ls[idx[0]])
            return BetaKernel(
                omega_in,
                omega_out,
                float(pref * partial[stop]),
                l_used=stop,
                tail_estimate=float(pref * win[idx[0]]),
            )
        if partial[-1] == 0.0:
            # every mode underflowed: the kernel is zero at double precision
            return BetaKernel(omega_in, omega_out, 0.0, l_used=l_max, tail_estimate=0.0)
        if l_max >= l_cap:
            raise TruncationError(
                f"l-sum not certified below l_cap={l_cap} at "
                f"omega_in={omega_in}, omega_out={omega_out}",
                l_cap=l_cap,
                partial_sum=float(pref * partial[-1]),
                last_terms=tuple(float(pref * t) for t in terms[-3:]),
            )
        l_max = min(l_cap, 2 * l_max + 32)
