"""Half-integer-order Bessel functions and their Wronskian combinations.

Spherical mode matching only ever needs orders nu = l + 1/2 with integer
l >= 0, so everything is built on the spherical Bessel functions through

    J_{l+1/2}(x) = sqrt(2x/pi) * j_l(x),      N_{l+1/2}(x) = sqrt(2x/pi) * y_l(x),

with exact trigonometric seeds

    j_{-1} = cos(x)/x     j_0 = sin(x)/x
    y_{-1} = sin(x)/x     y_0 = -cos(x)/x

and the three-term recurrence f_{l+1} = ((2l+1)/x) f_l - f_{l-1}.  The
recurrence runs upward for y (y is the dominant solution, so upward is
stable) and for j only when x comfortably exceeds the top order; otherwise
j comes from a normalised downward (Miller) recurrence, the stable
direction for the minimal solution.

Derivatives with respect to the argument use the cylinder identity

    F'_nu(x) = F_{nu-1}(x) - (nu/x) F_nu(x),

so each table carries the l-1 row internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "HalfIntOrder",
    "BesselTables",
    "bessel_tables",
    "bessel_j",
    "bessel_n",
    "bessel_j_prime",
    "bessel_n_prime",
    "cross_wronskian_ratio",
    "cross_wronskian_ratio_all",
    "DELTA_RES",
]

#: relative |a - b| below which the cross-Wronskian switches to the Lommel
#: diagonal form; the off-diagonal expression loses ~6 digits to
#: cancellation there while the diagonal form is exact.
DELTA_RES = 1e-6

# Miller recurrence controls: extra orders above the requested top order,
# and the magnitude at which the growing sequence is rescaled.
_MILLER_ACC = 40.0
_MILLER_PAD = 14
_RESCALE_AT = 1e250
_RESCALE_BY = 1e-250

# Neumann functions explode for l >> x; saturate instead of overflowing so
# downstream amplitude formulas degrade to zero without generating NaNs.
_SATURATE_AT = 1e280


@dataclass(frozen=True)
class HalfIntOrder:
    """Angular momentum l with implied Bessel order nu = l + 1/2."""

    l: int

    def __post_init__(self) -> None:
        if self.l < 0 or self.l != int(self.l):
            raise ValueError(f"angular momentum l must be a non-negative integer, got {self.l!r}")

    @property
    def nu(self) -> float:
        return self.l + 0.5


def _as_l(order: HalfIntOrder | int) -> int:
    if isinstance(order, HalfIntOrder):
        return order.l
    l = int(order)
    if l != order or l < 0:
        raise ValueError(f"angular momentum l must be a non-negative integer, got {order!r}")
    return l


def _check_x(x: float) -> float:
    x = float(x)
    if not (x > 0.0) or not math.isfinite(x):
        raise ValueError(f"argument must be a positive finite real, got {x!r}")
    return x


def _spherical_j_ext(l_max: int, x: float) -> np.ndarray:
    """j_l(x) for l = -1 .. l_max; index k holds order l = k - 1."""
    sinx = math.sin(x)
    cosx = math.cos(x)

    if x >= l_max + 10.0:
        # all requested orders sit in the oscillatory regime: upward is stable
        out = np.empty(l_max + 2)
        out[0] = cosx / x
        out[1] = sinx / x
        fm, f = out[0], out[1]
        for l in range(0, l_max):
            fm, f = f, (2 * l + 1) / x * f - fm
            out[l + 2] = f
        return out

    # Miller: seed high above the top order, recur downward, normalise at
    # the bottom.  Always carry orders down to l = 1 so either trig seed is
    # available for normalisation.
    top = max(l_max, 1)
    out = np.empty(top + 2)
    m_start = top + int(math.sqrt(_MILLER_ACC * (top + 1))) + _MILLER_PAD
    fp = 0.0  # f_{l+1}
    f = 1e-300  # f_l
    for l in range(m_start, -2, -1):
        if l <= top:
            out[l + 1] = f
        if l > -1:
            fp, f = f, (2 * l + 1) / x * f - fp
            if abs(f) > _RESCALE_AT:
                f *= _RESCALE_BY
                fp *= _RESCALE_BY
                if l <= top:
                    out[l + 1:] *= _RESCALE_BY
    # normalise against whichever trig seed is comfortably away from a zero
    if abs(sinx) >= 0.25 or x < 0.5:
        scale = (sinx / x) / out[1]
    else:
        scale = ((sinx - x * cosx) / (x * x)) / out[2]
    out *= scale
    return out[: l_max + 2]


def _spherical_y_ext(l_max: int, x: float) -> np.ndarray:
    """y_l(x) for l = -1 .. l_max by upward recurrence, with saturation."""
    sinx = math.sin(x)
    cosx = math.cos(x)
    out = np.empty(l_max + 2)
    out[0] = sinx / x
    if l_max < 0:
        return out
    out[1] = -cosx / x
    fm, f = out[0], out[1]
    for l in range(0, l_max):
        fm, f = f, (2 * l + 1) / x * f - fm
        if abs(f) > _SATURATE_AT:
            # past the centrifugal barrier the sign is frozen; clamp the
            # rest so arithmetic downstream stays finite
            out[l + 2:] = math.copysign(_SATURATE_AT, f)
            return out
        out[l + 2] = f
    return out


@dataclass(frozen=True)
class BesselTables:
    """J_{l+1/2}(x) and friends for l = 0 .. l_max at a fixed argument.

    ``y``/``yp`` are ``None`` unless the table was built with
    ``neumann=True``.
    """

    x: float
    j: np.ndarray
    jp: np.ndarray
    y: np.ndarray | None = None
    yp: np.ndarray | None = None

    @property
    def l_max(self) -> int:
        return len(self.j) - 1


def bessel_tables(l_max: int, x: float, *, neumann: bool = False) -> BesselTables:
    """Evaluate J_nu (and optionally N_nu) with derivatives for l = 0..l_max."""
    if l_max < 0:
        raise ValueError(f"l_max must be >= 0, got {l_max}")
    x = _check_x(x)
    scale = math.sqrt(2.0 * x / math.pi)
    nu = np.arange(l_max + 1) + 0.5

    sj = _spherical_j_ext(l_max, x)
    j = scale * sj[1:]
    jp = scale * (sj[:-1] - (nu / x) * sj[1:])

    y = yp = None
    if neumann:
        sy = _spherical_y_ext(l_max, x)
        y = scale * sy[1:]
        yp = scale * (sy[:-1] - (nu / x) * sy[1:])
    return BesselTables(x=x, j=j, jp=jp, y=y, yp=yp)


def bessel_j(order: HalfIntOrder | int, x: float) -> float:
    """J_{l+1/2}(x) for x > 0."""
    l = _as_l(order)
    return float(bessel_tables(l, x).j[l])


def bessel_n(order: HalfIntOrder | int, x: float) -> float:
    """N_{l+1/2}(x) (Bessel function of the second kind) for x > 0."""
    l = _as_l(order)
    return float(bessel_tables(l, x, neumann=True).y[l])


def bessel_j_prime(order: HalfIntOrder | int, x: float) -> float:
    """d/dx J_{l+1/2}(x) for x > 0."""
    l = _as_l(order)
    return float(bessel_tables(l, x).jp[l])


def bessel_n_prime(order: HalfIntOrder | int, x: float) -> float:
    """d/dx N_{l+1/2}(x) for x > 0."""
    l = _as_l(order)
    return float(bessel_tables(l, x, neumann=True).yp[l])


def cross_wronskian_ratio_all(
    l_max: int,
    a: float,
    b: float,
    radius: float,
    *,
    table_a: BesselTables | None = None,
    table_b: BesselTables | None = None,
) -> np.ndarray:
    """W[J_nu(a r), J_nu(b r)]_R / (a^2 - b^2) for l = 0 .. l_max.

    The Wronskian uses radial derivatives with explicit chain-rule factors,

        W = J_nu(aR) * b J'_nu(bR) - a J'_nu(aR) * J_nu(bR),

    so the ratio equals (1/R) * integral_0^R J_nu(ar) J_nu(br) r dr by the
    Bessel cross-product identity.  Within ``DELTA_RES`` of the diagonal the
    removable 0/0 is replaced by Lommel's integral evaluated at the
    midpoint (a+b)/2, which keeps the result exactly symmetric in (a, b).
    """
    a = _check_x(a)
    b = _check_x(b)
    radius = _check_x(radius)

    if abs(a - b) < DELTA_RES * 0.5 * (a + b):
        m = 0.5 * (a + b)
        x = m * radius
        tab = bessel_tables(l_max, x)
        nu = np.arange(l_max + 1) + 0.5
        return 0.5 * radius * (tab.jp**2 + (1.0 - (nu / x) ** 2) * tab.j**2)

    ta = table_a if table_a is not None else bessel_tables(l_max, a * radius)
    tb = table_b if table_b is not None else bessel_tables(l_max, b * radius)
    w = ta.j * (b * tb.jp) - (a * ta.jp) * tb.j
    return w / (a * a - b * b)


def cross_wronskian_ratio(order: HalfIntOrder | int, a: float, b: float, radius: float) -> float:
    """Scalar convenience wrapper around :func:`cross_wronskian_ratio_all`."""
    l = _as_l(order)
    return float(cross_wronskian_ratio_all(l, a, b, radius)[l])
