"""Two-photon counting statistics: thermal versus two-mode squeezed light.

The discriminating observable for a mode pair (a, b) is N_ab = N_a - N_b.
Its variance expands as

    Var(N_ab) = Var(N_a) + Var(N_b) - 2<N_a N_b> + 2<N_a><N_b>,

which for independent thermal modes gives <N_a>(<N_a>+1) + <N_b>(<N_b>+1)
and for a two-mode squeezed state gives exactly 0: the pair correlations
cancel the (large) single-mode fluctuations, even though each mode seen
alone is indistinguishable from thermal.

Samplers: single-mode occupations are Bose-Einstein distributed,
P(m) = (1-lam) lam^m with lam = <N>/(1+<N>) (a geometric law).  The
thermal-independent ensemble draws the two modes independently; the
two-mode-squeezed ensemble draws one occupation and uses it for both,
which is the unique pairing that reproduces all three closed forms above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "KIND_THERMAL",
    "KIND_SQUEEZED",
    "PairEnsemble",
    "VarianceEstimate",
    "theoretical_variance",
    "sample",
    "variance_nab",
    "variance_nab_expansion",
]

KIND_THERMAL = "thermal-independent"
KIND_SQUEEZED = "two-mode-squeezed"
_KINDS = (KIND_THERMAL, KIND_SQUEEZED)


@dataclass(frozen=True)
class PairEnsemble:
    """Monte Carlo samples of photon-pair occupation numbers."""

    kind: str
    mean_occupation: float
    n_a: np.ndarray
    n_b: np.ndarray
    seed: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}")
        if len(self.n_a) != len(self.n_b):
            raise ValueError("n_a and n_b must have the same length")
        if np.any(self.n_a < 0) or np.any(self.n_b < 0):
            raise ValueError("occupation numbers must be >= 0")

    def __len__(self) -> int:
        return len(self.n_a)


@dataclass(frozen=True)
class VarianceEstimate:
    value: float
    std_error: float


def theoretical_variance(kind: str, mean_a: float, mean_b: float) -> float:
    """Closed-form Var(N_a - N_b) for the given light kind."""
    if mean_a < 0.0 or mean_b < 0.0:
        raise ValueError("mean occupations must be >= 0")
    if kind == KIND_THERMAL:
        return mean_a * (mean_a + 1.0) + mean_b * (mean_b + 1.0)
    if kind == KIND_SQUEEZED:
        return 0.0
    raise ValueError(f"unknown ensemble kind {kind!r}")


def sample(kind: str, mean_occupation: float, count: int, seed: int) -> PairEnsemble:
    """Draw a pair ensemble with the stated kind and mean occupation.

    Identical seeds reproduce identical ensembles bit for bit.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown ensemble kind {kind!r}")
    if mean_occupation < 0.0:
        raise ValueError(f"mean occupation must be >= 0, got {mean_occupation}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rng = np.random.default_rng(seed)
    # numpy's geometric is supported on {1, 2, ...}; shifting by 1 gives the
    # Bose-Einstein law P(m) = (1-lam) lam^m on {0, 1, ...}
    p = 1.0 / (1.0 + mean_occupation)
    if kind == KIND_SQUEEZED:
        n = rng.geometric(p, size=count).astype(np.int64) - 1
        n_a, n_b = n, n.copy()
    else:
        n_a = rng.geometric(p, size=count).astype(np.int64) - 1
        n_b = rng.geometric(p, size=count).astype(np.int64) - 1
    return PairEnsemble(kind=kind, mean_occupation=float(mean_occupation),
                        n_a=n_a, n_b=n_b, seed=int(seed))


def variance_nab(ensemble: PairEnsemble) -> VarianceEstimate:
    """Unbiased sample variance of n_a - n_b with a jackknife standard error."""
    m = len(ensemble)
    if m < 2:
        raise ValueError(f"need >= 2 samples, got {m}")
    d = (ensemble.n_a - ensemble.n_b).astype(float)
    var = float(np.var(d, ddof=1))

    # leave-one-out variances in closed form from the sums
    s1 = d.sum()
    s2 = (d * d).sum()
    if m == 2:
        return VarianceEstimate(value=var, std_error=float("nan"))
    loo = ((s2 - d * d) - (s1 - d) ** 2 / (m - 1)) / (m - 2)
    se = math.sqrt((m - 1) / m * np.sum((loo - loo.mean()) ** 2))
    return VarianceEstimate(value=var, std_error=se)


def variance_nab_expansion(ensemble: PairEnsemble) -> float:
    """Var(N_ab) assembled from the four-term moment expansion.

    Each moment is the plain sample average; the population-moment
    combination is rescaled by m/(m-1) so the result is algebraically
    identical to the unbiased variance returned by :func:`variance_nab`.
    """
    m = len(ensemble)
    if m < 2:
        raise ValueError(f"need >= 2 samples, got {m}")
    a = ensemble.n_a.astype(float)
    b = ensemble.n_b.astype(float)
    var_a = float(np.var(a))
    var_b = float(np.var(b))
    cross = float(np.mean(a * b))
    means = float(np.mean(a)) * float(np.mean(b))
    return (var_a + var_b - 2.0 * cross + 2.0 * means) * m / (m - 1)
