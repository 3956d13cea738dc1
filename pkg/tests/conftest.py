import math

import pytest

from bubblerad import GridSpec, BubbleConfig, scan
from bubblerad.units import omega_to_internal


@pytest.fixture(scope="session")
def default_config():
    """The documented CLI default scenario (ambient bubble, K = 2*pi/0.4)."""
    return BubbleConfig(n_outside=1.33, radius_R=4.5, cutoff_K=2.0 * math.pi / 0.4,
                        label="ambient bubble")


@pytest.fixture(scope="session")
def fig1_config():
    """Ambient bubble with cutoff frequency 1e15 Hz (omega = 2*pi*1e15 rad/s)."""
    return BubbleConfig(n_outside=1.33, radius_R=4.5,
                        cutoff_K=omega_to_internal(2.0 * math.pi * 1e15),
                        label="finite-volume reproduction run")


@pytest.fixture(scope="session")
def default_spectrum(default_config):
    """One moderately resolved scan of the default scenario, shared by the
    suppression tests so the expensive part runs once per session."""
    return scan(default_config, GridSpec(points=64), quad_tol=1e-4,
                kernel_rel_tol=1e-4, workers=2)
