import math

import pytest
from hypothesis import given, strategies as st

from bubblerad import units


def test_constants_pinned():
    assert units.C_M_PER_S == 299_792_458.0
    assert units.HBAR_C_EV_UM == 0.197_326_980_4
    assert units.EV_J == 1.602_176_634e-19
    assert units.LENGTH_UNIT_M == 1e-6


def test_omega_to_internal_zero():
    assert units.omega_to_internal(0.0) == 0.0


def test_omega_to_internal_unit_definition():
    # c / (1 um) in rad/s maps to exactly one internal unit
    assert units.omega_to_internal(units.C_M_PER_S / 1e-6) == pytest.approx(1.0, rel=1e-15)


def test_omega_to_internal_direct_division():
    assert units.omega_to_internal(1e15) == pytest.approx(3.3356409519815205, rel=1e-12)


def test_omega_negative_rejected():
    with pytest.raises(ValueError):
        units.omega_to_internal(-1.0)
    with pytest.raises(ValueError):
        units.omega_to_si(-1.0)


def test_energy_to_ev_values():
    assert units.energy_to_ev(0.0) == 0.0
    assert units.energy_to_ev(1.0) == pytest.approx(0.1973269804, rel=1e-12)
    assert units.energy_to_ev(10.0) == pytest.approx(1.973269804, rel=1e-12)


@given(st.floats(min_value=1e-3, max_value=1e20))
def test_omega_round_trip(omega_si):
    back = units.omega_to_si(units.omega_to_internal(omega_si))
    assert back == pytest.approx(omega_si, rel=1e-12)


@given(st.floats(min_value=1e-6, max_value=1e12))
def test_energy_round_trip(e_ev):
    back = units.energy_to_ev(units.energy_from_ev(e_ev))
    assert back == pytest.approx(e_ev, rel=1e-12)


@given(st.floats(min_value=1e-18, max_value=1e3))
def test_time_round_trip(t_si):
    back = units.time_from_internal(units.time_to_internal(t_si))
    assert back == pytest.approx(t_si, rel=1e-12)


def test_wavelength_to_cutoff():
    assert units.wavelength_to_cutoff(0.4) == pytest.approx(2 * math.pi / 0.4, rel=1e-15)
    with pytest.raises(ValueError):
        units.wavelength_to_cutoff(0.0)


class TestBubbleConfig:
    def test_valid(self):
        cfg = units.BubbleConfig(n_outside=1.33, radius_R=4.5, cutoff_K=10.0)
        assert cfg.n_inside == 1.0
        assert cfg.eps_outside == pytest.approx(1.33**2)

    @pytest.mark.parametrize(
        "kwargs, field",
        [
            (dict(n_outside=0.9, radius_R=1.0, cutoff_K=1.0), "n_outside"),
            (dict(n_outside=1.3, radius_R=-1.0, cutoff_K=1.0), "radius"),
            (dict(n_outside=1.3, radius_R=1.0, cutoff_K=0.0), "cutoff"),
            (dict(n_outside=1.3, radius_R=1.0, cutoff_K=1.0, n_inside=0.5), "n_inside"),
        ],
    )
    def test_invalid_named(self, kwargs, field):
        with pytest.raises(ValueError, match=field):
            units.BubbleConfig(**kwargs)
