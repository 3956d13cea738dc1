import math

import numpy as np
import pytest
from scipy import integrate
from scipy import special as sp

from bubblerad import specfun
from bubblerad.specfun import (
    HalfIntOrder,
    bessel_j,
    bessel_j_prime,
    bessel_n,
    bessel_n_prime,
    cross_wronskian_ratio,
)

# frozen arbitrary-precision values (mpmath, 40 digits)
J_5p5_AT_10 = -0.14012093236659252895
N_3p5_AT_2p5 = -1.0049676237115538515
JP_2p5_AT_7p3 = -0.017922383717637475108
RATIO_L0_A1_B2_R1 = 0.17880979381612432286


class TestHalfIntOrder:
    def test_nu(self):
        assert HalfIntOrder(3).nu == 3.5

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            HalfIntOrder(-1)


class TestClosedFormSeeds:
    def test_j_half_at_half_pi(self):
        # J_{1/2}(x) = sqrt(2/(pi x)) sin(x)
        assert bessel_j(0, math.pi / 2) == pytest.approx(2.0 / math.pi, rel=1e-14)

    def test_j_half_at_pi_vanishes(self):
        assert bessel_j(0, math.pi) == pytest.approx(0.0, abs=1e-15)

    def test_n_half_at_pi(self):
        # N_{1/2}(x) = -sqrt(2/(pi x)) cos(x)
        assert bessel_n(0, math.pi) == pytest.approx(math.sqrt(2.0) / math.pi, rel=1e-14)

    def test_n_half_at_half_pi_vanishes(self):
        assert bessel_n(0, math.pi / 2) == pytest.approx(0.0, abs=1e-15)

    def test_jprime_half_at_half_pi(self):
        # J'_{1/2} = J_{-1/2} - (1/(2x)) J_{1/2}; cos term dies at pi/2
        assert bessel_j_prime(0, math.pi / 2) == pytest.approx(-2.0 / math.pi**2, rel=1e-13)


class TestOracleValues:
    def test_j_oracle(self):
        assert bessel_j(5, 10.0) == pytest.approx(J_5p5_AT_10, rel=1e-10)

    def test_n_oracle(self):
        assert bessel_n(3, 2.5) == pytest.approx(N_3p5_AT_2p5, rel=1e-10)

    def test_jprime_oracle(self):
        assert bessel_j_prime(2, 7.3) == pytest.approx(JP_2p5_AT_7p3, rel=1e-10)

    def test_against_scipy_sweep(self):
        # independent implementation route; compare on the envelope scale so
        # points near zeros do not blow up the relative measure
        rng = np.random.default_rng(7)
        for _ in range(200):
            l = int(rng.integers(0, 50))
            x = float(10 ** rng.uniform(-3, 4))
            t = specfun.bessel_tables(l, x, neumann=True)
            jv, yv = sp.jv(l + 0.5, x), sp.yv(l + 0.5, x)
            env = math.sqrt(2.0 / (math.pi * x))
            assert np.isclose(t.j[l], jv, rtol=5e-10, atol=1e-13 * env)
            if np.isfinite(yv) and abs(yv) < 1e270:
                assert np.isclose(t.y[l], yv, rtol=5e-10, atol=1e-13 * env)


class TestDerivatives:
    @pytest.mark.parametrize("l, x", [(0, 1.3), (2, 7.3), (5, 2.2), (12, 40.0), (30, 31.0)])
    def test_finite_difference(self, l, x):
        h = 1e-6 * max(1.0, x)
        fd = (bessel_j(l, x + h) - bessel_j(l, x - h)) / (2 * h)
        assert bessel_j_prime(l, x) == pytest.approx(fd, rel=1e-7)
        fd_n = (bessel_n(l, x + h) - bessel_n(l, x - h)) / (2 * h)
        assert bessel_n_prime(l, x) == pytest.approx(fd_n, rel=1e-7)


class TestIdentities:
    def test_wronskian(self):
        # J N' - J' N = 2/(pi x)
        for l in range(0, 41, 4):
            for x in np.geomspace(0.1, 500, 25):
                t = specfun.bessel_tables(l, float(x), neumann=True)
                w = t.j[l] * t.yp[l] - t.jp[l] * t.y[l]
                assert w == pytest.approx(2.0 / (math.pi * x), rel=1e-9)

    def test_three_term_recurrence(self):
        # f_{nu-1} + f_{nu+1} = (2 nu / x) f_nu, tested on the envelope scale
        rng = np.random.default_rng(3)
        for _ in range(150):
            l = int(rng.integers(1, 40))
            x = float(10 ** rng.uniform(-1, 3))
            t = specfun.bessel_tables(l + 1, x, neumann=True)
            nu = l + 0.5
            for f in (t.j, t.y):
                lhs = f[l - 1] + f[l + 1]
                rhs = 2 * nu / x * f[l]
                scale = max(abs(f[l - 1]), abs(f[l]), abs(f[l + 1]))
                if scale < 1e270:
                    assert lhs == pytest.approx(rhs, abs=1e-8 * scale)


class TestDomainErrors:
    @pytest.mark.parametrize("fn", [bessel_j, bessel_n, bessel_j_prime, bessel_n_prime])
    @pytest.mark.parametrize("x", [0.0, -1.0, math.inf, math.nan])
    def test_bad_argument(self, fn, x):
        with pytest.raises(ValueError):
            fn(0, x)

    def test_bad_wronskian_args(self):
        with pytest.raises(ValueError):
            cross_wronskian_ratio(0, -1.0, 2.0, 1.0)
        with pytest.raises(ValueError):
            cross_wronskian_ratio(0, 1.0, 2.0, 0.0)


class TestCrossWronskianRatio:
    def test_quadrature_oracle_frozen(self):
        assert cross_wronskian_ratio(0, 1.0, 2.0, 1.0) == pytest.approx(
            RATIO_L0_A1_B2_R1, rel=1e-10
        )

    @pytest.mark.parametrize("l, a, b, R", [(1, 0.7, 2.9, 1.4), (4, 6.0, 5.0, 2.0),
                                            (9, 3.3, 9.1, 0.8)])
    def test_quadrature_oracle_live(self, l, a, b, R):
        # ratio = (1/R) * int_0^R J_nu(ar) J_nu(br) r dr
        quad, _ = integrate.quad(
            lambda r: sp.jv(l + 0.5, a * r) * sp.jv(l + 0.5, b * r) * r, 0.0, R, limit=200
        )
        assert cross_wronskian_ratio(l, a, b, R) == pytest.approx(quad / R, rel=1e-9)

    def test_diagonal_matches_lommel(self):
        # exact diagonal goes through the Lommel branch
        a = 3.0
        val = cross_wronskian_ratio(2, a, a, 1.0)
        quad, _ = integrate.quad(lambda r: sp.jv(2.5, a * r) ** 2 * r, 0.0, 1.0)
        assert val == pytest.approx(quad, rel=1e-12)

    def test_branch_continuity(self):
        # crossing the resonance guard changes the value by < 1e-6 relative
        b, R = 5.0, 2.0
        for l in (0, 4, 11):
            just_out = cross_wronskian_ratio(l, b * (1 + 1.01e-6), b, R)
            just_in = cross_wronskian_ratio(l, b * (1 + 0.99e-6), b, R)
            assert just_in == pytest.approx(just_out, rel=1e-6)

    def test_swap_symmetry(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            l = int(rng.integers(0, 12))
            a, b = 10 ** rng.uniform(-0.5, 1.0, size=2)
            R = 10 ** rng.uniform(-0.5, 0.7)
            assert cross_wronskian_ratio(l, a, b, R) == cross_wronskian_ratio(l, b, a, R)
