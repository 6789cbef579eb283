import math
import random

import mpmath
import pytest
from scipy import integrate

from lejacircle.specfun import (EULER_GAMMA, equilibrium_energy, euler_gamma, gamma_fn,
                                limit_constant, regime, riesz_constant, zeta)


def quad_equilibrium(s):
    # (1/2pi) int_0^{2pi} |1 - e^{i phi}|^-s dphi = (2/pi) int_0^{pi/2} (2 sin u)^-s du,
    # with the u^-s singularity handled by the algebraic weight
    f = lambda u: (u / math.sin(u)) ** s if u > 0 else 1.0
    val, _ = integrate.quad(f, 0.0, math.pi / 2, weight="alg", wvar=(-s, 0.0),
                            epsabs=1e-15, epsrel=1e-14, limit=200)
    return 2.0 / math.pi * 2.0 ** (-s) * val


class TestGamma:
    @pytest.mark.parametrize("x, want", [(0.5, math.sqrt(math.pi)), (5.0, 24.0),
                                         (0.25, 3.62560990822190831193)])
    def test_values(self, x, want):
        assert gamma_fn(x) == pytest.approx(want, rel=1e-13)

    def test_against_mpmath(self):
        for x in [0.01, 0.1, 0.3, 0.49, 0.5, 0.51, 0.75, 1.0, 1.5, 2.5, 7.3, 20.0, 55.5, 150.2]:
            assert gamma_fn(x) == pytest.approx(float(mpmath.gamma(x)), rel=1e-12)

    def test_functional_equation(self):
        rng = random.Random(7)
        for _ in range(100):
            x = rng.uniform(0.1, 20.0)
            assert gamma_fn(x + 1) == pytest.approx(x * gamma_fn(x), rel=1e-11)

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_rejects_non_positive(self, x):
        with pytest.raises(ValueError):
            gamma_fn(x)


def direct_zeta(s, n=20000):
    # partial sum plus integral tail with Euler-Maclaurin midpoint term
    head = math.fsum(k ** -s for k in range(1, n))
    tail = n ** (1 - s) / (s - 1) + 0.5 * n ** -s + s / 12 * n ** (-s - 1)
    return head + tail


class TestZeta:
    def test_basel(self):
        assert zeta(2.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-10)

    def test_half(self):
        assert zeta(0.5) == pytest.approx(-1.46035450880958681289, rel=1e-10)

    @pytest.mark.parametrize("s", [1.5, 2.0, 3.0, 5.0])
    def test_direct_summation(self, s):
        assert zeta(s) == pytest.approx(direct_zeta(s), rel=1e-10)

    def test_against_mpmath_grid(self):
        for s in [0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.999, 1.001, 1.1, 2.5, 7.0, 15.0, 40.0]:
            assert zeta(s) == pytest.approx(float(mpmath.zeta(s)), rel=1e-10)

    def test_negative_on_unit_interval(self):
        assert all(zeta(s) < 0 for s in (0.05, 0.3, 0.6, 0.95))

    @pytest.mark.parametrize("s", [1.0, 0.0, -2.0])
    def test_rejects(self, s):
        with pytest.raises(ValueError):
            zeta(s)


class TestEquilibrium:
    @pytest.mark.parametrize("s", [0.1, 0.25, 0.5, 0.75, 0.9])
    def test_quadrature(self, s):
        assert equilibrium_energy(s) == pytest.approx(quad_equilibrium(s), rel=1e-9, abs=1e-9)

    def test_half_value(self):
        assert equilibrium_energy(0.5) == pytest.approx(1.18034059901609603665, rel=1e-13)

    def test_tends_to_one(self):
        assert equilibrium_energy(1e-9) == pytest.approx(1.0, abs=1e-8)

    @pytest.mark.parametrize("s", [0.0, 1.0, 1.5])
    def test_rejects(self, s):
        with pytest.raises(ValueError):
            equilibrium_energy(s)


class TestConstants:
    def test_euler_gamma_from_harmonic_sums(self):
        n = 10 ** 6
        h = math.fsum(1.0 / k for k in range(1, n + 1))
        approx = h - math.log(n) - 1 / (2 * n) + 1 / (12 * n * n)
        assert euler_gamma() == pytest.approx(approx, abs=1e-12)
        assert abs(EULER_GAMMA - 0.577215664902) < 1e-12

    def test_partial_sums(self):
        h10 = math.fsum(1 / k for k in range(1, 11)) - math.log(10)
        assert h10 == pytest.approx(0.62638316, abs=1e-8)
        d = math.fsum(1 / k for k in range(1, 1001)) - math.log(1000) - EULER_GAMMA
        assert d == pytest.approx(1 / 2000, rel=0.1)

    def test_limit_constants(self):
        assert limit_constant(2).liminf_value == pytest.approx(1 / 12, rel=1e-12)
        assert limit_constant(1).liminf_value == pytest.approx(0.0399902130750533171, rel=1e-12)
        assert limit_constant(0.5).liminf_value == pytest.approx(-1.16519431587802134, rel=1e-10)
        t0 = limit_constant(0)
        assert t0.liminf_value == 0.0
        assert t0.limsup_value == pytest.approx(math.log(4 / 3))
        assert not t0.limsup_factor_required and limit_constant(3).limsup_factor_required

    def test_signs(self):
        for s in (0.1, 0.5, 0.9):
            assert limit_constant(s).liminf_value < 0
        for s in (1.0, 1.01, 2, 5):
            assert limit_constant(s).liminf_value > 0
        assert riesz_constant(4) == pytest.approx(2 * math.pi ** 4 / 90 / (2 * math.pi) ** 4)

    def test_regime(self):
        assert [regime(s) for s in (0, 0.2, 1, 7)] == ["log", "subcritical", "critical", "supercritical"]
        with pytest.raises(ValueError):
            regime(-1)
