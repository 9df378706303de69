import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from tdist_bounds.distributions import (
    density_ratio,
    dof,
    student_cdf,
    student_pdf,
    student_sf,
)
from tdist_bounds.errors import DegenerateInputError, DomainError
from tdist_bounds.special import wallis_ratio

INF = math.inf


def quad_pdf(p, lo, hi):
    value, _ = integrate.quad(lambda u: student_pdf(p, u), lo, hi, epsabs=1e-13, epsrel=1e-13, limit=500)
    return value


def test_dof_parsing():
    assert dof("inf") == INF
    assert dof(" Infinity ") == INF
    assert dof("2.5") == 2.5
    assert dof(INF) == INF
    for bad in (0, -1, "abc", math.nan):
        with pytest.raises(DomainError):
            dof(bad)


class TestPdf:
    def test_values(self):
        assert student_pdf(INF, 0.0) == pytest.approx(0.3989422804014327, rel=1e-15)
        assert student_pdf(1, 0.0) == pytest.approx(1 / math.pi, rel=1e-14)
        # Gamma(2.5) / (sqrt(4 pi) Gamma(2)) (5/4)^(-5/2) = 0.375 * 1.25^-2.5
        assert student_pdf(4, 1.0) == pytest.approx(0.375 * 1.25**-2.5, rel=1e-14)

    def test_cauchy_closed_form(self):
        for x in (-7.0, -1.0, 0.3, 2.0, 50.0):
            assert student_pdf(1, x) == pytest.approx(1 / (math.pi * (1 + x * x)), rel=1e-14)

    def test_no_underflow_for_large_p(self):
        # the direct power (1 + x^2/p)^(-(p+1)/2) is fine in log space
        assert student_pdf(1e8, 3.0) == pytest.approx(student_pdf(INF, 3.0), rel=1e-6)

    @pytest.mark.parametrize("p", [0.5, 1, 2, 4, 12, 100])
    def test_integrates_to_one(self, p):
        total = quad_pdf(p, -INF, 0) + quad_pdf(p, 0, INF)
        assert abs(total - 1.0) <= 1e-10


class TestCdf:
    def test_values(self):
        assert student_cdf(1, 1.0) == pytest.approx(0.75, abs=1e-15)
        assert student_cdf(2, 1.0) == pytest.approx(0.5 * (1 + 1 / math.sqrt(3)), abs=1e-15)
        for p in (0.3, 1, 7, 1e3, INF):
            assert student_cdf(p, 0.0) == 0.5

    def test_closed_forms(self):
        for x in (-3.0, -0.4, 0.2, 1.5, 10.0, 1e3):
            assert student_cdf(1, x) == pytest.approx(0.5 + math.atan(x) / math.pi, abs=1e-14)
            assert student_cdf(2, x) == pytest.approx(0.5 * (1 + x / math.sqrt(2 + x * x)), abs=1e-14)

    @given(st.floats(min_value=0.2, max_value=1e4), st.floats(min_value=-50, max_value=50))
    def test_symmetry_and_sf(self, p, x):
        assert student_cdf(p, x) + student_cdf(p, -x) == pytest.approx(1.0, abs=1e-14)
        assert student_cdf(p, x) + student_sf(p, x) == pytest.approx(1.0, abs=1e-14)

    def test_increasing_in_p(self):
        ps = [1, 2, 4, 8, 16, INF]
        for x in (0.5, 1, 2, 3):
            values = [student_cdf(p, x) for p in ps]
            assert all(u < v for u, v in zip(values, values[1:])), x

    def test_matches_quadrature(self):
        rng = random.Random(20240101)
        for _ in range(50):
            p = 10 ** rng.uniform(-0.3, 2.5)
            x = rng.uniform(-6, 6)
            via_quad = 0.5 + math.copysign(quad_pdf(p, 0, abs(x)), x)
            assert abs(student_cdf(p, x) - via_quad) <= 1e-10, (p, x)


class TestDensityRatio:
    def test_at_zero_is_wallis_ratio(self):
        for p in (0.7, 1, 4, 33.3):
            assert density_ratio(p, INF, 0.0) == pytest.approx(wallis_ratio(p), rel=1e-14)

    def test_large_x(self):
        expected = (1 / (math.pi * 101)) / (math.exp(-50) / math.sqrt(2 * math.pi))
        assert density_ratio(1, INF, 10.0) == pytest.approx(expected, rel=1e-13)
        assert density_ratio(1, INF, 10.0) > 1

    def test_no_overflow_far_out(self):
        assert math.isfinite(math.log(density_ratio(1, INF, 30.0)))

    @given(st.floats(min_value=0.5, max_value=50), st.floats(min_value=0, max_value=20))
    def test_even(self, p, x):
        assert density_ratio(p, INF, x) == density_ratio(p, INF, -x)

    def test_degenerate(self):
        with pytest.raises(DegenerateInputError):
            density_ratio(3, 3, 1.0)

    @pytest.mark.parametrize("p", [1, 4, 20])
    def test_dips_then_rises_around_one(self, p):
        left = [i / 100 for i in range(101)]
        right = [1 + 9 * i / 99 for i in range(100)]
        r_left = [density_ratio(p, INF, x) for x in left]
        r_right = [density_ratio(p, INF, x) for x in right]
        assert all(u > v for u, v in zip(r_left, r_left[1:]))
        assert all(u < v for u, v in zip(r_right, r_right[1:]))
        assert r_left[0] < 1
