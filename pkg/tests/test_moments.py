"""Mean, variance, higher raw moments, and the shape summary.

Every closed-form sum is checked twice: against hand-computable fixtures
and against adaptive quadrature on randomized densities.
"""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import pwldist as pw

from oracles import (
    polygonal_limits,
    quad_mean,
    quad_moment,
    quad_variance,
    random_density_arrays,
)


def _step():
    return pw.validate([0, 1, 2], [0.75, 0.25], [0.75, 0.25])


def _uniform01():
    return pw.validate([0, 1], [1.0], [1.0])


def _random_polygonal(rng, max_interior=6):
    n = int(rng.integers(1, max_interior + 1))
    c = np.sort(rng.uniform(-10, 10, size=n + 2))
    while np.any(np.diff(c) <= 1e-6):
        c = np.sort(rng.uniform(-10, 10, size=n + 2))
    h = np.zeros(n + 2)
    h[1:-1] = rng.uniform(0.1, 1.0, size=n)
    mass = np.sum((h[:-1] + h[1:]) * np.diff(c)) / 2.0
    return pw.PolygonalDensity(pw.Grid(c), h / mass)


class TestMeanVariance:
    def test_step_density(self):
        d = _step()
        assert pw.mean(d) == pytest.approx(0.75, abs=1e-15)
        assert pw.variance(d) == pytest.approx(13.0 / 48.0, abs=1e-15)

    def test_ramp(self):
        d = pw.validate([0, 1], [2.0], [0.0])
        assert pw.mean(d) == pytest.approx(1.0 / 3.0, abs=1e-15)

    def test_triangular_1_2_4(self):
        d = pw.promote(pw.triangular(1, 2, 4))
        assert pw.mean(d) == pytest.approx(7.0 / 3.0, rel=1e-14)
        assert pw.variance(d) == pytest.approx(7.0 / 18.0, rel=1e-14)

    def test_uniform(self):
        d = _uniform01()
        assert pw.mean(d) == pytest.approx(0.5, abs=1e-15)
        assert pw.variance(d) == pytest.approx(1.0 / 12.0, abs=1e-15)

    def test_requires_normalization(self):
        d = pw.validate([0, 1], [3.0], [3.0])
        with pytest.raises(pw.NotNormalizedError):
            pw.mean(d)
        with pytest.raises(pw.NotNormalizedError):
            pw.variance(d)

    def test_against_quadrature(self):
        rng = np.random.default_rng(53)
        for _ in range(40):
            c, rr, ll = random_density_arrays(rng)
            d = pw.validate(c, rr, ll)
            assert pw.mean(d) == pytest.approx(quad_mean(c, rr, ll), abs=1e-9)
            assert pw.variance(d) == pytest.approx(
                quad_variance(c, rr, ll), abs=1e-9
            )

    def test_translation_equivariance(self):
        rng = np.random.default_rng(59)
        for _ in range(25):
            c, rr, ll = random_density_arrays(rng)
            d = pw.validate(c, rr, ll)
            t = rng.uniform(-50, 50)
            shifted = pw.validate(c + t, rr, ll)
            assert pw.mean(shifted) == pytest.approx(
                pw.mean(d) + t, rel=1e-10, abs=1e-10
            )
            assert pw.variance(shifted) == pytest.approx(
                pw.variance(d), rel=1e-10, abs=1e-12
            )

    def test_scale_equivariance(self):
        rng = np.random.default_rng(61)
        for _ in range(25):
            c, rr, ll = random_density_arrays(rng)
            d = pw.validate(c, rr, ll)
            s = rng.uniform(0.2, 5.0)
            stretched = pw.validate(c * s, rr / s, ll / s)
            assert pw.mean(stretched) == pytest.approx(
                s * pw.mean(d), rel=1e-10, abs=1e-10
            )
            assert pw.variance(stretched) == pytest.approx(
                s * s * pw.variance(d), rel=1e-10, abs=1e-12
            )


class TestPolygonalReduction:
    """The vertex-indexed sums agree with the general trapezoid sums."""

    def test_triangular_fixture(self):
        p = pw.triangular(0, 0.3, 1)
        assert pw.mean_polygonal(p) == pytest.approx(13.0 / 30.0, rel=1e-14)
        assert pw.variance_polygonal(p) == pytest.approx(
            0.79 / 18.0, rel=1e-13
        )

    def test_random_polygonal(self):
        rng = np.random.default_rng(67)
        for _ in range(60):
            p = _random_polygonal(rng)
            d = pw.promote(p)
            assert pw.mean_polygonal(p) == pytest.approx(
                pw.mean(d), rel=1e-12, abs=1e-13
            )
            assert pw.variance_polygonal(p) == pytest.approx(
                pw.variance(d), rel=1e-12, abs=1e-13
            )

    def test_requires_normalization(self):
        p = pw.PolygonalDensity(pw.Grid([0, 1, 2]), [0, 3, 0])
        with pytest.raises(pw.NotNormalizedError):
            pw.mean_polygonal(p)


class TestRawMoment:
    def test_uniform_powers(self):
        d = _uniform01()
        assert pw.raw_moment(d, 0) == pytest.approx(1.0, abs=1e-15)
        assert pw.raw_moment(d, 1) == pytest.approx(0.5, abs=1e-15)
        assert pw.raw_moment(d, 2) == pytest.approx(1.0 / 3.0, abs=1e-15)
        assert pw.raw_moment(d, 3) == pytest.approx(0.25, abs=1e-15)

    def test_symmetric_tetragonal_second_moment(self):
        d = pw.promote(pw.tetragonal(0, 1, 2, 3, 1, 1))
        assert pw.raw_moment(d, 2) == pytest.approx(8.0 / 3.0, rel=1e-14)

    def test_order_validation(self):
        d = _uniform01()
        with pytest.raises(pw.OrderTooLargeError):
            pw.raw_moment(d, pw.MAX_MOMENT_ORDER + 1)
        with pytest.raises(ValueError):
            pw.raw_moment(d, -1)
        with pytest.raises(ValueError):
            pw.raw_moment(d, 2.5)

    def test_against_quadrature(self):
        rng = np.random.default_rng(71)
        for _ in range(25):
            c, rr, ll = random_density_arrays(rng, span=(-5.0, 5.0))
            d = pw.validate(c, rr, ll)
            for m in (3, 4, 5):
                assert pw.raw_moment(d, m) == pytest.approx(
                    quad_moment(c, rr, ll, m), abs=1e-9
                )

    def test_far_from_origin_stability(self):
        """Per-piece midpoint translation keeps distant supports accurate."""
        near = pw.validate([0, 1, 2], [0.75, 0.25], [0.75, 0.25])
        far = pw.validate([1000, 1001, 1002], [0.75, 0.25], [0.75, 0.25])
        m2_near = pw.raw_moment(near, 2) - pw.mean(near) ** 2
        m2_far = pw.raw_moment(far, 2) - pw.mean(far) ** 2
        assert m2_far == pytest.approx(m2_near, rel=1e-6)
        assert pw.summary(far).variance == pytest.approx(
            pw.summary(near).variance, rel=1e-12
        )


class TestSummary:
    def test_uniform_shape(self):
        s = pw.summary(_uniform01())
        assert s.mass == pytest.approx(1.0, abs=1e-12)
        assert s.skewness == pytest.approx(0.0, abs=1e-12)
        assert s.excess == pytest.approx(-1.2, abs=1e-9)

    def test_symmetric_triangular_shape(self):
        s = pw.summary(pw.promote(pw.triangular(0, 0.5, 1)))
        assert s.skewness == 0.0
        assert s.excess == pytest.approx(-0.6, abs=1e-9)
        assert s.std == pytest.approx(math.sqrt(1.0 / 24.0), rel=1e-12)

    def test_variance_routes_agree(self):
        rng = np.random.default_rng(73)
        for _ in range(40):
            c, rr, ll = random_density_arrays(rng)
            d = pw.validate(c, rr, ll)
            s = pw.summary(d)
            assert s.variance == pytest.approx(pw.variance(d), rel=1e-10)
            m2 = pw.raw_moment(d, 2)
            assert s.variance == pytest.approx(
                m2 - pw.mean(d) ** 2, rel=1e-7, abs=1e-12
            )

    def test_skewness_kurtosis_inequality(self):
        """excess + 2 >= skewness^2 holds for every distribution."""
        rng = np.random.default_rng(79)
        for _ in range(40):
            c, rr, ll = random_density_arrays(rng)
            s = pw.summary(pw.validate(c, rr, ll))
            assert s.excess + 2.0 >= s.skewness**2 - 1e-9

    def test_requires_normalization(self):
        with pytest.raises(pw.NotNormalizedError):
            pw.summary(pw.validate([0, 1], [3.0], [3.0]))
