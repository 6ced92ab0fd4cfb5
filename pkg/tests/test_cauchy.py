"""
Tests for quaddom.core.quadrature.cauchy
"""
import numpy as np
import pytest

from quaddom.core.exceptions import CoincidentAuxPoints, InsideSupport, SingularArgument
from quaddom.core.quadrature.cauchy import (
    CompactDensity,
    cauchy_kernel,
    cauchy_transform_compact,
    dbar_contour_check,
    generalized_cauchy_transform,
)


@pytest.fixture(scope="module")
def bump():
    """(1 − |ζ|²)² on the unit disk; its integral is π/3."""
    def fn(zeta):
        r2 = np.abs(zeta) ** 2
        return np.where(r2 < 1.0, (1.0 - r2) ** 2, 0.0)

    return CompactDensity.from_function(fn, -1 - 1j, 1 + 1j, 128, 128, supersample=2)


class TestCompactDensity:
    def test_total(self, bump):
        assert bump.total() == pytest.approx(np.pi / 3, rel=1e-3)

    def test_degenerate_rectangle(self):
        with pytest.raises(ValueError):
            CompactDensity.zeros(1 + 1j, 1 + 2j)

    def test_coarsened_preserves_total(self, bump):
        assert bump.coarsened().total() == pytest.approx(bump.total(), rel=1e-12)

    def test_coarsened_odd_grid(self):
        assert CompactDensity.zeros(0, 1 + 1j, nx=3, ny=4).coarsened() is None

    def test_contains(self, bump):
        assert bump.contains(0.5 + 0.5j)
        assert not bump.contains(2j)


def test_transform_of_radial_density(bump):
    # for |z| > 1 the radial density acts like its mass at the origin
    z = 2 + 1j
    assert cauchy_transform_compact(bump, z) == pytest.approx(-1.0 / (3.0 * z), rel=1e-3)


def test_transform_inside_support_rejected(bump):
    with pytest.raises(InsideSupport):
        cauchy_transform_compact(bump, 0.1j)


def test_conjugate_symmetry(bump):
    g = CompactDensity.from_function(lambda zeta: (zeta - 0.2) * np.exp(-4 * np.abs(zeta) ** 2),
                                     -1 + 0j, 1 + 2j, 32, 32)
    z = 1.5 + 3j
    assert cauchy_transform_compact(g.conjugated(), np.conj(z)) == pytest.approx(
        np.conj(cauchy_transform_compact(g, z)), abs=1e-13
    )


class TestKernel:
    def test_vanishes_at_auxiliary_points(self, bump):
        a, b = 3j, -3j
        assert generalized_cauchy_transform(bump, a, a, b) == 0
        assert generalized_cauchy_transform(bump, b, a, b) == 0

    def test_partial_fractions(self):
        zeta, z, a, b = 0.3 + 0.1j, 2 + 1j, 3j, -2.0
        expected = (1 / (zeta - z) + (z - b) / ((b - a) * (zeta - a))
                    + (z - a) / ((a - b) * (zeta - b))) / np.pi
        assert cauchy_kernel(zeta, z, a, b) == pytest.approx(expected, rel=1e-12)

    def test_generalized_differs_by_linear_term(self, bump):
        z, a, b = 2 + 1j, 3j, -2.5 + 0j
        c_z, c_a, c_b = (cauchy_transform_compact(bump, p) for p in (z, a, b))
        expected = c_z + (z - b) / (b - a) * c_a + (z - a) / (a - b) * c_b
        assert generalized_cauchy_transform(bump, z, a, b) == pytest.approx(expected, rel=1e-10)

    def test_kernel_vanishes_when_z_is_an_auxiliary_point(self):
        rng = np.random.default_rng(11)
        a, b = 1j, -1.0
        zeta = rng.uniform(-5.0, 5.0, 100) + 1j * rng.uniform(-5.0, 5.0, 100)
        assert np.min(np.abs(zeta - a)) > 1e-6 and np.min(np.abs(zeta - b)) > 1e-6
        assert np.max(np.abs(cauchy_kernel(zeta, a, a, b))) <= 1e-14

    def test_kernel_decays_like_inverse_cube(self):
        z, a, b = 0.5 + 0.5j, 1j, -1.0
        limit = abs((z - a) * (z - b)) / np.pi
        rng = np.random.default_rng(12)
        directions = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, 16))
        for radius in np.geomspace(1e2, 1e6, 9):
            zeta = radius * directions
            ratio = np.abs(cauchy_kernel(zeta, z, a, b)) * radius**3
            np.testing.assert_allclose(ratio, limit, rtol=0.05)

    def test_coincident_auxiliary_points(self):
        with pytest.raises(CoincidentAuxPoints):
            cauchy_kernel(0.0, 1.0, 2j, 2j)

    def test_singular_zeta(self):
        with pytest.raises(SingularArgument):
            cauchy_kernel(np.array([0.0, 1.0]), 1.0, 2j, -2j)


@pytest.mark.parametrize("aux", [None, (3 + 3j, -3 - 3j)])
def test_dbar_contour(bump, aux):
    check = dbar_contour_check(bump, aux=aux)
    assert check.expected == pytest.approx(-2j * bump.total())
    assert check.gap < 1e-8
