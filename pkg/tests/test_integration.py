"""
Tests for quaddom.core.numerics.integration
"""
import math

import pytest

from quaddom.core.exceptions import NonFiniteEvaluation, SlowDecay
from quaddom.core.numerics.integration import (
    MIN_TOLERANCE,
    ToleranceSpec,
    integrate_circle,
    integrate_interval,
    integrate_real_line,
    integrate_segment,
    residue_numeric,
)


# ---------------------------------------------------------------------------
# ToleranceSpec
# ---------------------------------------------------------------------------

class TestToleranceSpec:
    def test_defaults_are_valid(self):
        tol = ToleranceSpec()
        assert tol.abs_tol == pytest.approx(1e-12)
        assert tol.rel_tol == pytest.approx(1e-10)

    @pytest.mark.parametrize("kwargs", [
        {"abs_tol": 0.0},
        {"rel_tol": 1e-20},
        {"rel_tol": math.nan},
        {"max_subdivisions": 0},
        {"max_subdivisions": 2.5},
    ])
    def test_rejects_invalid_values(self, kwargs):
        with pytest.raises(ValueError):
            ToleranceSpec(**kwargs)

    def test_tightened_is_floored(self):
        tol = ToleranceSpec(abs_tol=1e-13, rel_tol=1e-13).tightened(1e6)
        assert tol.abs_tol == MIN_TOLERANCE
        assert tol.rel_tol == MIN_TOLERANCE

    def test_bound_uses_larger_allowance(self):
        tol = ToleranceSpec(abs_tol=1e-12, rel_tol=1e-8)
        assert tol.bound(1.0) == pytest.approx(1e-8)
        assert tol.bound(0.0) == pytest.approx(1e-12)


# ---------------------------------------------------------------------------
# Contours
# ---------------------------------------------------------------------------

def test_segment_of_constant_is_displacement(tol):
    assert integrate_segment(lambda s: 1.0, 0, 1 + 1j, tol) == pytest.approx(1 + 1j, abs=1e-12)


def test_segment_of_degenerate_segment_is_zero(tol):
    assert integrate_segment(lambda s: 1.0 / s, 2j, 2j, tol) == 0j


def test_segment_of_z_squared(tol):
    # ∫ s² ds from 1 to i = (i³ − 1)/3
    expected = ((1j) ** 3 - 1) / 3
    assert integrate_segment(lambda s: s * s, 1, 1j, tol) == pytest.approx(expected, abs=1e-12)


def test_circle_of_reciprocal_is_two_pi_i(tol):
    assert integrate_circle(lambda w: 1.0 / w, 0, 1.0, tol) == pytest.approx(2j * math.pi, abs=1e-10)


def test_circle_of_entire_function_vanishes(tol):
    assert abs(integrate_circle(lambda w: w**3 + 2.0, 1 + 1j, 0.5, tol)) < 1e-12


def test_circle_requires_positive_radius(tol):
    with pytest.raises(ValueError):
        integrate_circle(lambda w: w, 0, 0.0, tol)


def test_real_line_lorentzian(tol):
    assert integrate_real_line(lambda t: 1.0 / (1.0 + t * t), tol) == pytest.approx(math.pi, rel=1e-10)


def test_real_line_squared_lorentzian(tol):
    assert integrate_real_line(lambda t: 1.0 / (t * t + 4.0) ** 2, tol) == pytest.approx(math.pi / 16.0, rel=1e-10)


@pytest.mark.parametrize("f", [
    lambda t: t / (1.0 + t * t) ** 2,
    lambda t: t**3 / (1.0 + t**2) ** 3,
])
def test_real_line_odd_function_vanishes(tol, f):
    assert abs(integrate_real_line(f, tol)) < 1e-12


def test_real_line_scale_does_not_change_value(tol):
    f = lambda t: 1.0 / (t - 0.3j) ** 2 / (t + 2j)  # noqa: E731
    assert integrate_real_line(f, tol, scale=0.1) == pytest.approx(
        integrate_real_line(f, tol, scale=10.0), rel=1e-9
    )


def test_real_line_rejects_slow_decay(tol):
    with pytest.raises(SlowDecay):
        integrate_real_line(lambda t: 1.0 / (1.0 + abs(t)), tol)


def test_non_finite_integrand_raises(tol):
    with pytest.raises(NonFiniteEvaluation):
        integrate_interval(lambda x: math.nan, 0.0, 1.0, tol)


# ---------------------------------------------------------------------------
# Residues
# ---------------------------------------------------------------------------

def test_residue_of_simple_pole(tol):
    assert residue_numeric(lambda w: 1.0 / (w - 1j), 1j, 0.5, tol) == pytest.approx(1.0, abs=1e-12)


def test_residue_of_double_pole_with_numerator(tol):
    # Res_{w=0} e^w / w² = 1
    import cmath
    assert residue_numeric(lambda w: cmath.exp(w) / w**2, 0, 0.3, tol) == pytest.approx(1.0, abs=1e-11)
