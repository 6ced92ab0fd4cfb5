"""
Tests for quaddom.core.confmap.univalence
"""
import numpy as np
import pytest

from quaddom.core.confmap.map_spec import ConformalMapSpec, PoleGroup, QuadraticPoly
from quaddom.core.confmap.univalence import check_univalence_boundary, critical_points
from quaddom.core.families.solution import FamilyKind, family_spec


def test_conchoid_member_passes(conchoid_b1):
    verdict = check_univalence_boundary(conchoid_b1, n=4096, t_span=1e3)
    assert verdict.passed
    assert verdict.to_dict() == {"verdict": "pass"}


def test_conchoid_critical_points_lie_above_axis(conchoid_b1):
    # ψ′ = 1 − a/(w − i)² vanishes at w = i ± √a
    crit = critical_points(conchoid_b1)
    a = 2.0 * (np.sqrt(2.0) - 1.0)
    assert sorted(c.real for c in crit) == pytest.approx([-np.sqrt(a), np.sqrt(a)], abs=1e-10)
    assert crit.imag == pytest.approx([1.0, 1.0], abs=1e-10)


def test_negative_pole_weight_fails():
    # ψ′ = 1 + 10/(w − i)² vanishes at w = i(1 − √10) in the lower half-plane
    spec = ConformalMapSpec(QuadraticPoly(A1=1.0), (PoleGroup(1j, (-10.0,)),))
    verdict = check_univalence_boundary(spec)
    assert not verdict.passed
    assert verdict.location is not None
    assert verdict.to_dict()["verdict"] == "fail"


def test_parabola_member_passes(parabola_member):
    verdict = check_univalence_boundary(parabola_member.spec)
    assert verdict.passed


def test_looping_parabola_parameters_fail():
    a, b = 1.0, 0.05
    spec = family_spec(FamilyKind.PARABOLA, a, b, 2 * b + b**2 - a / (2 * b))
    verdict = check_univalence_boundary(spec)
    assert not verdict.passed


def test_polynomial_map_has_no_critical_points():
    assert critical_points(ConformalMapSpec.identity()).size == 0


def test_parabola_null_domain_critical_point_on_axis():
    # q = 2w + iw² has q′ = 0 at w = i
    crit = critical_points(ConformalMapSpec(QuadraticPoly(A1=2.0, A2=1j)))
    assert crit == pytest.approx(np.array([1j]))


def test_screen_needs_enough_points(conchoid_b1):
    with pytest.raises(ValueError):
        check_univalence_boundary(conchoid_b1, n=100)
