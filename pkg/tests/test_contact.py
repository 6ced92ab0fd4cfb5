"""
Tests for quaddom.core.contact.field
"""
import math

import numpy as np
import pytest

from quaddom.core.confmap.boundary import Grading, trace_boundary
from quaddom.core.confmap.map_spec import ConformalMapSpec, PoleGroup, QuadraticPoly
from quaddom.core.contact.field import (
    ContactConfig,
    contact_equivalence_report,
    contact_field_boundary,
    contact_field_residue,
    cross_member_deviation,
)
from quaddom.core.exceptions import EvaluationBelowStrip, StripViolation, UnsupportedKind
from quaddom.core.families.conchoid import solve_family1
from quaddom.core.numerics.integration import ToleranceSpec
from quaddom.core.quadrature.distribution import schwarz_residue


# Second-order pole with an imaginary leading coefficient: ψ(-w̄) = -conj ψ(w)
MIRRORED_SPEC = ConformalMapSpec(QuadraticPoly(A1=1.0), (PoleGroup(1j, (0.1, 0.05j)),))


@pytest.fixture
def conchoid_cfg(conchoid_member):
    return ContactConfig.from_spec(conchoid_member.spec)


@pytest.fixture(scope="module")
def sampled_cfg():
    """The b = 1 Conchoid sampled finely on |t| <= 200."""
    spec = solve_family1(1.0).spec
    curve = trace_boundary(spec, -200.0, 200.0, 40001, Grading.UNIFORM).to_polyline()
    return ContactConfig.from_polyline(curve)


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

class TestContactConfig:
    def test_from_spec_reads_height_and_strip(self, conchoid_cfg):
        assert conchoid_cfg.h == pytest.approx(2.0 - math.sqrt(2.0), rel=1e-14)
        low, high = conchoid_cfg.strip
        assert low == pytest.approx(conchoid_cfg.h, abs=1e-6)
        assert high == pytest.approx(math.sqrt(2.0), rel=1e-6)
        assert conchoid_cfg.is_map

    def test_explicit_strip_must_contain_curve(self, conchoid_member):
        with pytest.raises(StripViolation):
            ContactConfig.from_spec(conchoid_member.spec, strip=(0.0, 1.0))
        cfg = ContactConfig.from_spec(conchoid_member.spec, strip=(0.0, 2.0))
        assert cfg.strip == (0.0, 2.0)

    def test_height_outside_strip(self, conchoid_member):
        with pytest.raises(StripViolation):
            ContactConfig(1.0, 5.0, (0.0, 2.0), conchoid_member.spec)

    def test_rejects_unordered_strip(self, conchoid_member):
        with pytest.raises(ValueError):
            ContactConfig(1.0, 1.0, (2.0, 0.0), conchoid_member.spec)

    def test_parabola_has_no_contact_line(self, parabola_member):
        with pytest.raises(UnsupportedKind):
            ContactConfig.from_spec(parabola_member.spec)

    def test_from_polyline_defaults(self, sampled_cfg):
        assert not sampled_cfg.is_map
        assert sampled_cfg.h == pytest.approx(2.0 - math.sqrt(2.0), abs=1e-4)
        assert sampled_cfg.strip[1] == pytest.approx(math.sqrt(2.0), rel=1e-6)


# ---------------------------------------------------------------------------
# Field
# ---------------------------------------------------------------------------

class TestField:
    @pytest.mark.parametrize("z", [5j, 2 + 3j, -4 + 1.5j])
    def test_conchoid_field_is_a_point_mass(self, conchoid_cfg, z):
        # the Conchoid's field equals that of a unit point at the origin
        expected = -1.0 / z
        assert contact_field_boundary(conchoid_cfg, z) == pytest.approx(expected, rel=1e-7)
        assert contact_field_residue(conchoid_cfg, z) == pytest.approx(expected, rel=1e-7)

    def test_field_at_5i(self, conchoid_cfg):
        assert contact_field_residue(conchoid_cfg, 5j) == pytest.approx(0.2j, rel=1e-9)

    def test_linear_in_sigma(self, conchoid_member):
        cfg = ContactConfig.from_spec(conchoid_member.spec, sigma=2.5)
        assert contact_field_boundary(cfg, 5j) == pytest.approx(0.5j, rel=1e-7)

    def test_zero_sigma(self, conchoid_member):
        cfg = ContactConfig.from_spec(conchoid_member.spec, sigma=0.0)
        assert contact_field_boundary(cfg, 5j) == 0
        assert contact_field_residue(cfg, 5j) == 0

    @pytest.mark.parametrize("z", [1j, 1.2 + 0.5j, 3 + 1.4j])
    def test_below_strip_top(self, conchoid_cfg, z):
        with pytest.raises(EvaluationBelowStrip):
            contact_field_boundary(conchoid_cfg, z)
        with pytest.raises(EvaluationBelowStrip):
            contact_field_residue(conchoid_cfg, z)

    def test_sampled_curve_approximates_map(self, sampled_cfg):
        assert contact_field_boundary(sampled_cfg, 5j) == pytest.approx(0.2j, rel=1e-3)

    def test_sampled_curve_has_no_residue_route(self, sampled_cfg):
        with pytest.raises(UnsupportedKind):
            contact_field_residue(sampled_cfg, 5j)

    @pytest.mark.parametrize("z", [1 + 2j, 2.5 + 3j, -0.7 + 4j])
    def test_mirrored_curve_gives_mirrored_field(self, z):
        cfg = ContactConfig.from_spec(MIRRORED_SPEC, sigma=1.5)
        mirror = -z.conjugate()
        for route in (contact_field_boundary, contact_field_residue):
            assert route(cfg, mirror) == pytest.approx(-route(cfg, z).conjugate(), rel=1e-7)

    @pytest.mark.parametrize("b", [0.5, 2.0])
    def test_decay_along_imaginary_axis(self, b):
        cfg = ContactConfig.from_spec(solve_family1(b).spec, sigma=2.0)
        y = np.geomspace(cfg.strip[1] + 1.0, 1e3, 12)
        field = np.array([abs(contact_field_residue(cfg, 1j * v)) for v in y])
        bound = np.max(field * y)
        assert np.all(field <= bound / y * (1 + 1e-12))
        assert bound == pytest.approx(2.0, rel=0.1)

    def test_far_field_tends_to_total_residue(self):
        cfg = ContactConfig.from_spec(MIRRORED_SPEC, sigma=1.5)
        _, total = schwarz_residue(MIRRORED_SPEC, 0)
        limit = 1.5 * abs(total)
        gaps = []
        for radius in (1e2, 1e3):
            z = radius * np.exp(0.3j * np.pi)
            gaps.append(abs(abs(contact_field_residue(cfg, z)) * radius - limit) / limit)
        assert gaps[0] < 5e-2
        assert gaps[1] < 5e-3
        assert gaps[1] < gaps[0]


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

class TestReports:
    def test_equivalence_report(self, conchoid_cfg):
        report = contact_equivalence_report(conchoid_cfg, [5j, 1 + 4j], ToleranceSpec(rel_tol=1e-7))
        assert report.passed
        assert report.max_gap < 1e-7
        frame = report.to_frame()
        assert list(frame.columns) == [
            "z_re", "z_im", "F_re", "F_im", "F_residue_re", "F_residue_im", "abs_gap", "rel_gap",
        ]
        assert len(frame) == 2
        assert frame["F_im"].iloc[0] == pytest.approx(0.2, rel=1e-7)
        summary = report.to_dict()
        assert summary["verdict"] == "pass"
        assert summary["threshold"] == 1e-7

    def test_polyline_report_has_no_gaps(self, sampled_cfg):
        report = contact_equivalence_report(sampled_cfg, [5j])
        assert report.passed
        frame = report.to_frame()
        assert frame["F_residue_re"].isna().all()
        assert frame["abs_gap"].isna().all()

    def test_conchoid_members_share_one_field(self):
        cfgs = [ContactConfig.from_spec(solve_family1(b).spec) for b in (0.5, 1.0, 2.0)]
        zs = [5j, 1 + 4j, -2 + 3j]
        report = cross_member_deviation(cfgs, zs)
        assert report.fields.shape == (3, 3)
        assert report.max_deviation < 1e-7
        np.testing.assert_allclose(report.fields[0], [-1.0 / z for z in zs], rtol=1e-7)

    def test_single_member_has_no_deviation(self, conchoid_cfg):
        assert cross_member_deviation([conchoid_cfg], [5j]).max_deviation == 0.0
