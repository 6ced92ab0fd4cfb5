"""
Tests for quaddom.core.quadrature.distribution and testfunctions
"""
import cmath
import math

import numpy as np
import pytest

from quaddom.core.confmap.evaluation import eval_map, segment_log_term
from quaddom.core.confmap.map_spec import ConformalMapSpec, PoleGroup, QuadraticPoly, SegmentChain
from quaddom.core.exceptions import IllConditionedJetSystem, NodeAtPole, NonzeroTotalCharge
from quaddom.core.families.conchoid import solve_family1
from quaddom.core.families.parabola import solve_family2
from quaddom.core.families.ray import solve_family3
from quaddom.core.quadrature.distribution import (
    PointNode,
    QuadratureDistribution,
    SegmentNode,
    chain_from_charges,
    derive_distribution,
    evaluate_distribution,
    log_to_segments,
    schwarz_residue,
)
from quaddom.core.quadrature.testfunctions import CombinedTestFunction, TestFunction


# ---------------------------------------------------------------------------
# Test functions
# ---------------------------------------------------------------------------

class TestTestFunction:
    @pytest.mark.parametrize("k", [0, 1, 2, 3.5])
    def test_rejects_low_or_fractional_order(self, k):
        with pytest.raises(ValueError):
            TestFunction(3j, k)

    def test_rejects_non_finite_pole(self):
        with pytest.raises(ValueError):
            TestFunction(complex(math.inf, 0), 3)

    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_derivatives_match_finite_differences(self, j):
        f = TestFunction(2 + 3j, 3)
        z, h = 0.5 - 0.25j, 1e-4
        lower = f.derivative(z - h, j - 1)
        upper = f.derivative(z + h, j - 1)
        assert f.derivative(z, j) == pytest.approx((upper - lower) / (2 * h), rel=1e-6)

    def test_combined_is_linear(self):
        f, g = TestFunction(3j, 3), TestFunction(-1 + 4j, 5)
        combo = CombinedTestFunction.of((2.0, f), (-1j, g))
        z = 0.3 - 0.2j
        assert combo(z) == pytest.approx(2.0 * f(z) - 1j * g(z))
        assert combo.derivative(z, 2) == pytest.approx(2.0 * f.derivative(z, 2) - 1j * g.derivative(z, 2))
        assert combo.poles == (3j, -1 + 4j)
        assert combo.decay_order == 3


# ---------------------------------------------------------------------------
# Derivation
# ---------------------------------------------------------------------------

def test_conchoid_distribution_is_pi_delta(conchoid_b1, tol):
    T = derive_distribution(conchoid_b1, tol)
    assert len(T.points) == 1 and not T.segments
    node = T.points[0]
    assert abs(node.beta) < 1e-12
    assert node.weights[0] == pytest.approx(math.pi, abs=1e-9)


def test_parabola_member_weight(parabola_member, tol):
    node = derive_distribution(parabola_member.spec, tol).points[0]
    assert abs(node.beta) < 1e-10
    assert node.weights[0] == pytest.approx(math.pi, rel=1e-9)


def test_second_order_pole_gives_two_weights(tol):
    spec = ConformalMapSpec(QuadraticPoly(A1=1.0), (PoleGroup(1j, (0.1, 0.05)),))
    node = derive_distribution(spec, tol).points[0]
    assert len(node.weights) == 2
    assert node.beta == pytest.approx(eval_map(spec, -1j))


def test_chain_gives_segment_node(tol):
    chain = SegmentChain((-0.5 + 1j, 0.5 + 1j), (0.1 + 0.02j,))
    spec = ConformalMapSpec(QuadraticPoly(A1=1.0), segments=(chain,))
    T = derive_distribution(spec, tol)
    assert not T.points
    (seg,) = T.segments
    assert seg.weight == pytest.approx(math.pi * (0.1 - 0.02j))
    assert seg.delta_from == pytest.approx(eval_map(spec, -0.5 - 1j))
    assert seg.delta_to == pytest.approx(eval_map(spec, 0.5 - 1j))


def test_polynomial_map_has_empty_distribution():
    T = derive_distribution(ConformalMapSpec.identity())
    assert T.is_empty
    assert evaluate_distribution(T, TestFunction(3j, 3)) == 0


def test_critical_pole_preimage_is_ill_conditioned():
    # ψ′(−i) = 1 + a/4 vanishes for a = −4
    spec = ConformalMapSpec(QuadraticPoly(A1=1.0), (PoleGroup(1j, (-4.0,)),))
    with pytest.raises(IllConditionedJetSystem):
        derive_distribution(spec)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def test_point_mass_evaluation():
    T = QuadratureDistribution(points=(PointNode(0j, (math.pi,)),))
    value = evaluate_distribution(T, TestFunction(3j, 3))
    assert value == pytest.approx(-1j * math.pi / 27, abs=1e-15)
    assert value.imag == pytest.approx(-0.116355283, abs=1e-9)


def test_derivative_weight_evaluation():
    T = QuadratureDistribution(points=(PointNode(1.0, (0.0, 2.0)),))
    f = TestFunction(3j, 3)
    assert evaluate_distribution(T, f) == pytest.approx(2.0 * f.derivative(1.0, 1))


def test_segment_evaluation(tol):
    T = QuadratureDistribution(segments=(SegmentNode(-1.0, 1.0, 1.0),))
    f = TestFunction(2j, 3)
    # ∫_{-1}^{1} (s − 2i)^-3 ds = [−½ (s − 2i)^-2]
    expected = -0.5 * ((1 - 2j) ** -2 - (-1 - 2j) ** -2)
    assert evaluate_distribution(T, f, tol) == pytest.approx(expected, abs=1e-12)


def test_pole_on_node_rejected():
    T = QuadratureDistribution(points=(PointNode(3j, (1.0,)),))
    with pytest.raises(NodeAtPole):
        evaluate_distribution(T, TestFunction(3j, 3))


def test_total_mass(conchoid_b1):
    assert derive_distribution(conchoid_b1).total_mass() == pytest.approx(math.pi, abs=1e-9)


# ---------------------------------------------------------------------------
# Schwarz residues
# ---------------------------------------------------------------------------

def test_conchoid_schwarz_residue(conchoid_b1, tol):
    location, residue = schwarz_residue(conchoid_b1, 0, tol)
    assert abs(location) < 1e-12
    assert residue == pytest.approx(1.0, abs=1e-10)


def test_parabola_schwarz_residue(parabola_member, tol):
    location, residue = schwarz_residue(parabola_member.spec, 0, tol)
    assert abs(location) < 1e-8
    assert residue == pytest.approx(1.0, abs=1e-8)


def test_ray_schwarz_residue(tol):
    (member,) = solve_family3(0.3)
    location, residue = schwarz_residue(member.spec, 0, tol)
    assert abs(location) < 1e-8
    assert residue == pytest.approx(1.0, abs=1e-8)


def test_schwarz_residue_index_checked(conchoid_b1):
    with pytest.raises(IndexError):
        schwarz_residue(conchoid_b1, 1)


# ---------------------------------------------------------------------------
# Logarithmic charges
# ---------------------------------------------------------------------------

def test_log_to_segments_partial_sums():
    assert log_to_segments([1.0, 2.0, -3.0], [1j, 2j, 3j]) == pytest.approx([1.0, 3.0])


def test_nonzero_total_charge():
    with pytest.raises(NonzeroTotalCharge):
        log_to_segments([1.0, -0.5], [1j, 2j])


def test_chain_from_charges_matches_logarithms():
    gammas, nodes = [0.5, -0.2, -0.3], [1j, 1 + 2j, -1 + 1.5j]
    chain = chain_from_charges(gammas, nodes)
    spec = ConformalMapSpec(QuadraticPoly(A1=1.0), segments=(chain,))
    w = 0.4 - 0.9j
    direct = w + sum(g * cmath.log(w - d) for g, d in zip(gammas, nodes))
    # each Log of a ratio may differ from the difference of logs by 2πi·n; 10·c_k is integral
    diff = eval_map(spec, w) - direct
    assert abs(cmath.exp(10 * diff) - 1) < 1e-10


def test_log_sum_matches_segment_sum():
    # nodes in ℍ₊ and w in ℍ₋: every Log of a ratio splits into a difference of Logs
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(2, 7))
        nodes = rng.uniform(-3.0, 3.0, n) + 1j * rng.uniform(0.5, 3.0, n)
        gammas = rng.normal(size=n) + 1j * rng.normal(size=n)
        gammas -= gammas.mean()
        weights = log_to_segments(gammas, nodes)
        w = rng.uniform(-5.0, 5.0, 50) - 1j * rng.uniform(0.1, 5.0, 50)
        log_sum = sum(g * np.log(w - d) for g, d in zip(gammas, nodes))
        segment_sum = sum(c * segment_log_term(nodes[k], nodes[k + 1], w) for k, c in enumerate(weights))
        np.testing.assert_allclose(segment_sum, log_sum, rtol=0, atol=1e-12)


def _solved_members():
    members = [solve_family1(b) for b in (0.5, 1.0, 2.0)]
    members += [solve_family2(b) for b in (0.1, 0.05, 0.02)]
    members += solve_family3(0.3) + solve_family3(0.6)
    return members


@pytest.mark.parametrize("member", _solved_members(), ids=lambda m: f"{m.kind.name.lower()}-{m.param:g}")
def test_schwarz_residue_is_normalized_and_radius_free(member, tol):
    radii = [fraction * member.b for fraction in (0.2, 0.5, 0.9)]
    results = [schwarz_residue(member.spec, 0, tol, radius=r) for r in radii]
    for location, residue in results:
        assert abs(location) < 1e-8
        assert residue == pytest.approx(1.0, abs=1e-8)
    assert abs(results[0][1] - results[-1][1]) < 1e-8
