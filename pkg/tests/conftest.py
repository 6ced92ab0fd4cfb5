# pytest is configured to add the repo root to sys.path via pyproject.toml
# [tool.pytest.ini_options] pythonpath = ["."]
# No manual sys.path manipulation required here.
"""Shared fixtures: the example maps used across the suite."""
import math

import pytest

from quaddom.core.confmap.map_spec import ConformalMapSpec, PoleGroup, QuadraticPoly
from quaddom.core.families.conchoid import solve_family1
from quaddom.core.families.parabola import solve_family2
from quaddom.core.numerics.integration import ToleranceSpec

#: a = 2(√2 − 1), the Conchoid pole weight for b = 1
CONCHOID_B1_A = 2.0 * (math.sqrt(2.0) - 1.0)
CONCHOID_B1_H = 1.0 - CONCHOID_B1_A / 2.0


@pytest.fixture
def tol():
    return ToleranceSpec(abs_tol=1e-13, rel_tol=1e-10)


@pytest.fixture
def conchoid_b1():
    """ψ(w) = w + ih + a/(w − i) with the constraints solved for b = 1."""
    return ConformalMapSpec(
        QuadraticPoly(A0=1j * CONCHOID_B1_H, A1=1.0),
        (PoleGroup(1j, (CONCHOID_B1_A,)),),
    )


@pytest.fixture
def conchoid_member():
    return solve_family1(1.0)


@pytest.fixture(scope="session")
def parabola_member():
    return solve_family2(0.05)
