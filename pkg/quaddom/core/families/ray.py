"""
Ray Family
==========
ψ(w) = w² + h − ia/(w − ib) with

    8ab³ − 4b² + a² = 0,     h = b² − a/(2b),     b² + a/(2b) > 0.

For fixed a the cubic in b has positive roots only while a ≤ (4/27)^(1/4);
at that value the two positive roots merge at b = 1/(3a). Each positive root
falls into one of three shapes:

* ``TYPE_ONE``  b³ < a < 4b³: X has critical points away from t = 0,
* ``TYPE_TWO``  a < b³: X is monotone on each side of t = 0,
* ``LOOPED``    a > 4b³: ψ′ vanishes in the lower half-plane, not a domain.
"""
from __future__ import annotations

import logging
import math
from enum import Enum

from ..confmap.univalence import check_univalence_boundary
from ..exceptions import ParameterOutOfRange, UnclassifiedBoundary
from ..numerics.roots import cubic_roots
from .solution import FamilyKind, FamilySolution, family_spec

logger = logging.getLogger(__name__)

#: Largest a for which the cubic has positive roots
A_MAX: float = (4.0 / 27.0) ** 0.25

#: Slack on A_MAX accepted by :func:`solve_family3`
A_MAX_SLACK: float = 1.0e-12

#: Relative size of an imaginary part still read as rounding noise
REAL_ROOT_TOLERANCE: float = 1.0e-6

#: Distance from A_MAX inside which the two positive roots are treated as one
DOUBLE_ROOT_BAND: float = 1.0e-9

#: Half-width of the band around b³ and 4b³ left unclassified
TYPE_BOUNDARY_TOLERANCE: float = 1.0e-10

__all__ = [
    "A_MAX",
    "Family3Type",
    "family3_type",
    "family3_positive_roots",
    "solve_family3",
]


class Family3Type(str, Enum):
    TYPE_ONE = "type_one"
    TYPE_TWO = "type_two"
    LOOPED = "looped"


def family3_type(a: float, b: float, tol: float = TYPE_BOUNDARY_TOLERANCE) -> Family3Type:
    """Shape class of the root ``b`` for the parameter ``a``.

    Raises
    ------
    UnclassifiedBoundary
        If ``a`` is within ``tol`` (relative) of b³ or 4b³.
    """
    if not (a > 0 and b > 0):
        raise ParameterOutOfRange(f"type needs a, b > 0, got a={a!r}, b={b!r}")
    cube = b**3
    for edge in (cube, 4.0 * cube):
        if abs(a - edge) <= tol * max(1.0, edge):
            raise UnclassifiedBoundary(f"a = {a!r} sits on the type boundary {edge!r} for b = {b!r}")
    if a < cube:
        return Family3Type.TYPE_TWO
    if a < 4.0 * cube:
        return Family3Type.TYPE_ONE
    return Family3Type.LOOPED


def family3_positive_roots(a: float) -> list[float]:
    """Distinct real positive roots b of 8ab³ − 4b² + a² = 0, ascending.

    No range check on ``a``; above ``A_MAX`` the list is empty.
    """
    if abs(a - A_MAX) <= DOUBLE_ROOT_BAND:
        return [1.0 / (3.0 * a)]
    roots: list[float] = []
    for root in cubic_roots(8.0 * a, -4.0, 0.0, a**2):
        scale = max(1.0, abs(root))
        if abs(root.imag) > REAL_ROOT_TOLERANCE * scale or root.real <= 0:
            continue
        value = root.real
        if roots and abs(value - roots[-1]) <= REAL_ROOT_TOLERANCE * scale:
            roots[-1] = 0.5 * (roots[-1] + value)
            continue
        roots.append(value)
    return roots


def solve_family3(a: float, include_flagged: bool = False) -> list[FamilySolution]:
    """Ray-family members for the parameter ``a``.

    Every positive root is classified and screened for univalence. Roots that
    fail either step are logged as flagged and only returned when
    ``include_flagged`` is set.

    Raises
    ------
    ParameterOutOfRange
        If a ≤ 0 or a exceeds (4/27)^(1/4).
    """
    a = float(a)
    if not (math.isfinite(a) and a > 0):
        raise ParameterOutOfRange(f"ray family needs a > 0, got {a!r}")
    if a > A_MAX + A_MAX_SLACK:
        raise ParameterOutOfRange(f"ray family has no positive roots for a = {a!r} > {A_MAX!r}")

    members: list[FamilySolution] = []
    for b in family3_positive_roots(a):
        h = b**2 - a / (2.0 * b)
        if not h + a / b > 0:
            logger.info("ray root b=%g dropped: sign condition fails", b)
            continue
        spec = family_spec(FamilyKind.RAY, a, b, h)
        flag = ""
        try:
            if abs(a - A_MAX) <= DOUBLE_ROOT_BAND:
                raise UnclassifiedBoundary(f"b = {b!r} is the double root at a = {A_MAX!r}")
            tag = family3_type(a, b).value
        except UnclassifiedBoundary as exc:
            tag, flag = "unclassified", str(exc)
        if tag == Family3Type.LOOPED.value:
            flag = f"boundary loops (a > 4b³ = {4.0 * b**3!r})"
        verdict = check_univalence_boundary(spec)
        if not verdict.passed and not flag:
            flag = f"univalence screen failed: {verdict.reason}"
        if flag:
            logger.warning("ray member a=%g b=%g flagged: %s", a, b, flag)
            if not include_flagged:
                continue
        else:
            logger.info("ray member a=%g b=%.12g (%s)", a, b, tag)
        members.append(FamilySolution(
            kind=FamilyKind.RAY,
            param=a,
            a=a,
            b=b,
            h=h,
            spec=spec,
            derived={"type": tag},
            univalent=verdict.passed,
            flag=flag,
        ))
    return members
