"""
core/exceptions.py
==================
Error hierarchy for quaddom.

Every error derives from :class:`QuadDomError` and carries an ``exit_code``
that the command-line front end returns.  Each family also subclasses the
builtin a caller would naturally catch (``ArithmeticError`` for numerical
breakdowns, ``ValueError`` for bad input), so library users can keep using
ordinary ``except ValueError`` blocks.
"""
from __future__ import annotations

__all__ = [
    "QuadDomError",
    # numerical
    "NumericalFailure",
    "SubdivisionLimit",
    "NonFiniteEvaluation",
    "SlowDecay",
    "NoSignChange",
    "DegenerateLeadingCoefficient",
    "IllConditionedJetSystem",
    "TruncationDominates",
    "ContourCollision",
    "NoPositiveRoot",
    # invalid input
    "InvalidArgument",
    "SingularArgument",
    "OnSegment",
    "NodeAtPole",
    "CoincidentAuxPoints",
    "InsideSupport",
    "NonzeroTotalCharge",
    "ParameterOutOfRange",
    "UnclassifiedBoundary",
    "UnsupportedKind",
    # documents, admissibility, geometry
    "SchemaError",
    "InadmissibleTestFunction",
    "GeometryError",
    "EvaluationBelowStrip",
    "StripViolation",
]


class QuadDomError(Exception):
    """Base class of every error raised by quaddom."""

    exit_code: int = 3


# ---------------------------------------------------------------------------
# Numerical breakdowns (exit code 3)
# ---------------------------------------------------------------------------

class NumericalFailure(QuadDomError, ArithmeticError):
    """A numerical kernel could not deliver a result to the requested accuracy."""


class SubdivisionLimit(NumericalFailure):
    """Adaptive quadrature exhausted its subdivision budget."""


class NonFiniteEvaluation(NumericalFailure):
    """An integrand returned NaN or Inf."""


class SlowDecay(NumericalFailure):
    """An integrand over the real line decays slower than |t|^-2."""


class NoSignChange(NumericalFailure):
    """A root bracket does not change sign."""


class DegenerateLeadingCoefficient(NumericalFailure):
    """The leading polynomial coefficient vanishes."""


class IllConditionedJetSystem(NumericalFailure):
    """The probe-function residue system has a vanishing diagonal entry."""


class TruncationDominates(NumericalFailure):
    """The discarded tail of an area integral exceeds the tolerance."""


class ContourCollision(NumericalFailure):
    """A residue contour encloses the preimage of the evaluation point."""


class NoPositiveRoot(NumericalFailure):
    """A family parameter equation has no positive solution."""


# ---------------------------------------------------------------------------
# Invalid arguments (exit code 3)
# ---------------------------------------------------------------------------

class InvalidArgument(QuadDomError, ValueError):
    """An argument violates the precondition of an operation."""


class SingularArgument(InvalidArgument):
    """Evaluation point coincides with a singularity."""


class OnSegment(SingularArgument):
    """Evaluation point lies on a segment of a logarithmic chain."""


class NodeAtPole(InvalidArgument):
    """A quadrature node coincides with the pole of a test function."""


class CoincidentAuxPoints(InvalidArgument):
    """The auxiliary points of the generalized Cauchy kernel coincide."""


class InsideSupport(InvalidArgument):
    """Cauchy transform requested inside the support of the density."""


class NonzeroTotalCharge(InvalidArgument):
    """Logarithmic charges do not sum to zero."""


class ParameterOutOfRange(InvalidArgument):
    """A family parameter lies outside the range where solutions exist."""


class UnclassifiedBoundary(InvalidArgument):
    """Parameters sit on the boundary between two solution types."""


class UnsupportedKind(InvalidArgument):
    """The requested operation is not defined for this family kind."""


# ---------------------------------------------------------------------------
# Documents, admissibility and geometry
# ---------------------------------------------------------------------------

class SchemaError(QuadDomError, ValueError):
    """A map-spec document, curve file or configuration is malformed."""

    exit_code = 2


class InadmissibleTestFunction(QuadDomError, ValueError):
    """A test function has its pole inside or on the domain."""

    exit_code = 4


class GeometryError(QuadDomError, ValueError):
    """Evaluation geometry is inconsistent with the contact configuration."""

    exit_code = 5


class EvaluationBelowStrip(GeometryError):
    """Field requested at a point not above the layer strip."""


class StripViolation(GeometryError):
    """The contact curve leaves its declared strip."""
