"""
Test Functions
==============
The admissible class f(z) = (z − z0)^(−k), k ≥ 3, with the pole z0 outside
the closed domain, and finite linear combinations of such functions.

Derivatives are exact:

    f^(j)(z) = (−1)^j · k(k+1)…(k+j−1) · (z − z0)^(−k−j)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np
from scipy.special import poch

__all__ = ["MIN_DECAY_ORDER", "TestFunction", "CombinedTestFunction", "TestFunctionLike"]

#: Smallest decay order for which the arc at infinity drops out with quadratic q
MIN_DECAY_ORDER: int = 3


@dataclass(frozen=True)
class TestFunction:
    """f(z) = (z − z0)^(−k)."""

    __test__ = False

    z0: complex
    k: int = 3

    def __post_init__(self) -> None:
        z0 = complex(self.z0)
        if not (math.isfinite(z0.real) and math.isfinite(z0.imag)):
            raise ValueError(f"z0 must be finite, got {self.z0!r}")
        if int(self.k) != self.k or self.k < MIN_DECAY_ORDER:
            raise ValueError(f"decay order k must be an integer >= {MIN_DECAY_ORDER}, got {self.k!r}")
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "k", int(self.k))

    def _offset(self, z):
        if np.ndim(z):
            return np.asarray(z, dtype=complex) - self.z0
        return complex(z) - self.z0

    def __call__(self, z):
        return self._offset(z) ** (-self.k)

    def derivative(self, z, j: int):
        """The ``j``-th derivative at ``z``."""
        if j == 0:
            return self(z)
        factor = (-1) ** j * float(poch(self.k, j))
        return factor * self._offset(z) ** (-self.k - j)

    def terms(self) -> Iterator[tuple[complex, TestFunction]]:
        yield 1.0 + 0j, self

    @property
    def poles(self) -> tuple[complex, ...]:
        return (self.z0,)

    @property
    def decay_order(self) -> int:
        return self.k


@dataclass(frozen=True)
class CombinedTestFunction:
    """Σ c_i · f_i for admissible test functions f_i."""

    __test__ = False

    terms_: tuple[tuple[complex, TestFunction], ...]

    def __post_init__(self) -> None:
        pairs = tuple((complex(c), f) for c, f in self.terms_)
        if not pairs:
            raise ValueError("a combined test function needs at least one term")
        object.__setattr__(self, "terms_", pairs)

    @classmethod
    def of(cls, *pairs: tuple[complex, TestFunction]) -> CombinedTestFunction:
        return cls(tuple(pairs))

    def __call__(self, z):
        return sum(c * f(z) for c, f in self.terms_)

    def derivative(self, z, j: int):
        return sum(c * f.derivative(z, j) for c, f in self.terms_)

    def terms(self) -> Iterator[tuple[complex, TestFunction]]:
        yield from self.terms_

    @property
    def poles(self) -> tuple[complex, ...]:
        return tuple(f.z0 for _, f in self.terms_)

    @property
    def decay_order(self) -> int:
        return min(f.k for _, f in self.terms_)


TestFunctionLike = Union[TestFunction, CombinedTestFunction]
