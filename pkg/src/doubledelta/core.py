"""Potential parameterization, unit convention, and the E <-> k maps.

The potential is V(x) = v1*delta(x) + v2*delta(x - a) with the left delta
pinned at the origin. Units are fixed to 2m = hbar^2 = 1 throughout, so the
dispersion relation is simply E = k^2 and the delta strengths carry dimension
1/length. Positive strength is a barrier, negative a well. Attractive
problems are often stated in terms of well depths u_j = -v_j > 0; WellPair
holds that form and converts.

Branch convention: k = +sqrt(E) for E > 0 and k = +i*sqrt(-E) for E < 0, so
bound states sit at k = i*p with p > 0. Complex square roots elsewhere use
the principal branch.

All types are immutable after construction and all operations are pure, so
everything here is safe for concurrent use without synchronization.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


class InvalidParameterError(ValueError):
    """Arguments outside an operation's domain (bad strengths, a <= 0, ...)."""


class PoleHitError(ArithmeticError):
    """Evaluation requested at (or numerically on top of) a pole."""


class SearchIncompleteError(RuntimeError):
    """A root search could not produce the requested number of levels.

    The levels that were found are kept on the `found` attribute so callers
    can still report partial results.
    """

    def __init__(self, message: str, found: tuple = ()):
        super().__init__(message)
        self.found = found


@dataclass(frozen=True)
class DeltaPair:
    """Two delta strengths v1 (at x=0), v2 (at x=a) and their separation a.

    a = 0 is accepted only so the merged-pair limit can be expressed; every
    scattering or search operation requires a > 0 and raises otherwise.
    """

    v1: float
    v2: float
    a: float

    def __post_init__(self):
        for name in ("v1", "v2", "a"):
            x = getattr(self, name)
            if not math.isfinite(x):
                raise InvalidParameterError(f"{name} must be finite, got {x!r}")
        if self.a < 0:
            raise InvalidParameterError(f"separation a must be >= 0, got {self.a}")

    def swapped(self) -> "DeltaPair":
        """The same physical pair traversed from the other side."""
        return DeltaPair(self.v2, self.v1, self.a)

    def require_separated(self) -> None:
        if self.a <= 0:
            raise InvalidParameterError(
                "operation requires a > 0 (a = 0 only describes the merged pair)"
            )


@dataclass(frozen=True)
class WellPair:
    """Attractive pair written with positive depths u1, u2 (v_j = -u_j)."""

    u1: float
    u2: float
    a: float

    def __post_init__(self):
        for name in ("u1", "u2", "a"):
            x = getattr(self, name)
            if not math.isfinite(x):
                raise InvalidParameterError(f"{name} must be finite, got {x!r}")
        if self.u1 < 0 or self.u2 < 0:
            raise InvalidParameterError(
                f"well depths must be >= 0, got u1={self.u1}, u2={self.u2}"
            )
        if self.a < 0:
            raise InvalidParameterError(f"separation a must be >= 0, got {self.a}")

    def to_deltas(self) -> DeltaPair:
        return DeltaPair(-self.u1, -self.u2, self.a)


@dataclass(frozen=True)
class SpectrumEntry:
    """One discrete level of any of the three families.

    kind is "bound", "resonance" or "perfect-transmission". energy is the
    (possibly complex) level E = k^2; k is the associated wavenumber on the
    branch stated in the module docstring. residual is the magnitude of the
    defining condition at the accepted root. t_at_real_part, when set, is the
    transmission coefficient evaluated on the real axis at Re(energy).
    """

    kind: str
    energy: complex
    k: complex
    residual: float
    t_at_real_part: float | None = None

    def __post_init__(self):
        if self.kind not in ("bound", "resonance", "perfect-transmission"):
            raise InvalidParameterError(f"unknown spectrum kind {self.kind!r}")

    @property
    def width(self) -> float:
        """Full width Gamma = -2 Im(E); zero for real levels."""
        return -2.0 * self.energy.imag


def k_of_energy(E: float) -> complex:
    """Wavenumber for a real energy: sqrt(E) for E > 0, i*sqrt(-E) for E < 0."""
    if not math.isfinite(E):
        raise InvalidParameterError(f"energy must be finite, got {E!r}")
    if E >= 0.0:
        return complex(math.sqrt(E), 0.0)
    return complex(0.0, math.sqrt(-E))


def energy_of_k(k: complex) -> complex:
    """E = k^2 on any branch."""
    k = complex(k)
    if not (math.isfinite(k.real) and math.isfinite(k.imag)):
        raise InvalidParameterError(f"wavenumber must be finite, got {k!r}")
    return k * k


def principal_sqrt(z: complex) -> complex:
    """Principal-branch complex square root (cut on the negative real axis)."""
    return cmath.sqrt(z)
