"""Reflection/transmission amplitudes of the double delta potential.

For V(x) = v1*delta(x) + v2*delta(x - a) and E = k^2 the closed forms are

    rho(k) = [2ik(v1 e^{-ika} + v2 e^{ika}) + 2i v1 v2 sin(ka)] / D(k)
    tau(k) = -4k^2 e^{-ika} / D(k)
    D(k)   = (2ik - v1)(2ik - v2) e^{-ika} - v1 v2 e^{ika}

valid for any complex k off the zeros of D. Passing v_j = -u_j gives the
attractive (well) forms directly. k = 0 is an indeterminate point of rho;
its limit is a critical phenomenon handled by zero_energy_reflection, which
classifies the parameter point and applies the appropriate closed form.

Negative energies use the continuation k = ip (p > 0), where tau collapses
to the real expression 4p^2 / g(p) with g the bound-state residual, so the
continued transmission has poles exactly at the bound levels.

The square-limit oracle rebuilds R and T with no shared code: each delta is
replaced by a square potential of height v_j/w and width w and the exact
slab transfer matrices are composed; the result converges to the closed
forms at rate O(w).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .bound_states import bound_states, signed_bound_residual
from .core import (
    DeltaPair,
    InvalidParameterError,
    PoleHitError,
    WellPair,
    k_of_energy,
)

POLE_EPS = 1e-14
TOL_CRIT = 1e-9
POLE_PROXIMITY_E = 1e-9


@dataclass(frozen=True)
class AmplitudePair:
    rho: complex
    tau: complex


@dataclass(frozen=True)
class ScanRow:
    """One (E, R, T) sample; R is None where only T is defined (E < 0)."""

    E: float
    R: float | None
    T: float


@dataclass(frozen=True)
class ZeroEnergyClass:
    """Classification of the k -> 0 reflection limit.

    case_tag is one of critical_symmetric (equal depths with u0*a = 2),
    critical_sum_rule (1/u1 + 1/u2 = a), or generic. rho0 is the limiting
    amplitude, r0 = rho0^2 the limiting reflection probability.
    """

    case_tag: str
    rho0: float
    r0: float


def amplitude_denominator(pot: DeltaPair, k: complex) -> complex:
    k = complex(k)
    ka = k * pot.a
    return (2j * k - pot.v1) * (2j * k - pot.v2) * cmath.exp(-1j * ka) - (
        pot.v1 * pot.v2
    ) * cmath.exp(1j * ka)


def amplitudes(pot: DeltaPair, k: complex) -> AmplitudePair:
    """rho and tau at complex wavenumber k (k != 0, off the poles)."""
    pot.require_separated()
    k = complex(k)
    if k == 0:
        raise InvalidParameterError(
            "k = 0 is indeterminate here; use zero_energy_reflection"
        )
    den = amplitude_denominator(pot, k)
    if abs(den) < POLE_EPS:
        raise PoleHitError(f"amplitude pole at k = {k!r} (|denominator| = {abs(den):.3e})")
    ka = k * pot.a
    num_rho = 2j * k * (
        pot.v1 * cmath.exp(-1j * ka) + pot.v2 * cmath.exp(1j * ka)
    ) + 2j * pot.v1 * pot.v2 * cmath.sin(ka)
    num_tau = -4.0 * k * k * cmath.exp(-1j * ka)
    return AmplitudePair(rho=num_rho / den, tau=num_tau / den)


def reflection_amplitude(pot: DeltaPair, k: complex) -> complex:
    return amplitudes(pot, k).rho


def transmission_amplitude(pot: DeltaPair, k: complex) -> complex:
    return amplitudes(pot, k).tau


def coefficients(pot: DeltaPair, E: float) -> ScanRow:
    """R = |rho|^2 and T = |tau|^2 at real E > 0."""
    if not (E > 0) or not math.isfinite(E):
        raise InvalidParameterError(f"coefficients need real E > 0, got {E!r}")
    amp = amplitudes(pot, k_of_energy(E))
    return ScanRow(E=E, R=abs(amp.rho) ** 2, T=abs(amp.tau) ** 2)


def _depths(pot: DeltaPair | WellPair) -> tuple[float, float, float]:
    if isinstance(pot, WellPair):
        u1, u2, a = pot.u1, pot.u2, pot.a
    else:
        u1, u2, a = -pot.v1, -pot.v2, pot.a
    if u1 <= 0 or u2 <= 0 or a <= 0:
        raise InvalidParameterError(
            "zero-energy classification needs two attractive strengths and a > 0"
        )
    return u1, u2, a


def zero_energy_reflection(pot: DeltaPair | WellPair) -> ZeroEnergyClass:
    """The k -> 0 limit of rho for a pair of wells.

    Generically rho -> -1 (total reflection). On the measure-zero critical
    manifolds the limit differs: equal depths with u0*a = 2 give rho -> 0,
    and the sum rule 1/u1 + 1/u2 = a gives the closed form
    x(x - 2)/(x^2 - 2x + 2) with x = u2*a. Equal depths at u0*a = 2 satisfy
    both and the symmetric form takes precedence (the sum-rule form agrees,
    evaluating to 0 at x = 2).
    """
    u1, u2, a = _depths(pot)
    if abs(u1 - u2) <= TOL_CRIT * max(u1, u2) and abs(u1 * a - 2.0) <= 2.0 * TOL_CRIT:
        return ZeroEnergyClass("critical_symmetric", 0.0, 0.0)
    if abs(1.0 / u1 + 1.0 / u2 - a) <= TOL_CRIT * a:
        x = u2 * a
        # denominator = (x-1)^2 + 1 >= 1, no cancellation
        rho0 = x * (x - 2.0) / (x * x - 2.0 * x + 2.0)
        return ZeroEnergyClass("critical_sum_rule", rho0, rho0 * rho0)
    return ZeroEnergyClass("generic", -1.0, 1.0)


def limit_consistency_check(pot: DeltaPair | WellPair, k_small: float) -> float:
    """| |rho(k_small)|^2 - r0 |, the direct small-k probe of the limit."""
    if not (0.0 < k_small <= 1e-3):
        raise InvalidParameterError(f"need 0 < k_small <= 1e-3, got {k_small!r}")
    u1, u2, a = _depths(pot)
    deltas = DeltaPair(-u1, -u2, a)
    r = abs(reflection_amplitude(deltas, complex(k_small))) ** 2
    return abs(r - zero_energy_reflection(deltas).r0)


@lru_cache(maxsize=256)
def _cached_bound_energies(v1: float, v2: float, a: float) -> tuple[float, ...]:
    if v1 >= 0.0 and v2 >= 0.0:
        return ()
    return tuple(e.energy.real for e in bound_states(DeltaPair(v1, v2, a)))


def transmission_negative_energy(
    pot: DeltaPair, E: float, *, bound_energies: tuple[float, ...] | None = None
) -> float:
    """Analytic continuation |tau(ip)|^2 at E = -p^2 < 0.

    Diverges at each bound level; evaluation within 1e-9 of one raises
    PoleHitError. bound_energies may be passed in to avoid recomputing the
    spectrum inside scans.
    """
    pot.require_separated()
    if not (E < 0) or not math.isfinite(E):
        raise InvalidParameterError(f"continuation needs real E < 0, got {E!r}")
    if bound_energies is None:
        bound_energies = _cached_bound_energies(pot.v1, pot.v2, pot.a)
    for eb in bound_energies:
        if abs(E - eb) < POLE_PROXIMITY_E:
            raise PoleHitError(f"E = {E} is on the bound level {eb}")
    p = math.sqrt(-E)
    g = signed_bound_residual(pot, p)
    if g == 0.0:
        raise PoleHitError(f"E = {E} sits exactly on an amplitude pole")
    t = 4.0 * p * p / g
    return t * t


def _slab_matrix(V: float, d: float, E: float) -> tuple[complex, complex, complex, complex]:
    """Exact (psi, psi') transfer matrix across a constant slab.

    Entries are entire functions of q^2 = E - V, so the V = E and q -> 0
    cases need no special handling beyond the sinc series.
    """
    q2 = complex(E - V)
    q = cmath.sqrt(q2)
    th = q * d
    c = cmath.cos(th)
    if abs(th) < 1e-4:
        th2 = th * th
        sinc = 1.0 - th2 / 6.0 + th2 * th2 / 120.0
    else:
        sinc = cmath.sin(th) / th
    s = d * sinc
    return (c, s, -q2 * s, c)


def _mat_mul(m: tuple, n: tuple) -> tuple:
    return (
        m[0] * n[0] + m[1] * n[2],
        m[0] * n[1] + m[1] * n[3],
        m[2] * n[0] + m[3] * n[2],
        m[2] * n[1] + m[3] * n[3],
    )


def oracle_square_limit(pot: DeltaPair, E: float, w: float) -> ScanRow:
    """R, T from the square-potential regularization of the deltas.

    Each delta becomes a slab of height v_j/w and width w centered at its
    position; the exact slab matrices are composed and matched to plane
    waves. Converges to coefficients(pot, E) at rate O(w). This path shares
    no expressions with the closed forms, so it serves as an independent
    oracle for them.
    """
    pot.require_separated()
    if not (E > 0) or not math.isfinite(E):
        raise InvalidParameterError(f"oracle needs real E > 0, got {E!r}")
    if not (0.0 < w < pot.a / 4.0):
        raise InvalidParameterError(f"need 0 < w < a/4, got w = {w!r}")
    k = math.sqrt(E)
    m1 = _slab_matrix(pot.v1 / w, w, E)
    mf = _slab_matrix(0.0, pot.a - w, E)
    m2 = _slab_matrix(pot.v2 / w, w, E)
    m11, m12, m21, m22 = _mat_mul(m2, _mat_mul(mf, m1))
    den = k * k * m12 - m21 + 1j * k * (m11 + m22)
    rho = (k * k * m12 + m21 + 1j * k * (m22 - m11)) / den
    tau = m11 * (1.0 + rho) + 1j * k * m12 * (1.0 - rho)
    return ScanRow(E=E, R=abs(rho) ** 2, T=abs(tau) ** 2)
