"""Resonances and perfect-transmission energies in the complex k plane.

Both families are zeros of entire functions of k, so they are found by
damped Newton iteration from a seed grid, deduplicated, and gap-checked
against the ~pi/a spacing the closed-form limits dictate.

Resonances solve

    (2ik - v1)(2ik - v2) - v1*v2*exp(2ika) = 0

and are kept only in the fourth quadrant (Re k > 0 > Im k) with Re(k^2) > 0;
poles in the upper half plane lie on the imaginary axis (bound states) and
are not part of this family. k = 0 solves the equation identically for
every potential and is discarded.

Perfect-transmission energies are the zeros of the reflection numerator

    2ik(v1 e^{-ika} + v2 e^{ika}) + 2i*v1*v2*sin(ka) = 0.

Exactly (anti)symmetric pairs have real zeros: the antisymmetric case gives
k = n*pi/a in closed form, and the symmetric case factors through
h(k) = 2k cos(ka) + v0 sin(ka), which is smooth (no tan poles) and carries
one root per pi-wide branch, plus one extra root below pi/(2a) for wells
with u0*a < 2. Any asymmetry pushes the zeros off the real axis; swapping
v1 and v2 conjugates the zero set, and mixed-sign pairs can have zeros in
either half plane, so the asymmetric search seeds both half planes and
reports the sign of Im(E) as found.

The symmetric hard box (one delta centered between rigid walls at +-a)
shares its even-parity positive spectrum with the symmetric zeros above;
hardbox_even_eigenvalues computes it independently from the tan form so the
correspondence can be checked between two distinct code paths. Its E = 0
zero-curvature state at u0*a = 2 is reported by zero_curvature_critical
rather than listed as an eigenvalue.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .core import DeltaPair, InvalidParameterError, SearchIncompleteError
from .numerics import (
    TOL_MERGE,
    TOL_RESIDUAL,
    Bracket,
    bisect,
    dedupe_and_sort,
    newton_complex,
)
from .scattering import coefficients

SYMMETRY_RTOL = 1e-12
CRITICAL_TOL = 1e-9

# discards the trivial k = 0 root; genuine roots in any regime of interest
# sit above this by orders of magnitude
K_MIN_KEEP = 1e-4


@dataclass(frozen=True)
class ResonanceEntry:
    """One resonance: E = energy with Re > 0 > Im, width = -2 Im(E)."""

    energy: complex
    k: complex
    width: float
    t_at_peak: float
    residual: float


@dataclass(frozen=True)
class PTEntry:
    """One perfect-transmission level.

    energy is real (imag exactly 0) for the symmetric and antisymmetric
    classes and complex otherwise; t_at_energy is T evaluated on the real
    axis at Re(energy).
    """

    energy: complex
    k: complex
    t_at_energy: float
    symmetry_class: str
    residual: float


class ZeroCurvatureCheck(NamedTuple):
    critical: bool
    deviation: float


def resonance_residual(pot: DeltaPair, k: complex) -> complex:
    k = complex(k)
    return (2j * k - pot.v1) * (2j * k - pot.v2) - pot.v1 * pot.v2 * cmath.exp(
        2j * k * pot.a
    )


def resonance_residual_derivative(pot: DeltaPair, k: complex) -> complex:
    k = complex(k)
    return 2j * (4j * k - pot.v1 - pot.v2) - 2j * pot.a * pot.v1 * pot.v2 * cmath.exp(
        2j * k * pot.a
    )


def pt_residual(pot: DeltaPair, k: complex) -> complex:
    k = complex(k)
    ka = k * pot.a
    return 2j * k * (
        pot.v1 * cmath.exp(-1j * ka) + pot.v2 * cmath.exp(1j * ka)
    ) + 2j * pot.v1 * pot.v2 * cmath.sin(ka)


def pt_residual_derivative(pot: DeltaPair, k: complex) -> complex:
    k = complex(k)
    ka = k * pot.a
    em = cmath.exp(-1j * ka)
    ep = cmath.exp(1j * ka)
    return (
        2j * (pot.v1 * em + pot.v2 * ep)
        + 2.0 * k * pot.a * (pot.v1 * em - pot.v2 * ep)
        + 2j * pot.a * pot.v1 * pot.v2 * cmath.cos(ka)
    )


def _require_pair(pot: DeltaPair) -> None:
    if pot.v1 == 0.0 or pot.v2 == 0.0:
        raise InvalidParameterError(
            "complex spectra need two nonzero strengths; a single delta has "
            "no resonances and no reflection zeros"
        )


def _classify_symmetry(pot: DeltaPair) -> str:
    scale = max(abs(pot.v1), abs(pot.v2))
    if abs(pot.v1 + pot.v2) <= SYMMETRY_RTOL * scale:
        return "antisymmetric"
    if abs(pot.v1 - pot.v2) <= SYMMETRY_RTOL * scale:
        return "symmetric_barriers" if pot.v1 > 0 else "symmetric_wells"
    return "asymmetric"


def _newton_sweep(
    f: Callable[[complex], complex],
    df: Callable[[complex], complex],
    seeds,
    keep: Callable[[complex], bool],
    tol_residual: float,
    deflate: tuple = (),
    exclusion_radius: float = 0.0,
) -> tuple[list[complex], list[float]]:
    roots: list[complex] = []
    residuals: list[float] = []
    for s in seeds:
        rep = newton_complex(
            f, df, s, tol_residual=tol_residual,
            deflate=deflate, exclusion_radius=exclusion_radius,
        )
        if rep.converged and keep(rep.root):
            roots.append(rep.root)
            residuals.append(rep.residual)
    return roots, residuals


def _fill_gaps(
    f, df, roots, keep, a, k_max, im_band, both_halves, tol_residual, tol_merge
) -> list[complex]:
    """Reseed stretches of Re k wider than 1.5*pi/a between found roots.

    New Newton runs deflate the known roots (Maehly correction) so they
    cannot reconverge onto them. At most three passes; each must add a root
    to continue.
    """
    im_lo, im_hi = im_band
    spacing = 1.5 * math.pi / a
    signs = (-1.0, 1.0) if both_halves else (-1.0,)
    for _ in range(3):
        gaps = []
        prev = 0.0
        for x in [z.real for z in roots] + [k_max]:
            if x - prev > spacing:
                gaps.append((prev, x))
            prev = x
        new_roots: list[complex] = []
        for lo, hi in gaps:
            span = hi - lo
            seeds = [
                complex(re, s * im)
                for re in np.linspace(lo + 0.2 * span, hi - 0.2 * span, 5)
                for im in np.geomspace(im_lo, im_hi, 3)
                for s in signs
            ]
            found, _ = _newton_sweep(
                f, df, seeds, keep, tol_residual,
                deflate=tuple(roots), exclusion_radius=1e-3,
            )
            new_roots.extend(found)
        if not new_roots:
            break
        before = len(roots)
        roots = dedupe_and_sort(list(roots) + new_roots, tol_merge)
        if len(roots) == before:
            break
    return roots


def resonances(
    pot: DeltaPair,
    n_max: int,
    *,
    tol_residual: float = TOL_RESIDUAL,
    tol_merge: float = TOL_MERGE,
    grid: tuple[int, int] = (40, 20),
    k_prime_max: float | None = None,
) -> list[ResonanceEntry]:
    """The n_max lowest resonances, ascending in Re(E).

    The seed rectangle spans Re k in [0.05, (n_max+2)*pi/a]; its depth
    defaults to the |Im k| at which |exp(2ika)| growth balances the 4k^2
    term, plus a 1/a floor, which brackets every zero of the condition.
    """
    pot.require_separated()
    _require_pair(pot)
    if n_max < 1:
        raise InvalidParameterError(f"n_max must be >= 1, got {n_max}")
    a = pot.a
    k_max = (n_max + 2) * math.pi / a
    if k_prime_max is None:
        # |exp(2ika)| must reach 4k^2/|v1 v2| at a zero, so weaker products
        # need deeper seeds
        vv = max(abs(pot.v1 * pot.v2), 1e-300)
        k_prime_max = max(1.0 / a, math.log(4.0 * k_max * k_max / vv) / (2.0 * a) + 1.0 / a)

    def f(k: complex) -> complex:
        return resonance_residual(pot, k)

    def df(k: complex) -> complex:
        return resonance_residual_derivative(pot, k)

    def keep(z: complex) -> bool:
        return (
            abs(z) > K_MIN_KEEP
            and z.real > K_MIN_KEEP
            and z.imag < -1e-9
            and (z * z).real > 0.0
        )

    n_re, n_im = grid
    seeds = [
        complex(re, -im)
        for im in np.geomspace(1e-3, k_prime_max, n_im)
        for re in np.linspace(0.05, k_max, n_re)
    ]
    roots, residuals = _newton_sweep(f, df, seeds, keep, tol_residual)
    roots = dedupe_and_sort(roots, tol_merge, residuals)
    roots = _fill_gaps(
        f, df, roots, keep, a, k_max, (1e-3, k_prime_max), False, tol_residual, tol_merge
    )

    entries = []
    for z in roots:
        E = z * z
        entries.append(
            ResonanceEntry(
                energy=E,
                k=z,
                width=-2.0 * E.imag,
                t_at_peak=coefficients(pot, E.real).T,
                residual=abs(f(z)),
            )
        )
    entries.sort(key=lambda e: e.energy.real)
    if len(entries) < n_max:
        raise SearchIncompleteError(
            f"found {len(entries)} of {n_max} requested resonances", tuple(entries)
        )
    return entries[:n_max]


def _symmetric_pt_wavenumbers(v0: float, a: float, n_max: int, tol_x: float) -> list[float]:
    """Real zeros of h(k) = 2k cos(ka) + v0 sin(ka), ascending.

    h is smooth and changes sign across every branch boundary ka =
    (n +- 1/2)*pi where it equals +-v0, so each branch is a valid bracket
    holding exactly one root. Wells with u0*a < 2 carry one extra root
    below pi/(2a); at u0*a = 2 that root collides with k = 0 (the
    zero-curvature criticality) and is excluded.
    """

    def h(k: float) -> float:
        return 2.0 * k * math.cos(k * a) + v0 * math.sin(k * a)

    ks: list[float] = []
    if v0 < 0.0 and (-v0) * a < 2.0:
        lo = 1e-9 / a
        hi = (0.5 * math.pi - 1e-9) / a
        ks.append(bisect(h, Bracket(lo, hi, h(lo), h(hi)), tol_x).root.real)
    n = 1
    while len(ks) < n_max:
        lo = (n - 0.5) * math.pi / a
        hi = (n + 0.5) * math.pi / a
        ks.append(bisect(h, Bracket(lo, hi, h(lo), h(hi)), tol_x).root.real)
        n += 1
    return ks


def _pt_entry(pot: DeltaPair, k: complex, symmetry_class: str) -> PTEntry:
    E = k * k
    return PTEntry(
        energy=E,
        k=k,
        t_at_energy=coefficients(pot, E.real).T,
        symmetry_class=symmetry_class,
        residual=abs(pt_residual(pot, k)),
    )


def perfect_transmission_energies(
    pot: DeltaPair,
    n_max: int,
    *,
    tol_residual: float = TOL_RESIDUAL,
    tol_x: float = 1e-13,
    tol_merge: float = TOL_MERGE,
    grid: tuple[int, int] = (40, 10),
) -> list[PTEntry]:
    """The n_max lowest perfect-transmission levels, ascending in Re(E).

    Exact (anti)symmetry (relative tolerance 1e-12) routes to the real
    closed forms / bisection; anything else runs the complex search over
    both half planes. Real entries carry T = 1 within 1e-10.
    """
    pot.require_separated()
    _require_pair(pot)
    if n_max < 1:
        raise InvalidParameterError(f"n_max must be >= 1, got {n_max}")
    a = pot.a
    cls = _classify_symmetry(pot)

    if cls == "antisymmetric":
        return [_pt_entry(pot, complex(n * math.pi / a), cls) for n in range(1, n_max + 1)]
    if cls != "asymmetric":
        ks = _symmetric_pt_wavenumbers(pot.v1, a, n_max, tol_x)
        return [_pt_entry(pot, complex(k), cls) for k in ks]

    k_max = (n_max + 2) * math.pi / a
    band = max(abs(math.log(abs(pot.v1 / pot.v2))) / (2.0 * a) + 1.5 / a, 2e-3)

    def f(k: complex) -> complex:
        return pt_residual(pot, k)

    def df(k: complex) -> complex:
        return pt_residual_derivative(pot, k)

    def keep(z: complex) -> bool:
        return abs(z) > K_MIN_KEEP and z.real > K_MIN_KEEP and (z * z).real > 0.0

    n_re, n_im = grid
    seeds = [
        complex(re, s * im)
        for im in np.geomspace(1e-3, band, n_im)
        for s in (-1.0, 1.0)
        for re in np.linspace(0.05, k_max, n_re)
    ]
    roots, residuals = _newton_sweep(f, df, seeds, keep, tol_residual)
    roots = dedupe_and_sort(roots, tol_merge, residuals)
    roots = _fill_gaps(
        f, df, roots, keep, a, k_max, (1e-3, band), True, tol_residual, tol_merge
    )

    entries = [_pt_entry(pot, z, cls) for z in roots]
    entries.sort(key=lambda e: e.energy.real)
    if len(entries) < n_max:
        raise SearchIncompleteError(
            f"found {len(entries)} of {n_max} requested perfect-transmission levels",
            tuple(entries),
        )
    return entries[:n_max]


def hardbox_even_eigenvalues(
    v0: float, a: float, n_max: int, tol_x: float = 1e-13
) -> list[float]:
    """Positive even-parity levels of one delta between rigid walls at +-a.

    Roots of tan(ka) + 2k/v0 = 0, one per pi-wide branch with 1e-6 margins
    around the tan poles, plus the sub-pi/(2a) root for wells with
    u0*a < 2. v0 = 0 gives the free even box levels ((2n-1)*pi/(2a))^2.
    Negative-energy states (wells with u0*a > 2) are outside this family:
    the list mirrors the positive perfect-transmission spectrum.
    """
    if a <= 0:
        raise InvalidParameterError(f"need a > 0, got {a}")
    if n_max < 1:
        raise InvalidParameterError(f"n_max must be >= 1, got {n_max}")
    if v0 == 0.0:
        return [((2 * n - 1) * 0.5 * math.pi / a) ** 2 for n in range(1, n_max + 1)]

    def t(k: float) -> float:
        return math.tan(k * a) + 2.0 * k / v0

    ks: list[float] = []
    if v0 < 0.0 and (-v0) * a < 2.0:
        lo = 1e-9 / a
        hi = (0.5 * math.pi - 1e-6) / a
        ks.append(bisect(t, Bracket(lo, hi, t(lo), t(hi)), tol_x).root.real)
    n = 1
    while len(ks) < n_max:
        lo = ((n - 0.5) * math.pi + 1e-6) / a
        hi = ((n + 0.5) * math.pi - 1e-6) / a
        ks.append(bisect(t, Bracket(lo, hi, t(lo), t(hi)), tol_x).root.real)
        n += 1
    return [k * k for k in ks]


def zero_curvature_critical(u0: float, a: float) -> ZeroCurvatureCheck:
    """Whether the hard-box well is at its E = 0 ground-state criticality.

    At u0*a = 2 the even-parity ground level of the box is exactly E = 0
    (wavefunction linear in x), the same parameter point at which the open
    pair's zero-energy reflection drops to 0.
    """
    if u0 <= 0 or a <= 0:
        raise InvalidParameterError("need u0 > 0 and a > 0")
    deviation = u0 * a - 2.0
    return ZeroCurvatureCheck(abs(deviation) <= CRITICAL_TOL, deviation)
