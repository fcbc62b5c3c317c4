"""Bound levels of the double delta potential and their closed-form limits.

The levels are the p > 0 roots of

    g(p) = (2p + v1)(2p + v2) - v1*v2*exp(-2pa),   E = -p^2,

written for signed strengths so mixed well/barrier pairs work unchanged. The
code evaluates g in the expanded form 4p^2 + 2p(v1+v2) - v1*v2*expm1(-2pa),
which is identical analytically but cancellation-free near p = 0, where
g always has a spurious root. A pair of wells holds at most two levels; the
second exists iff a > 1/u1 + 1/u2 (strictly; the state at exact threshold is
not normalizable and is counted absent).

The general solver is a bracket scan plus bisection. Near-degenerate
symmetric pairs at large u0*a sit closer than any fixed grid resolves
(gap ~ u0*exp(-u0*a/2)), so the scan is supplemented by targeted probes at
the large-separation limits p = |v_j|/2 where g is provably negative between
such a pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    DeltaPair,
    InvalidParameterError,
    SearchIncompleteError,
    SpectrumEntry,
    WellPair,
)
from .numerics import TOL_X, Bracket, bisect, scan_brackets

P_MIN = 1e-8
SCAN_POINTS = 2000

# roots from different routes agree to ~tol_x; distinct levels resolvable in
# double precision stay > ~1e-7 apart
MERGE_TOL = 1e-10


def _as_deltas(pot: DeltaPair | WellPair) -> DeltaPair:
    if isinstance(pot, WellPair):
        return pot.to_deltas()
    if isinstance(pot, DeltaPair):
        return pot
    raise InvalidParameterError(f"expected DeltaPair or WellPair, got {type(pot).__name__}")


def signed_bound_residual(pot: DeltaPair, p: float) -> float:
    """g(p) for signed strengths, stable against the p -> 0 cancellation."""
    return 4.0 * p * p + 2.0 * p * (pot.v1 + pot.v2) - pot.v1 * pot.v2 * math.expm1(
        -2.0 * p * pot.a
    )


def bound_state_residual(well: WellPair, p: float) -> float:
    """(2p - u1)(2p - u2) - u1*u2*exp(-2pa), the well form of g(p)."""
    return signed_bound_residual(_as_deltas(well), p)


def _probe_roots(
    f, c: float, lo_lim: float, hi_lim: float, tol_x: float
) -> list[float]:
    """Rescue a root pair around a candidate dip location c.

    If f(c) < 0, walk outward with doubling steps until f turns positive on
    each side, then bisect the two brackets. f(c) == 0.0 exactly means the
    pair has merged below float resolution; c itself is the (double) root.
    """
    fc = f(c)
    if fc > 0.0:
        return []
    if fc == 0.0:
        return [c]
    roots: list[float] = []
    for direction in (-1.0, +1.0):
        h = 1e-13 * max(1.0, abs(c))
        edge = None
        while True:
            x = c + direction * h
            if direction < 0 and x <= lo_lim:
                x = lo_lim
            if direction > 0 and x >= hi_lim:
                x = hi_lim
            fx = f(x)
            if fx > 0.0:
                edge = (x, fx)
                break
            if x in (lo_lim, hi_lim):
                break
            h *= 2.0
        if edge is None:
            continue
        x, fx = edge
        if direction < 0:
            br = Bracket(x, c, fx, fc)
        else:
            br = Bracket(c, x, fc, fx)
        roots.append(bisect(f, br, tol_x).root.real)
    return roots


def bound_states(pot: DeltaPair | WellPair, tol_x: float = TOL_X) -> list[SpectrumEntry]:
    """All bound levels, ascending in energy (ground state first).

    Returns [] when neither strength is attractive, and for a well paired
    with a barrier strong enough to unbind it (a <= 1/u - 1/w).  Raises for
    the free particle (both zero) and for a <= 0.
    """
    pot = _as_deltas(pot)
    pot.require_separated()
    if pot.v1 == 0.0 and pot.v2 == 0.0:
        raise InvalidParameterError("free particle has no bound-state problem")
    if pot.v1 >= 0.0 and pot.v2 >= 0.0:
        return []
    if pot.v1 * pot.v2 < 0.0:
        # well + barrier: the residual is convex in p, so a root off the
        # origin exists iff the slope at p = 0 is negative, i.e.
        # a > 1/u - 1/w with u the depth and w the barrier strength
        slope0 = 2.0 * (pot.v1 + pot.v2) + 2.0 * pot.a * pot.v1 * pot.v2
        if slope0 >= 0.0:
            return []

    def g(p: float) -> float:
        return signed_bound_residual(pot, p)

    p_max = 0.5 * (abs(pot.v1) + abs(pot.v2)) + 1.0
    roots = [bisect(g, br, tol_x).root.real for br in scan_brackets(g, P_MIN, p_max, SCAN_POINTS)]

    for v in (pot.v1, pot.v2):
        if v >= 0.0:
            continue
        c = 0.5 * abs(v)
        if not (P_MIN < c < p_max):
            continue
        if any(r < c for r in roots) and any(r > c for r in roots):
            continue
        roots.extend(_probe_roots(g, c, P_MIN, p_max, tol_x))

    merged: list[float] = []
    for r in sorted(roots):
        if not merged or r - merged[-1] > MERGE_TOL:
            merged.append(r)

    if not merged:
        raise SearchIncompleteError(
            "attractive configuration must bind at least one level; search found none"
        )
    entries = [
        SpectrumEntry(
            kind="bound",
            energy=complex(-p * p, 0.0),
            k=complex(0.0, p),
            residual=abs(g(p)),
        )
        for p in sorted(merged, reverse=True)
    ]
    return entries


def merged_delta_energy(U1: float, U2: float) -> float:
    """Single level of the a -> 0 limit, a delta of combined depth U1 + U2."""
    s = U1 + U2
    if not (math.isfinite(s) and s > 0.0):
        raise InvalidParameterError(f"merged pair binds only for U1 + U2 > 0, got {s}")
    return -0.25 * s * s


def wall_limit_eigenvalue(u1: float, a: float, tol_x: float = TOL_X) -> float | None:
    """Level of a well of depth u1 at distance a from a rigid wall.

    Solves exp(-2pa) = 1 - 2p/u1 on p in (0, u1/2); a state exists only for
    u1*a > 1, otherwise None.
    """
    if u1 <= 0 or a <= 0:
        raise InvalidParameterError("wall limit needs u1 > 0 and a > 0")
    if u1 * a <= 1.0:
        return None

    def w(p: float) -> float:
        return math.expm1(-2.0 * p * a) + 2.0 * p / u1

    lo, hi = P_MIN, 0.5 * u1
    br = Bracket(lo, hi, w(lo), w(hi))
    p = bisect(w, br, tol_x).root.real
    return -p * p


def symmetric_factored_roots(
    u0: float, a: float, tol_x: float = TOL_X
) -> tuple[float, float | None]:
    """Equal-depth pair levels from the two factored parity equations.

    Ground state solves exp(-pa) = 2p/u0 - 1 (always present); the excited
    state solves exp(-pa) = 1 - 2p/u0 and exists iff u0*a > 2.
    """
    if u0 <= 0 or a <= 0:
        raise InvalidParameterError("factored form needs u0 > 0 and a > 0")

    def even(p: float) -> float:
        return math.exp(-p * a) - 2.0 * p / u0 + 1.0

    lo, hi = 0.5 * u0, u0
    p0 = bisect(even, Bracket(lo, hi, even(lo), even(hi)), tol_x).root.real
    e0 = -p0 * p0

    if u0 * a <= 2.0:
        return e0, None

    def odd(p: float) -> float:
        return math.expm1(-p * a) + 2.0 * p / u0

    lo, hi = P_MIN, 0.5 * u0
    p1 = bisect(odd, Bracket(lo, hi, odd(lo), odd(hi)), tol_x).root.real
    return e0, -p1 * p1


def second_level_threshold(u1: float, u2: float) -> float:
    """Separation a* = 1/u1 + 1/u2 beyond which a second level binds."""
    if u1 <= 0 or u2 <= 0:
        raise InvalidParameterError("threshold defined for positive depths only")
    return 1.0 / u1 + 1.0 / u2


def large_separation_limits(u1: float, u2: float) -> tuple[float, float]:
    """a -> infinity limits: each well binds independently at -u^2/4."""
    if u1 <= 0 or u2 <= 0:
        raise InvalidParameterError("limits defined for positive depths only")
    lo, hi = max(u1, u2), min(u1, u2)
    return -0.25 * lo * lo, -0.25 * hi * hi


@dataclass(frozen=True)
class LevelCurvePoint:
    """One grid point of a parameter sweep: up to two levels, E0 <= E1."""

    sweep_value: float
    levels: tuple[float, ...]
    error: str | None = None


def level_sweep(
    *,
    u1: float,
    u2: float | None = None,
    a: float | None = None,
    param: str,
    lo: float,
    hi: float,
    n: int = 200,
) -> list[LevelCurvePoint]:
    """Level curves against separation or second depth.

    param selects the swept quantity, "a" or "u2"; the other two parameters
    are fixed. With at most two non-crossing levels, ascending energy order
    is the nearest-energy branch assignment, so E0/E1 identity persists
    through near-degeneracies. Per-point solver failures are recorded on the
    point, not raised.
    """
    if param not in ("a", "u2"):
        raise InvalidParameterError(f"param must be 'a' or 'u2', got {param!r}")
    if n < 2:
        raise InvalidParameterError(f"need at least 2 sweep points, got {n}")
    if not (lo < hi):
        raise InvalidParameterError(f"need lo < hi, got [{lo}, {hi}]")
    if param == "a" and u2 is None:
        raise InvalidParameterError("sweeping a requires fixed u2")
    if param == "u2" and a is None:
        raise InvalidParameterError("sweeping u2 requires fixed a")

    points: list[LevelCurvePoint] = []
    for i in range(n):
        x = lo + (hi - lo) * i / (n - 1)
        try:
            well = WellPair(u1, u2, x) if param == "a" else WellPair(u1, x, a)
            levels = tuple(e.energy.real for e in bound_states(well))
        except (InvalidParameterError, SearchIncompleteError, ValueError) as exc:
            points.append(LevelCurvePoint(x, (), str(exc)))
            continue
        points.append(LevelCurvePoint(x, levels))
    return points
