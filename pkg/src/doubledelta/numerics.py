"""Root-finding toolkit: bracket scans, bisection, damped complex Newton.

Everything operates on plain callables and returns small report records, so
the spectral modules stay independent of any particular equation. Functions
here are pure; seed-grid Newton runs are independent of each other and the
final list is produced by a deterministic dedupe, so results do not depend
on evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

TOL_X = 1e-12
TOL_RESIDUAL = 1e-10
TOL_MERGE = 1e-6
MAX_ITER = 100

# Newton iterates beyond this radius are treated as diverged.
ESCAPE_RADIUS = 1e9


@dataclass(frozen=True)
class Bracket:
    """An interval [lo, hi] with strictly opposite, nonzero residual signs."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.f_lo == 0.0 or self.f_hi == 0.0 or (self.f_lo > 0) == (self.f_hi > 0):
            raise ValueError("bracket endpoints must have strictly opposite signs")


@dataclass(frozen=True)
class RootFindReport:
    """Accepted root plus convergence evidence."""

    root: complex
    residual: float
    iterations: int
    seed: complex
    converged: bool


def scan_brackets(f: Callable[[float], float], lo: float, hi: float, n: int) -> list[Bracket]:
    """Uniform n-point scan of [lo, hi] collecting sign-change brackets.

    A node where f is exactly zero is not itself returned (a Bracket needs
    strict signs); instead the two flanking cells are fused into one bracket
    when their outer signs differ, which bisection then collapses back onto
    the node. Non-finite residuals raise ValueError since they poison the
    sign logic.
    """
    if n < 2:
        raise ValueError(f"need at least 2 scan points, got {n}")
    if not (lo < hi):
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    ys = []
    for x in xs:
        y = f(x)
        if not math.isfinite(y):
            raise ValueError(f"residual not finite at x={x}: {y!r}")
        ys.append(y)

    out: list[Bracket] = []
    for i in range(n - 1):
        a, b = ys[i], ys[i + 1]
        if a == 0.0:
            continue
        if b == 0.0:
            if i + 2 < n and ys[i + 2] != 0.0 and (a > 0) != (ys[i + 2] > 0):
                out.append(Bracket(xs[i], xs[i + 2], a, ys[i + 2]))
            continue
        if (a > 0) != (b > 0):
            out.append(Bracket(xs[i], xs[i + 1], a, b))
    return out


def bisect(f: Callable[[float], float], bracket: Bracket, tol_x: float = TOL_X) -> RootFindReport:
    """Bisection to |hi - lo| <= tol_x. Always converges on a valid Bracket."""
    lo, hi = bracket.lo, bracket.hi
    f_lo = bracket.f_lo
    seed = 0.5 * (lo + hi)
    iterations = 0
    while (hi - lo) > tol_x and iterations < 200:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        iterations += 1
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return RootFindReport(complex(root), abs(f(root)), iterations, complex(seed), True)


def newton_complex(
    f: Callable[[complex], complex],
    df: Callable[[complex], complex],
    seed: complex,
    tol_residual: float = TOL_RESIDUAL,
    max_iter: int = MAX_ITER,
    deflate: Sequence[complex] = (),
    exclusion_radius: float = 0.0,
) -> RootFindReport:
    """Newton iteration in the complex plane with optional Maehly deflation.

    Deflation subtracts sum(1/(z - r)) over known roots from the logarithmic
    derivative, steering iterates away from already-found roots; an iterate
    landing within exclusion_radius of a deflated root is rejected outright.
    Divergence (overflow, |z| beyond ESCAPE_RADIUS, vanishing derivative) is
    reported via converged=False, never an exception.
    """
    z = complex(seed)
    fz = None
    for it in range(1, max_iter + 1):
        try:
            fz = f(z)
        except (OverflowError, ValueError):
            return RootFindReport(z, math.inf, it, complex(seed), False)
        if not (math.isfinite(fz.real) and math.isfinite(fz.imag)):
            return RootFindReport(z, math.inf, it, complex(seed), False)
        if abs(fz) <= tol_residual:
            for r in deflate:
                if abs(z - r) < exclusion_radius:
                    return RootFindReport(z, abs(fz), it, complex(seed), False)
            return RootFindReport(z, abs(fz), it, complex(seed), True)
        try:
            dz = df(z)
        except (OverflowError, ValueError):
            return RootFindReport(z, abs(fz), it, complex(seed), False)
        if deflate:
            correction = fz * sum(1.0 / (z - r) for r in deflate if abs(z - r) > 1e-300)
            dz = dz - correction
        if abs(dz) < 1e-300:
            return RootFindReport(z, abs(fz), it, complex(seed), False)
        z = z - fz / dz
        if abs(z) > ESCAPE_RADIUS:
            return RootFindReport(z, math.inf, it, complex(seed), False)
    residual = abs(fz) if fz is not None else math.inf
    return RootFindReport(z, residual, max_iter, complex(seed), residual <= tol_residual)


def dedupe_and_sort(
    roots: Sequence[complex],
    tol_merge: float = TOL_MERGE,
    residuals: Sequence[float] | None = None,
) -> list[complex]:
    """Merge roots closer than tol_merge, keeping the best-residual copy.

    Candidates are visited in ascending residual order (insertion order when
    no residuals are given), so each cluster is represented by its most
    converged member. The result is sorted by (real, imag).
    """
    if residuals is None:
        order = list(range(len(roots)))
    else:
        if len(residuals) != len(roots):
            raise ValueError("residuals length must match roots length")
        order = sorted(range(len(roots)), key=lambda i: residuals[i])
    kept: list[complex] = []
    for i in order:
        z = complex(roots[i])
        if all(abs(z - w) > tol_merge for w in kept):
            kept.append(z)
    kept.sort(key=lambda z: (z.real, z.imag))
    return kept
