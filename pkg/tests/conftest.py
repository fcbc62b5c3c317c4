"""Shared test helpers.

count_zeros_in_rectangle applies the argument principle on a rectangular
contour: the winding number of f around the boundary equals the number of
zeros enclosed (counting multiplicity) when f is entire.  All functions we
search for roots of here are entire in k, so this gives an independent
count that does not depend on any seeding or iteration scheme.
"""

import cmath
import math

import pytest


def _rectangle_path(lo: complex, hi: complex, points_per_side: int):
    corners = [
        complex(lo.real, lo.imag),
        complex(hi.real, lo.imag),
        complex(hi.real, hi.imag),
        complex(lo.real, hi.imag),
    ]
    path = []
    for i in range(4):
        z0 = corners[i]
        z1 = corners[(i + 1) % 4]
        for j in range(points_per_side):
            t = j / points_per_side
            path.append(z0 + t * (z1 - z0))
    path.append(corners[0])
    return path


def count_zeros_in_rectangle(f, lo: complex, hi: complex,
                             points_per_side: int = 400) -> int:
    """Number of zeros of an entire f inside the open rectangle (lo, hi).

    lo is the bottom-left corner, hi the top-right.  The count is the
    accumulated phase of f along the boundary divided by 2 pi, rounded.
    Raises if f vanishes on the contour itself (move the rectangle).
    """
    path = _rectangle_path(lo, hi, points_per_side)
    values = [f(z) for z in path]
    total = 0.0
    for w0, w1 in zip(values, values[1:]):
        if abs(w0) < 1e-300 or abs(w1) < 1e-300:
            raise ValueError("zero on contour; shift the rectangle")
        dphi = cmath.phase(w1 / w0)
        if abs(dphi) > math.pi / 2:
            raise ValueError("phase step too coarse; raise points_per_side")
        total += dphi
    return round(total / (2.0 * math.pi))


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20260815)
