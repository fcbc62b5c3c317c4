"""Root-finding primitives checked against scipy and closed forms."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import brentq

from doubledelta.bound_states import signed_bound_residual
from doubledelta.complex_spectra import (
    resonance_residual,
    resonance_residual_derivative,
)
from doubledelta.core import DeltaPair
from doubledelta.numerics import (
    Bracket,
    bisect,
    dedupe_and_sort,
    newton_complex,
    scan_brackets,
)


def test_bracket_requires_sign_change():
    with pytest.raises(ValueError):
        Bracket(0.0, 1.0, 2.0, 3.0)
    with pytest.raises(ValueError):
        Bracket(0.0, 1.0, 0.0, -1.0)
    Bracket(0.0, 1.0, -2.0, 3.0)


def test_scan_brackets_simple_sine():
    # sin has zeros at pi and 2 pi inside (0.1, 7)
    brs = scan_brackets(math.sin, 0.1, 7.0, 100)
    assert len(brs) == 2
    for br, target in zip(brs, (math.pi, 2 * math.pi)):
        assert br.lo < target < br.hi


def test_scan_brackets_zero_at_node():
    # f(1) == 0 exactly with a sign change across it
    f = lambda x: (x - 1.0) * (x + 2.0)
    brs = scan_brackets(f, 0.0, 2.0, 10)
    assert len(brs) == 1
    assert brs[0].lo < 1.0 < brs[0].hi


def test_scan_brackets_rejects_nonfinite():
    with pytest.raises(ValueError):
        scan_brackets(lambda x: float("nan"), 0.0, 1.0, 5)


def test_bisect_agrees_with_brentq_on_bound_residual():
    """Cross-check against scipy on the two levels of a symmetric pair."""
    pot = DeltaPair(-5.0, -5.0, 1.0)
    f = lambda p: signed_bound_residual(pot, p)
    roots_scipy = [brentq(f, 2.5, 3.0, xtol=1e-14),
                   brentq(f, 2.0, 2.5, xtol=1e-14)]
    for lo, hi, expect in ((2.5, 3.0, roots_scipy[0]),
                           (2.0, 2.5, roots_scipy[1])):
        rep = bisect(f, Bracket(lo, hi, f(lo), f(hi)), tol_x=1e-13)
        assert rep.converged
        assert rep.root.real == pytest.approx(expect, abs=1e-11)
    assert roots_scipy[0] == pytest.approx(2.672669, abs=1e-5)
    assert roots_scipy[1] == pytest.approx(2.231612, abs=1e-5)


def test_newton_complex_finds_gamow_pole():
    pot = DeltaPair(3.0, 3.0, 1.0)
    f = lambda k: resonance_residual(pot, k)
    df = lambda k: resonance_residual_derivative(pot, k)
    rep = newton_complex(f, df, seed=2.1 - 0.5j, tol_residual=1e-10)
    assert rep.converged
    e = rep.root ** 2
    assert e.real == pytest.approx(4.018284, abs=1e-5)
    assert e.imag == pytest.approx(-1.774255, abs=1e-5)


def test_newton_complex_exact_closed_form():
    # z^2 + 1 = 0 from a nearby seed
    rep = newton_complex(lambda z: z * z + 1, lambda z: 2 * z,
                         seed=0.2 + 0.8j, tol_residual=1e-14)
    assert rep.converged
    assert abs(rep.root - 1j) < 1e-12


def test_newton_complex_flat_derivative_fails_cleanly():
    rep = newton_complex(lambda z: 1.0 + 0j, lambda z: 0.0 + 0j,
                         seed=1.0 + 0j, tol_residual=1e-12)
    assert not rep.converged


def test_newton_complex_deflation_avoids_known_root():
    # z^2 - 1 has roots at +-1; deflating +1 from a seed on its side
    # must steer the iteration to -1
    f = lambda z: z * z - 1
    df = lambda z: 2 * z
    rep = newton_complex(f, df, seed=0.7 + 0.1j, tol_residual=1e-13,
                         deflate=(1.0 + 0j,), exclusion_radius=1e-3)
    assert rep.converged
    assert abs(rep.root + 1) < 1e-10


def test_dedupe_and_sort_merges_near_duplicates():
    roots = [1.0 + 0j, 1.0 + 1e-9j, 3.0 + 0j, 1.0 - 1e-9j]
    kept = dedupe_and_sort(roots, tol_merge=1e-6)
    assert len(kept) == 2
    assert kept[0].real == pytest.approx(1.0)
    assert kept[1].real == pytest.approx(3.0)


def test_dedupe_keeps_best_residual():
    roots = [2.0 + 1e-8j, 2.0 + 0j]
    kept = dedupe_and_sort(roots, tol_merge=1e-6, residuals=[1e-3, 1e-15])
    assert kept == [2.0 + 0j]


@given(st.lists(st.complex_numbers(max_magnitude=100.0,
                                   allow_nan=False, allow_infinity=False),
                max_size=12))
def test_dedupe_idempotent(roots):
    once = dedupe_and_sort(roots, tol_merge=1e-6)
    twice = dedupe_and_sort(once, tol_merge=1e-6)
    assert once == twice
    # pairwise separation at least the merge tolerance
    for i in range(len(once)):
        for j in range(i + 1, len(once)):
            assert abs(once[i] - once[j]) > 1e-6


def test_dedupe_sorted_by_real_then_imag():
    kept = dedupe_and_sort([2.0 + 1j, 1.0 + 5j, 2.0 - 1j], tol_merge=1e-9)
    assert kept == [1.0 + 5j, 2.0 - 1j, 2.0 + 1j]


def test_newton_matches_winding_count_in_box():
    """The pole found by newton is the only zero in its neighborhood."""
    from conftest import count_zeros_in_rectangle

    pot = DeltaPair(3.0, 3.0, 1.0)
    f = lambda k: resonance_residual(pot, k)
    df = lambda k: resonance_residual_derivative(pot, k)
    rep = newton_complex(f, df, seed=2.1 - 0.5j, tol_residual=1e-10)
    r = rep.root
    lo = complex(r.real - 0.3, r.imag - 0.3)
    hi = complex(r.real + 0.3, r.imag + 0.3)
    assert count_zeros_in_rectangle(f, lo, hi) == 1
