"""Benchmark fixture: reference spectra for eight standard parameter sets.

REFERENCE_ROWS stores, at its original printed precision, a reference
tabulation of the first four resonances (E_n - i*Gamma_n/2, with T(E_n))
and the first four perfect-transmission levels (eps_n - i*gamma_n/2, with
T(eps_n)) for four attractive, two repulsive-symmetric and two asymmetric
strength combinations at a = 1. reproduce_reference_table recomputes every
cell with the solvers and compares at tolerances of half a printed unit
plus solver margin.

One reference cell is internally inconsistent and is excluded from
pass/fail (still computed and reported): the (30, 29, 1) level-2
perfect-transmission half-width is printed as 0.002, but that point is not
a zero of the reflection numerator (residual O(1) there, versus 1e-13 at
the computed root 34.8389 - 0.0261i), it breaks the row's otherwise
monotone width progression (0.003, _, 0.07, 0.15), and the printed
T(eps_2) = 0.9990 matches the computed root's transmission, not a width of
0.002.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex_spectra import perfect_transmission_energies, resonances
from .core import DeltaPair

TOL_RESONANCE_ENERGY = 0.02
TOL_RESONANCE_HALF_WIDTH = 0.02
TOL_PT_ENERGY = 0.01
TOL_PT_HALF_WIDTH = 0.01
TOL_T = 0.001


@dataclass(frozen=True)
class ReferenceLevel:
    resonance: complex
    t_resonance: float
    pt: complex
    t_pt: float
    pt_half_width_checked: bool = True


@dataclass(frozen=True)
class ReferenceRow:
    v1: float
    v2: float
    a: float
    levels: tuple[ReferenceLevel, ...]

    @property
    def label(self) -> str:
        return f"{self.v1:g},{self.v2:g},{self.a:g}"


REFERENCE_ROWS: tuple[ReferenceRow, ...] = (
    ReferenceRow(-3.0, -2.9, 1.0, (
        ReferenceLevel(15.66 - 9.98j, 0.9129, 19.25 - 0.14j, 0.9998),
        ReferenceLevel(52.61 - 25.38j, 0.9745, 58.73 - 0.25j, 0.9999),
        ReferenceLevel(109.90 - 43.37j, 0.9894, 117.95 - 0.36j, 0.9999),
        ReferenceLevel(187.27 - 63.17j, 0.9946, 196.90 - 0.47j, 0.9999),
    )),
    ReferenceRow(-3.0, -3.0, 1.0, (
        ReferenceLevel(15.68 - 9.84j, 0.9134, 19.2074 + 0j, 1.0),
        ReferenceLevel(52.65 - 25.13j, 0.9744, 58.6851 + 0j, 1.0),
        ReferenceLevel(109.95 - 43.01j, 0.9893, 117.903 + 0j, 1.0),
        ReferenceLevel(187.33 - 62.70j, 0.9945, 196.859 + 0j, 1.0),
    )),
    ReferenceRow(-3.0, 2.9, 1.0, (
        ReferenceLevel(7.82 - 4.74j, 0.8649, 9.82 - 0.08j, 0.9997),
        ReferenceLevel(34.50 - 17.75j, 0.9599, 39.43 - 0.20j, 0.9999),
        ReferenceLevel(81.66 - 34.42j, 0.9847, 88.77 - 0.31j, 0.9999),
        ReferenceLevel(149.01 - 53.30j, 0.9927, 157.86 - 0.42j, 0.9999),
    )),
    ReferenceRow(-3.0, 3.0, 1.0, (
        ReferenceLevel(7.91 - 4.69j, 0.8680, 9.8696 + 0j, 1.0),
        ReferenceLevel(34.63 - 17.57j, 0.9600, 39.4784 + 0j, 1.0),
        ReferenceLevel(81.81 - 34.12j, 0.9847, 88.8264 + 0j, 1.0),
        ReferenceLevel(149.16 - 52.89j, 0.9927, 157.91 + 0j, 1.0),
    )),
    ReferenceRow(3.0, 2.9, 1.0, (
        ReferenceLevel(3.97 - 1.79j, 0.8655, 4.70 - 0.04j, 0.9996),
        ReferenceLevel(21.41 - 11.23j, 0.9381, 24.99 - 0.14j, 0.9999),
        ReferenceLevel(58.50 - 26.14j, 0.9775, 64.56 - 0.25j, 0.9999),
        ReferenceLevel(115.81 - 43.91j, 0.9900, 123.81 - 0.36j, 0.9999),
    )),
    ReferenceRow(3.0, 3.0, 1.0, (
        ReferenceLevel(4.01 - 1.77j, 0.8696, 4.729 + 0j, 1.0),
        ReferenceLevel(21.52 - 11.11j, 0.9387, 25.0365 + 0j, 1.0),
        ReferenceLevel(58.64 - 25.90j, 0.9775, 64.6169 + 0j, 1.0),
        ReferenceLevel(115.96 - 43.56j, 0.9900, 123.867 + 0j, 1.0),
    )),
    ReferenceRow(30.0, 30.0, 1.0, (
        ReferenceLevel(8.68 - 0.10j, 0.9997, 8.6880 + 0j, 1.0),
        ReferenceLevel(34.88 - 0.80j, 0.9992, 34.9042 + 0j, 1.0),
        ReferenceLevel(78.93 - 2.54j, 0.9987, 79.0282 + 0j, 1.0),
        ReferenceLevel(141.28 - 5.56j, 0.9983, 141.5120 + 0j, 1.0),
    )),
    ReferenceRow(30.0, 29.0, 1.0, (
        ReferenceLevel(8.66 - 0.10j, 0.9986, 8.67 - 0.003j, 0.9988),
        ReferenceLevel(34.81 - 0.82j, 0.9982, 34.83 - 0.002j, 0.9990,
                       pt_half_width_checked=False),
        ReferenceLevel(78.80 - 2.61j, 0.9977, 78.90 - 0.07j, 0.9991),
        ReferenceLevel(141.08 - 5.70j, 0.9975, 141.32 - 0.15j, 0.9993),
    )),
)


@dataclass(frozen=True)
class CellCheck:
    """One computed-vs-reference comparison.

    checked = False marks a cell that is reported but excluded from
    pass/fail (see module docstring); passed is still filled in for it.
    """

    row: str
    level: int
    quantity: str
    computed: float
    expected: float
    tolerance: float
    passed: bool
    checked: bool = True


def _cell(row: str, level: int, quantity: str, computed: float, expected: float,
          tolerance: float, checked: bool = True) -> CellCheck:
    computed = float(computed)
    expected = float(expected)
    return CellCheck(
        row, level, quantity, computed, expected, tolerance,
        abs(computed - expected) <= tolerance, checked,
    )


def reproduce_reference_table() -> list[CellCheck]:
    """Recompute all 8 x 4 x 6 reference cells; 192 CellChecks in row order."""
    checks: list[CellCheck] = []
    for row in REFERENCE_ROWS:
        pot = DeltaPair(row.v1, row.v2, row.a)
        n = len(row.levels)
        res = resonances(pot, n)
        pts = perfect_transmission_energies(pot, n)
        for i, (ref, rn, pt) in enumerate(zip(row.levels, res, pts), start=1):
            checks.append(_cell(row.label, i, "resonance_energy",
                                rn.energy.real, ref.resonance.real, TOL_RESONANCE_ENERGY))
            checks.append(_cell(row.label, i, "resonance_half_width",
                                -rn.energy.imag, -ref.resonance.imag, TOL_RESONANCE_HALF_WIDTH))
            checks.append(_cell(row.label, i, "t_resonance",
                                rn.t_at_peak, ref.t_resonance, TOL_T))
            checks.append(_cell(row.label, i, "pt_energy",
                                pt.energy.real, ref.pt.real, TOL_PT_ENERGY))
            checks.append(_cell(row.label, i, "pt_half_width",
                                -pt.energy.imag, -ref.pt.imag, TOL_PT_HALF_WIDTH,
                                checked=ref.pt_half_width_checked))
            checks.append(_cell(row.label, i, "t_pt",
                                pt.t_at_energy, ref.t_pt, TOL_T))
    return checks


def verify() -> tuple[list[CellCheck], bool]:
    """All cell checks plus the overall verdict over the checked cells."""
    checks = reproduce_reference_table()
    return checks, all(c.passed for c in checks if c.checked)
