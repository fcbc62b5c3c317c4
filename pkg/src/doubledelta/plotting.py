"""Figure rendering for scan and sweep outputs (headless Agg backend)."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bound_states import LevelCurvePoint
from .scattering import ScanRow


def render_scan(rows: list[ScanRow], path: str, title: str = "") -> None:
    """T(E) solid, R(E) dashed where defined, poles as dotted verticals.

    The continued T below E = 0 blows up at bound levels, so the y range is
    capped to keep the scattering-region structure visible.
    """
    es = [r.E for r in rows]
    ts = [r.T for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    finite = [(e, t) for e, t in zip(es, ts) if math.isfinite(t)]
    if finite:
        ax.plot([e for e, _ in finite], [t for _, t in finite], "-", lw=1.2, label="T")
    withr = [(r.E, r.R) for r in rows if r.R is not None]
    if withr:
        ax.plot([e for e, _ in withr], [r for _, r in withr], "--", lw=1.0, label="R")
    for r in rows:
        if math.isinf(r.T):
            ax.axvline(r.E, color="gray", ls=":", lw=0.8)
    top = max((t for _, t in finite), default=1.0)
    ax.set_ylim(0.0, min(max(1.05, top * 1.05), 20.0))
    ax.set_xlabel("E")
    ax.set_ylabel("coefficient")
    ax.axhline(1.0, color="black", lw=0.5, alpha=0.4)
    if title:
        ax.set_title(title)
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_sweep(points: list[LevelCurvePoint], path: str, title: str = "") -> None:
    """Level curves: E0 solid, E1 dashed, against the swept parameter."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for idx, style, label in ((0, "-", "E0"), (1, "--", "E1")):
        xs = [p.sweep_value for p in points if len(p.levels) > idx]
        ys = [p.levels[idx] for p in points if len(p.levels) > idx]
        if xs:
            ax.plot(xs, ys, style, lw=1.2, label=label)
    ax.set_xlabel("sweep value")
    ax.set_ylabel("E")
    if title:
        ax.set_title(title)
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
