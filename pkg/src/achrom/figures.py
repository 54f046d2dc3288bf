"""Matplotlib renderings of matrices, diagnostics profiles and bound sweeps.

Figures are written straight to files; the Agg backend is forced so the
renderers work headless.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .bounds import corollary_band, exact_value
from .matrix import ColourMatrix
from .stats import excess_profile, frequency_profile


def save_matrix_figure(m: ColourMatrix, path: str | Path, dpi: int = 150) -> Path:
    """Colour-grid rendering of the matrix; tokens are printed when they fit."""
    path = Path(path)
    n = len(m.palette)
    grid = np.array(m.entries)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.45 * m.q), max(2.5, 0.45 * m.p)))
    ax.imshow(grid, cmap="turbo", vmin=0, vmax=max(n - 1, 1))
    if m.q <= 24:
        for i in range(m.p):
            for j in range(m.q):
                ax.text(
                    j,
                    i,
                    m.token_at(i, j),
                    ha="center",
                    va="center",
                    fontsize=7,
                    color="white",
                )
    ax.set_xticks(range(m.q), [str(j + 1) for j in range(m.q)], fontsize=6)
    ax.set_yticks(range(m.p), [str(i + 1) for i in range(m.p)], fontsize=6)
    ax.set_title(f"{m.p} x {m.q} matrix, {n} colours")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return path


def save_profile_figure(m: ColourMatrix, path: str | Path, dpi: int = 150) -> Path:
    """Two-panel diagnostics: class sizes by frequency level and per-colour excess."""
    path = Path(path)
    profile = frequency_profile(m)
    exc = excess_profile(m, profile)
    levels = sorted(profile.classes)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.2))
    ax1.bar(levels, [profile.c(l) for l in levels], color="#3465a4")
    ax1.set_xlabel("frequency level")
    ax1.set_ylabel("number of colours")
    ax1.set_title("frequency classes")
    ax1.set_xticks(levels)
    ax2.plot(range(len(exc.exc)), exc.exc, ".", markersize=3, color="#a40000")
    ax2.axhline(0, color="grey", linewidth=0.8)
    ax2.set_xlabel("colour id")
    ax2.set_ylabel("excess")
    ax2.set_title(f"per-colour excess (min = {exc.matrix_excess})")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return path


def save_bound_sweep_figure(
    q_lo: int, q_hi: int, path: str | Path, dpi: int = 150
) -> Path:
    """Exact six-row values across a q range, inside the [2q+3, 2q+6] band."""
    path = Path(path)
    qs = list(range(max(1, q_lo), q_hi + 1))
    exact = [exact_value(q).value for q in qs]
    lo = [corollary_band(q)[0] for q in qs]
    hi = [corollary_band(q)[1] for q in qs]
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.fill_between(qs, lo, hi, color="#d3d7cf", label="band 2q+3 .. 2q+6")
    ax.plot(qs, exact, drawstyle="steps-mid", color="#204a87", label="exact value")
    ax.set_xlabel("columns q")
    ax.set_ylabel("achromatic number (6 rows)")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return path
