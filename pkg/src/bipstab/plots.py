"""Matplotlib rendering for the CLI report paths.

Each function writes one PNG next to the delimited output it illustrates.
Only the CLI imports this module, and only when --plot is given; the
computation modules never touch matplotlib.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_VERDICT_CODE = {"stable": 0, "indeterminate": 1, "unstable": 2}
_VERDICT_COLORS = ["#2a7e43", "#b0b0b0", "#b03a2e"]


def save_root_scatter(roots_x, path, title: str = "independence roots") -> None:
    """Scatter of roots in x-coordinates with the Re = 0 stability boundary."""
    xs = np.asarray([z.real for z in roots_x])
    ys = np.asarray([z.imag for z in roots_x])
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.axvline(0.0, color="#b03a2e", lw=1.0, label="Re(x) = 0")
    ax.scatter(xs, ys, s=14, color="#1f4e79", zorder=3)
    ax.set_xlabel("Re(x)")
    ax.set_ylabel("Im(x)")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="upper right", fontsize=8)
    ax.set_aspect("equal", adjustable="datalim")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_grid_heatmap(reports, m_max: int, n_max: int, path) -> None:
    """Phase diagram of verdicts over the (m, n) grid (n >= m cells only)."""
    mat = np.full((m_max, n_max), np.nan)
    for rep in reports:
        label = rep.graph_label.strip("K_{}")
        m, n = (int(v) for v in label.split(","))
        mat[m - 1, n - 1] = _VERDICT_CODE.get(rep.verdict, 1)
    fig, ax = plt.subplots(figsize=(max(6, n_max / 8), max(3, m_max / 8)))
    cmap = matplotlib.colors.ListedColormap(_VERDICT_COLORS)
    ax.pcolormesh(
        np.arange(0.5, n_max + 1), np.arange(0.5, m_max + 1), mat,
        cmap=cmap, vmin=-0.5, vmax=2.5,
    )
    ax.set_xlabel("n")
    ax.set_ylabel("m")
    ax.set_title("stability of K_{m,n}")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in _VERDICT_COLORS]
    ax.legend(handles, ["stable", "indeterminate", "unstable"],
              loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_witness_margins(per_m, n_ell: int, path) -> None:
    """Max Re(x) against m for the unbalanced-family scan."""
    ms = [m for m, _ in per_m]
    vals = [rep.max_real_part_x for _, rep in per_m]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.axhline(0.0, color="#b03a2e", lw=1.0, label="stability boundary")
    if 0 < n_ell <= max(ms, default=0):
        ax.axvline(n_ell, color="#7d3c98", lw=1.0, ls="--", label=f"N = {n_ell}")
    ax.plot(ms, vals, marker="o", ms=3, lw=1.0, color="#1f4e79")
    ax.set_xlabel("m")
    ax.set_ylabel("max Re(x)")
    ax.set_title("instability onset")
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
