"""Static SVG rendering of sweep results."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def sweep_svg(rows, path: str | Path, observable: str = "q1") -> None:
    """Bifurcation samples (left axis) and K (right axis) against the order."""
    with matplotlib.rc_context({"svg.hashsalt": "fraccournot", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(8, 5))
        nus = np.concatenate([np.full(len(r.bif_values), r.nu) for r in rows]) if rows else []
        vals = np.concatenate([r.bif_values for r in rows]) if rows else []
        ax.scatter(nus, vals, s=0.5, color="tab:blue", linewidths=0)
        ax.set_xlim(0, 1)
        ax.set_xlabel("nu")
        ax.set_ylabel(observable, color="tab:blue")

        ax2 = ax.twinx()
        kept = [r for r in rows if r.k is not None]
        ax2.scatter([r.nu for r in kept], [r.k for r in kept], s=3, color="tab:red", linewidths=0)
        ax2.set_ylim(-1.05, 1.05)
        ax2.set_ylabel("K", color="tab:red")
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None, "Creator": None})
        plt.close(fig)
