"""Figure rendering for the guarantee curves.

Renders the per-level recoverable-ratio curves (f vs. the earlier
bound) and the end-to-end approximation-ratio curves (G vs. H) to
image files next to the CSV output.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def render_curve_figures(rows, out_dir):
    """Write recoverable_ratio.png and approximation_ratio.png; return paths."""
    eps = [r[0] for r in rows]
    f_vals = [r[1] for r in rows]
    fprev_vals = [r[2] for r in rows]
    g_vals = [r[4] for r in rows]
    h_vals = [r[5] for r in rows]
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    fig, ax = plt.subplots(figsize=(6, 4.2))
    ax.plot(eps, f_vals, color="red", label="f (this analysis)")
    ax.plot(eps, fprev_vals, color="green", label="1 - 2*sqrt(eps) (previous)")
    ax.axhline(0.5, color="gray", lw=0.8, ls="--", label="random cut")
    ax.set_xlabel("eps")
    ax.set_ylabel("recoverable ratio")
    ax.set_title("Per-level recoverable-ratio guarantee")
    ax.legend()
    ax.grid(alpha=0.3)
    path = os.path.join(out_dir, "recoverable_ratio.png")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(6, 4.2))
    ax.plot(eps, g_vals, color="red", label="G = F/(1-eps)")
    ax.plot(eps, h_vals, color="black", label="H (previous)")
    ax.set_xlabel("eps")
    ax.set_ylabel("approximation ratio")
    ax.set_title("End-to-end approximation-ratio guarantee")
    ax.legend()
    ax.grid(alpha=0.3)
    path = os.path.join(out_dir, "approximation_ratio.png")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)
    return paths
