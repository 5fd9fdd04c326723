"""Rendering of the curve tables as figures (headless matplotlib backend);
the CSV emission in the CLI stays the source of exact values."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def plot_f_curve(rows, path) -> None:
    """rows: (K, F(K)) pairs."""
    xs = [float(k) for k, _ in rows]
    ys = [float(f) for _, f in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, lw=1.2)
    ax.set_xlabel("doubling constant K")
    ax.set_ylabel("F(K)")
    ax.set_title("Largest spanning constant at doubling at most K")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_ktilde_curve(rows, path) -> None:
    """rows: (F_tilde, K_tilde, t, s) breakpoint tuples."""
    xs = [float(ft) for ft, _, _, _ in rows]
    ys = [float(kt) for _, kt, _, _ in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, lw=1.0, marker="o", ms=3)
    ax.set_xlabel("spanning constant")
    ax.set_ylabel("minimal doubling constant")
    ax.set_title("Minimal doubling at fixed spanning constant (breakpoints)")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_ab_surface(rows, path) -> None:
    """rows: (|A|/|G|, |B|/|G|, bound/|G|) triples on a grid."""
    xs = [float(a) for a, _, _ in rows]
    ys = [float(b) for _, b, _ in rows]
    zs = [float(v) for _, _, v in rows]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    sc = ax.scatter(xs, ys, c=zs, s=14, marker="s", cmap="viridis")
    fig.colorbar(sc, ax=ax, label="lower bound on |A+B| / |G|")
    ax.set_xlabel("|A| / |G|")
    ax.set_ylabel("|B| / |G|")
    ax.set_title("Two-set sumset lower bound")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
