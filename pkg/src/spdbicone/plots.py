"""Figure rendering for the verification report and the 2x2 bicone chart.

Everything draws through the Agg backend and writes PNG files; nothing here
opens a window. Figures accompany the delimited outputs of the CLI, they do
not replace them.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def plot_report_margins(report, out_path: str | Path) -> Path:
    """Horizontal bar chart of worst margins/errors of every report record."""
    names, values, colors = [], [], []
    for row in report.inequalities:
        if row.skipped:
            continue
        names.append(row.name)
        values.append(row.worst_margin)
        colors.append("tab:green" if row.passed else "tab:red")
    for rec in report.invariants:
        names.append(rec.name)
        signed = rec.worst if rec.kind == "margin" else rec.tolerance - rec.worst
        values.append(signed)
        colors.append("tab:green" if rec.passed else "tab:red")
    fig, ax = plt.subplots(figsize=(9, max(2.5, 0.32 * len(names))))
    y = np.arange(len(names))
    ax.barh(y, values, color=colors)
    ax.set_yticks(y)
    ax.set_yticklabels(names, fontsize=8)
    ax.axvline(0.0, color="k", lw=0.8)
    ax.set_xscale("symlog", linthresh=1e-12)
    ax.set_xlabel("worst margin (inequalities) / tolerance slack (checks)")
    ax.set_title("verification margins" + ("" if report.all_pass else "  [FAILURES]"))
    fig.tight_layout()
    out_path = Path(out_path)
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def plot_report_sequences(report, out_path: str | Path) -> Path:
    """Convergence of the two counterexample sequences along the t ladder."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6))
    drawn = False
    for ax, seq in zip(axes, report.sequences):
        if seq.skipped:
            continue
        drawn = True
        ts = [p["t"] for p in seq.ladder]
        ax.loglog(ts, [p["d_airm"] for p in seq.ladder], "o-", label="AIRM variant")
        ax.loglog(ts, [p["d_hilbert"] for p in seq.ladder], "s-", label="Hilbert")
        for limit, ls in ((seq.limit_airm, ":"), (seq.limit_hilbert, "--")):
            if limit > 0:
                ax.axhline(limit, color="gray", ls=ls, lw=0.8)
        ax.set_xlabel("t")
        ax.set_title(seq.name, fontsize=9)
        ax.legend(fontsize=8)
    if not drawn:
        axes[0].text(0.5, 0.5, "sequences skipped (needs n >= 2)", ha="center")
    fig.tight_layout()
    out_path = Path(out_path)
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def plot_bicone_points(points: np.ndarray, out_path: str | Path) -> Path:
    """3D polyline of Cartesian bicone coordinates inside the unit bicone."""
    points = np.asarray(points, dtype=float)
    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(111, projection="3d")
    phi = np.linspace(0, 2 * np.pi, 60)
    for z in np.linspace(-0.95, 0.95, 13):
        r = 1.0 - abs(z)
        ax.plot(r * np.cos(phi), r * np.sin(phi), z, color="lightgray", lw=0.5)
    ax.plot(points[:, 0], points[:, 1], points[:, 2], "o-", color="tab:red", ms=3)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("z")
    ax.set_title("points in the unit bicone")
    out_path = Path(out_path)
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path
