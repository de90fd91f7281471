"""Hasse-diagram and report figures rendered straight to files.

Uses the Agg backend unconditionally: this package never opens windows, and
report rendering must work on headless machines.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import Poset
from .io import heights


def hasse_positions(p: Poset) -> dict:
    """Deterministic layout: height as the row, element order inside a row."""
    level = heights(p)
    by_level: dict = {}
    for e in p.elements:
        by_level.setdefault(level[e], []).append(e)
    pos = {}
    for lev, members in by_level.items():
        k = len(members)
        for idx, e in enumerate(members):
            pos[e] = (idx - (k - 1) / 2.0, float(lev))
    return pos


def render_hasse(p: Poset, path: str, title: str = "") -> str:
    pos = hasse_positions(p)
    rows = max((len(v) for v in _group_sizes(pos).values()), default=1)
    depth = max((y for _, y in pos.values()), default=0) + 1
    fig, ax = plt.subplots(figsize=(max(3.0, rows * 1.1), max(2.5, depth * 1.0)))
    for a, b in p.covers():
        (x0, y0), (x1, y1) = pos[a], pos[b]
        ax.plot([x0, x1], [y0, y1], color="0.45", linewidth=1.0, zorder=1)
    for e, (x, y) in pos.items():
        ax.text(
            x,
            y,
            e,
            ha="center",
            va="center",
            fontsize=9,
            zorder=2,
            bbox={"boxstyle": "round,pad=0.25", "facecolor": "white", "edgecolor": "0.3"},
        )
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    ax.margins(0.15)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def _group_sizes(pos: dict) -> dict:
    groups: dict = {}
    for _, (_, y) in pos.items():
        groups.setdefault(y, []).append(1)
    return groups


def render_verify_summary(report, path: str) -> str:
    """Single bar chart: passed and failed instance counts for one suite."""
    failed = report.instances - report.passed
    fig, ax = plt.subplots(figsize=(4.0, 3.0))
    ax.bar(["passed", "failed"], [report.passed, failed], color=["#4a7", "#c55"])
    ax.set_title(f"suite {report.suite}")
    ax.set_ylabel("instances")
    for idx, value in enumerate([report.passed, failed]):
        ax.text(idx, value, str(value), ha="center", va="bottom", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
