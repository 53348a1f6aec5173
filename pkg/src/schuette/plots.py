"""Matplotlib figure rendering for tournaments, bound tables, and dice odds.

Figures are built on explicit Figure objects (no pyplot state), so the
module is safe to use from the CLI, tests, and the server alike.  Every
renderer returns a Figure; save() writes it to disk.
"""

from __future__ import annotations

import math
from pathlib import Path

from matplotlib.figure import Figure
from matplotlib.patches import Circle

from .bounds import BoundsTableEntry
from .dice import DiceSet, win_odds
from .tournament import TournamentSet


def _circle_positions(n: int) -> list[tuple[float, float]]:
    return [
        (math.cos(math.pi / 2 - 2 * math.pi * i / n),
         math.sin(math.pi / 2 - 2 * math.pi * i / n))
        for i in range(n)
    ]


def _draw_tournament(ax, t, labels: list[str] | None, title: str,
                     unresolved: tuple[tuple[int, int], ...] = ()) -> None:
    pos = _circle_positions(t.n)
    for i, j in unresolved:
        ax.plot([pos[i][0], pos[j][0]], [pos[i][1], pos[j][1]],
                color="0.7", lw=1.0, ls=":", zorder=1)
    for i, j in t.edges():
        ax.annotate(
            "",
            xy=pos[j],
            xytext=pos[i],
            arrowprops=dict(arrowstyle="-|>", color="0.25", lw=1.1,
                            shrinkA=12, shrinkB=12),
        )
    for v, (x, y) in enumerate(pos):
        ax.add_patch(
            Circle((x, y), 0.14, facecolor="#dce7f5", edgecolor="#2a4d7f", zorder=3)
        )
        ax.text(x, y, labels[v] if labels else str(v), ha="center", va="center",
                fontsize=9, zorder=4)
    ax.set_title(title, fontsize=10)
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")


def tournament_set_figure(
    tau: TournamentSet,
    labels: list[str] | None = None,
    titles: list[str] | None = None,
    suptitle: str | None = None,
) -> Figure:
    """One circular-layout digraph panel per member."""
    m = tau.m
    cols = min(m, 5)
    rows = (m + cols - 1) // cols
    fig = Figure(figsize=(3.0 * cols, 3.0 * rows + (0.4 if suptitle else 0)))
    axes = fig.subplots(rows, cols, squeeze=False)
    for idx in range(rows * cols):
        ax = axes[idx // cols][idx % cols]
        if idx < m:
            title = titles[idx] if titles else f"T{idx + 1}"
            _draw_tournament(ax, tau[idx], labels, title)
        else:
            ax.axis("off")
    if suptitle:
        fig.suptitle(suptitle)
    fig.tight_layout()
    return fig


def relations_figure(
    relations,
    labels: list[str] | None = None,
    suptitle: str | None = None,
) -> Figure:
    """Strict-win digraph panels, one per roll count; unresolved pairs dotted."""
    m = len(relations)
    cols = min(m, 5)
    rows = (m + cols - 1) // cols
    fig = Figure(figsize=(3.0 * cols, 3.0 * rows + (0.4 if suptitle else 0)))
    axes = fig.subplots(rows, cols, squeeze=False)
    for idx in range(rows * cols):
        ax = axes[idx // cols][idx % cols]
        if idx < m:
            g = relations[idx]
            _draw_tournament(ax, g, labels, f"{g.r} roll(s)", g.unresolved)
        else:
            ax.axis("off")
    if suptitle:
        fig.suptitle(suptitle)
    fig.tight_layout()
    return fig


def bounds_table_figure(entries: list[BoundsTableEntry], m_max: int, k_max: int) -> Figure:
    """The f(m,k) upper-bound grid as a rendered table; exact cells starred."""
    by_cell = {(e.m, e.k): e for e in entries}
    cell_text = []
    for k in range(k_max + 1):
        row = []
        for m in range(1, m_max + 1):
            e = by_cell.get((m, k))
            if e is None or e.redundant:
                row.append("")
            else:
                row.append(f"{e.upper}*" if e.exact else str(e.upper))
        cell_text.append(row)
    fig = Figure(figsize=(1.1 * m_max + 1.6, 0.36 * (k_max + 1) + 1.2))
    ax = fig.subplots()
    ax.axis("off")
    table = ax.table(
        cellText=cell_text,
        rowLabels=[f"k={k}" for k in range(k_max + 1)],
        colLabels=[f"m={m}" for m in range(1, m_max + 1)],
        loc="center",
        cellLoc="center",
    )
    table.scale(1, 1.4)
    ax.set_title("Upper bounds for the least order of an S_k m-set\n(* = known exact)")
    fig.tight_layout()
    return fig


def odds_heatmap_figure(ds: DiceSet, r: int) -> Figure:
    """Pairwise win probabilities at r rolls, floats shaded, fractions printed."""
    n = len(ds)
    grid = [[0.5] * n for _ in range(n)]
    text = [[""] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                text[i][j] = "-"
                continue
            w = win_odds(ds[i], ds[j], r).win
            grid[i][j] = float(w)
            text[i][j] = f"{w.numerator}/{w.denominator}"
    fig = Figure(figsize=(1.1 * n + 2.4, 1.0 * n + 1.6))
    ax = fig.subplots()
    im = ax.imshow(grid, cmap="RdYlGn", vmin=0.0, vmax=1.0)
    for i in range(n):
        for j in range(n):
            ax.text(j, i, text[i][j], ha="center", va="center", fontsize=8)
    ax.set_xticks(range(n), ds.labels)
    ax.set_yticks(range(n), ds.labels)
    ax.set_xlabel("column die (opponent)")
    ax.set_ylabel("row die")
    ax.set_title(f"P(row beats column) at {r} roll(s), set {ds.name!r}")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    return fig


def save(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    return path
