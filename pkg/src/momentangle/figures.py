"""Matplotlib renderings of report content, written to files.

Figures are a presentation layer only: every number drawn comes from the
exact report payload.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_betti_figure(betti_section: dict, path: str) -> str:
    """Grid of bigraded Betti dimensions, one panel per field."""
    labels = sorted(betti_section)
    fig, axes = plt.subplots(1, max(len(labels), 1),
                             figsize=(4 * max(len(labels), 1), 4),
                             squeeze=False)
    for ax, label in zip(axes[0], labels):
        table = betti_section[label]["hochster"]
        points = [(tuple(map(int, bd.split(","))), int(dim))
                  for bd, dim in table.items()]
        if points:
            max_i = max(i for (i, _), _ in points)
            max_j = max(j2 for (_, j2), _ in points)
        else:
            max_i = max_j = 0
        for (i, j2), dim in points:
            ax.scatter([j2], [i], s=400, c="#4878d0", alpha=0.6)
            ax.annotate(str(dim), (j2, i), ha="center", va="center")
        ax.set_xlim(-1, max_j + 1)
        ax.set_ylim(-1, max_i + 1)
        ax.set_xlabel("internal degree 2j")
        ax.set_ylabel("homological degree i")
        ax.set_title(f"Betti table over {label}")
        ax.set_xticks(range(0, max_j + 1, 2))
        ax.set_yticks(range(0, max_i + 1))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_homology_figure(decomposition_section: dict, path: str) -> str:
    """Moment-angle homology ranks per degree, one bar group per
    coefficient system."""
    series = {}
    for label, entry in decomposition_section.items():
        if not isinstance(entry, dict) or "complex" not in entry:
            continue
        groups = entry["complex"]["computed"]
        series[label] = {int(d): int(g["rank"]) for d, g in groups.items()}
    fig, ax = plt.subplots(figsize=(6, 4))
    degrees = sorted({d for s in series.values() for d in s})
    width = 0.8 / max(len(series), 1)
    for k, (label, ranks) in enumerate(sorted(series.items())):
        xs = [d + k * width for d in degrees]
        ax.bar(xs, [ranks.get(d, 0) for d in degrees], width=width, label=label)
    ax.set_xlabel("degree")
    ax.set_ylabel("rank")
    ax.set_title("moment-angle model homology ranks")
    if series:
        ax.set_xticks([d + 0.4 - width / 2 for d in degrees])
        ax.set_xticklabels([str(d) for d in degrees])
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_corpus_figure(rows: list[dict], columns: list[str], path: str) -> str:
    """Boolean verdict matrix for a corpus sweep, one row per complex."""
    fig_height = max(2.0, 0.18 * len(rows) + 1.2)
    fig, ax = plt.subplots(figsize=(max(6, 0.9 * len(columns)), fig_height))
    grid = [[1 if row.get(c) else 0 for c in columns] for row in rows]
    if grid:
        ax.imshow(grid, aspect="auto", cmap="RdYlGn", vmin=0, vmax=1)
    ax.set_xticks(range(len(columns)))
    ax.set_xticklabels(columns, rotation=45, ha="right", fontsize=7)
    ax.set_yticks(range(0, len(rows), max(1, len(rows) // 30)))
    ax.set_yticklabels([rows[i]["label"] for i in
                        range(0, len(rows), max(1, len(rows) // 30))],
                       fontsize=6)
    ax.set_title("corpus sweep verdicts")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_report_figures(payload: dict, directory: str, stem: str) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    written = []
    if "betti" in payload and payload["betti"]:
        written.append(save_betti_figure(
            payload["betti"], os.path.join(directory, f"{stem}_betti.png")))
    if "decomposition" in payload and any(
            isinstance(v, dict) and "complex" in v
            for v in payload["decomposition"].values()):
        written.append(save_homology_figure(
            payload["decomposition"],
            os.path.join(directory, f"{stem}_homology.png")))
    return written
