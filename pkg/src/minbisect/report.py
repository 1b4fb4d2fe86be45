"""Report rendering: delimited summaries plus matplotlib figures.

Layouts are fixed (circular for graphs, layered for decomposition trees) so
repeated runs draw identical pictures.
"""

from __future__ import annotations

import csv
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .decompose import TreeDecomposition
from .graph import Graph


def _circular_layout(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i in range(n)
    ]


def write_bisection_report(directory: str, g: Graph, k: int, result,
                           weighted: bool = False) -> list[str]:
    """summary.csv plus partition.png; returns the written paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    summary = os.path.join(directory, "summary.csv")
    with open(summary, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "m", "k", "feasible", "cut_size", "cut_weight",
                         "side_a", "side_b"])
        sizes = result.sizes()
        writer.writerow([
            g.n, g.m, k, result.feasible,
            "" if result.cut_size is None else result.cut_size,
            "" if result.cut_weight is None else str(result.cut_weight),
            "" if sizes is None else sizes[0],
            "" if sizes is None else sizes[1],
        ])
    paths.append(summary)

    fig, ax = plt.subplots(figsize=(5, 5))
    pos = _circular_layout(max(g.n, 1))
    side_a = result.partition[0] if result.partition else frozenset()
    for u, v in g.edges:
        crossing = result.partition is not None and ((u in side_a) != (v in side_a))
        ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]],
                linestyle="--" if crossing else "-",
                color="#d62728" if crossing else "#999999",
                linewidth=1.8 if crossing else 1.0, zorder=1)
    for v in g.vertices():
        in_a = v in side_a
        ax.scatter([pos[v][0]], [pos[v][1]], s=260,
                   c="#ffffff" if in_a else "#333333",
                   edgecolors="#333333", zorder=2)
        ax.text(pos[v][0], pos[v][1], str(v + 1), ha="center", va="center",
                fontsize=9, color="#333333" if in_a else "#ffffff", zorder=3)
    status = "infeasible" if not result.feasible else (
        f"cut={result.cut_size}" + (f", weight={result.cut_weight}" if weighted else ""))
    ax.set_title(f"n={g.n} m={g.m} k={k}: {status}")
    ax.set_aspect("equal")
    ax.axis("off")
    figure = os.path.join(directory, "partition.png")
    fig.savefig(figure, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(figure)
    return paths


def write_decomposition_report(directory: str, g: Graph,
                               td: TreeDecomposition) -> list[str]:
    """nodes.csv plus tree.png for a built decomposition."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    table = os.path.join(directory, "nodes.csv")
    with open(table, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["node", "parent", "bag_size", "adhesion_size", "bag"])
        for node in td.nodes:
            writer.writerow([
                node.id,
                "" if node.parent is None else node.parent,
                len(node.bag),
                len(td.sigma(node.id)),
                " ".join(str(v + 1) for v in sorted(node.bag)),
            ])
    paths.append(table)

    depth: dict[int, int] = {}
    for node in td.nodes:  # parents precede children by construction
        depth[node.id] = 0 if node.parent is None else depth[node.parent] + 1
    by_depth: dict[int, list[int]] = {}
    for node in td.nodes:
        by_depth.setdefault(depth[node.id], []).append(node.id)
    pos = {}
    for d, ids in by_depth.items():
        for i, nid in enumerate(sorted(ids)):
            pos[nid] = (i - (len(ids) - 1) / 2, -d)

    fig, ax = plt.subplots(figsize=(6, 4))
    for node in td.nodes:
        if node.parent is not None:
            x0, y0 = pos[node.parent]
            x1, y1 = pos[node.id]
            ax.plot([x0, x1], [y0, y1], color="#999999", zorder=1)
    for node in td.nodes:
        x, y = pos[node.id]
        label = "{" + ",".join(str(v + 1) for v in sorted(node.bag)) + "}"
        ax.scatter([x], [y], s=700, c="#e8eefc", edgecolors="#335", zorder=2)
        ax.text(x, y, label, ha="center", va="center", fontsize=7, zorder=3)
    ax.set_title(f"tree decomposition: {len(td)} bags over n={g.n}")
    ax.axis("off")
    figure = os.path.join(directory, "tree.png")
    fig.savefig(figure, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(figure)
    return paths
