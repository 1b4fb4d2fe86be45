"""Maximal chips: connected fragments cut off from S by important separators."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, neighbourhood
from .separators import enumerate_important_separators


@dataclass(frozen=True)
class Chip:
    vertices: frozenset  # C, connected, disjoint from S
    boundary: frozenset  # N(C), an important C-S separator of size <= 3k


def enumerate_maximal_chips(g: Graph, s, k: int) -> list[Chip]:
    """All inclusion-wise maximal chips with respect to ``s``.

    For every vertex v outside s, the important v-s separators of size at
    most 3k are enumerated; the component of v after removing such a
    separator is a chip candidate.  Maximal candidates are collected into a
    canonical dictionary to drop duplicates.
    """
    s = frozenset(s)
    if not s:
        raise GraphError("s must be nonempty")
    chips: dict[tuple, Chip] = {}
    for v in g.vertices():
        if v in s:
            continue
        reaches = []
        for isep in enumerate_important_separators(g, {v}, s, 3 * k):
            if v in isep.vertices:
                continue  # v itself deleted: empty fragment, not a chip
            reaches.append(isep.reach)
        maximal = [
            r for r in reaches
            if not any(r < r2 for r2 in reaches)
        ]
        for c in maximal:
            key = tuple(sorted(c))
            if key not in chips:
                chips[key] = Chip(vertices=c, boundary=neighbourhood(g, c))
    return [chips[key] for key in sorted(chips)]


def touches(c1: Chip, c2: Chip) -> bool:
    """True iff the chips overlap or share an edge (boundary test form)."""
    if c1 == c2:
        raise GraphError("touching is defined for distinct chips")
    return bool(c1.boundary & c2.vertices)
