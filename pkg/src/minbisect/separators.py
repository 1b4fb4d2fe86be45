"""Important separators and the (q,k)-unbreakability decision procedure.

Separators here follow the loose convention: a set W separates X from S when
no component of G - W contains vertices of both, so W may contain terminal
vertices.  That convention is what the chip machinery downstream relies on
(chip boundaries routinely meet S).  The enumeration works on an augmented
graph with one apex per terminal set, which reduces the loose notion to the
classic one with undeletable single terminals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    Separation,
    connected_components,
    min_vertex_cut,
    reachable_set,
)


@dataclass(frozen=True)
class ImportantSeparator:
    vertices: frozenset
    reach: frozenset  # R_{G-W}(X - W)


@dataclass(frozen=True)
class BreakabilityWitness:
    separation: Separation


def _loose_separates(g: Graph, w: frozenset, x: frozenset, s: frozenset) -> bool:
    reach = reachable_set(g, x - w, w)
    return not (reach & (s - w))


def enumerate_important_separators(g: Graph, x, s, k: int) -> list[ImportantSeparator]:
    """All important x-s separators of size at most k.

    Branches on the minimum cut pushed maximally towards s: each cut vertex
    is either committed to the separator (budget drops) or absorbed into the
    source side (reach grows).  Candidates collected at the leaves are then
    filtered down to the important ones; distinct minimal separators have
    distinct reaches, so pairwise domination checks against the candidate
    pool are exact.
    """
    x = frozenset(x)
    s = frozenset(s)
    if not x or not s:
        raise GraphError("x and s must be nonempty")
    if k < 0:
        return []
    # Apex augmentation: apex_x adjacent to all of x, apex_s to all of s.
    apex_x, apex_s = g.n, g.n + 1
    edges = list(g.edges)
    edges += [(apex_x, v) for v in sorted(x)]
    edges += [(apex_s, v) for v in sorted(s)]
    g2 = Graph(g.n + 2, edges)

    candidates: dict[frozenset, frozenset] = {}

    def rec(deleted: frozenset, source_side: frozenset, budget: int):
        cut = min_vertex_cut(g2, source_side, {apex_s}, budget, removed=deleted)
        if cut is None:
            return
        if not cut:
            if deleted not in candidates:
                candidates[deleted] = reachable_set(g, x - deleted, deleted)
            return
        reach = reachable_set(g2, source_side, deleted | cut)
        v = min(cut)
        rec(deleted | {v}, frozenset(reach), budget - 1)
        rec(deleted, frozenset(reach) | {v}, budget)

    rec(frozenset(), frozenset({apex_x}), k)

    # Post-filter: minimality, then pairwise non-domination.
    minimal = {}
    for w, reach in candidates.items():
        if all(not _loose_separates(g, w - {v}, x, s) for v in w):
            minimal[w] = reach
    out = []
    for w, reach in minimal.items():
        dominated = any(
            w2 != w and len(w2) <= len(w) and reach < reach2
            for w2, reach2 in minimal.items()
        )
        if not dominated:
            out.append(ImportantSeparator(vertices=w, reach=reach))
    out.sort(key=lambda isep: (len(isep.vertices), tuple(sorted(isep.vertices))))
    return out


def is_unbreakable(g: Graph, a, q: int, k: int) -> BreakabilityWitness | None:
    """None iff ``a`` is (q,k)-unbreakable; otherwise a witnessing separation.

    Tries every pair of disjoint (q+1)-subsets of ``a`` and asks for a small
    vertex cut between them; terminal vertices are not deletable, so a found
    cut Z yields sides with at least q+1 vertices of ``a`` each.  Components
    of G - Z touching neither chosen subset go to the x side.
    """
    if q < 0 or k < 0:
        raise GraphError("q and k must be non-negative")
    a = sorted(set(a))
    if len(a) <= 2 * q + 1:
        return None  # both sides can never exceed q
    from itertools import combinations

    for x0 in combinations(a, q + 1):
        rest = [v for v in a if v not in set(x0)]
        for y0 in combinations(rest, q + 1):
            z = min_vertex_cut(g, x0, y0, k)
            if z is None:
                continue
            x_side = set(z)
            y_side = set(z)
            x0set, y0set = set(x0), set(y0)
            for comp in connected_components(g, removed=z):
                if comp & y0set:
                    y_side |= comp
                else:
                    x_side |= comp  # components off both subsets go left
            sep = Separation(x=frozenset(x_side), y=frozenset(y_side))
            return BreakabilityWitness(separation=sep)
    return None
