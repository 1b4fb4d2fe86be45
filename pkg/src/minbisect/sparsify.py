"""Connectivity certificate: k+1 rounds of spanning-forest extraction.

Edges outside the kept set have k+1 edge-disjoint paths within it, so every
edge cut of size at most k survives sparsification unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


@dataclass(frozen=True)
class SparsificationResult:
    kept_edges: tuple  # E_0, sorted
    forests: tuple     # k+1 edge-disjoint forests, in extraction order

    def graph(self, n: int, weights=None) -> Graph:
        if weights is not None:
            weights = {e: weights[e] for e in self.kept_edges}
        return Graph(n, self.kept_edges, weights)


def sparsify(g: Graph, k: int) -> SparsificationResult:
    """Exactly k+1 spanning forests, BFS-grown from the lowest-id vertices."""
    if k < 0:
        raise GraphError("k must be non-negative")
    remaining = {v: list(g.adj[v]) for v in g.vertices()}
    alive = set(g.edges)
    forests = []
    for _ in range(k + 1):
        forest = []
        seen = set()
        for root in g.vertices():
            if root in seen:
                continue
            seen.add(root)
            queue = [root]
            while queue:
                u = queue.pop(0)
                for v in remaining[u]:
                    if v in seen:
                        continue
                    e = (u, v) if u < v else (v, u)
                    if e not in alive:
                        continue
                    seen.add(v)
                    forest.append(e)
                    queue.append(v)
        for e in forest:
            alive.discard(e)
        forests.append(tuple(sorted(forest)))
    kept = tuple(sorted(e for f in forests for e in f))
    return SparsificationResult(kept_edges=kept, forests=tuple(forests))
