"""Immutable undirected graphs and the vertex-connectivity primitives.

Vertices are the integers ``0..n-1``.  A :class:`Graph` never changes after
construction; "deleting" vertices is expressed by passing a removed-set to the
traversal helpers, so the recursive decomposition can share one graph object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

INF = float("inf")

VertexSet = frozenset  # sets of vertex ids


class GraphError(ValueError):
    """Raised on malformed graph inputs or violated preconditions."""


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with optional non-negative edge weights."""

    __slots__ = ("n", "adj", "edges", "weights", "_fingerprint")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        weights: Mapping[tuple[int, int], Fraction | int] | None = None,
    ):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = _edge_key(u, v)
            if key in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(nb)) for nb in adj)
        self.edges = tuple(sorted(seen))
        if weights is not None:
            wt = {}
            for key, w in weights.items():
                key = _edge_key(*key)
                if key not in seen:
                    raise GraphError(f"weight given for missing edge {key}")
                if w < 0:
                    raise GraphError(f"negative weight on edge {key}")
                wt[key] = w
            self.weights = {e: wt.get(e, 1) for e in self.edges}
        else:
            self.weights = None
        self._fingerprint = (n, self.edges, None if weights is None else tuple(sorted(self.weights.items())))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def weight(self, u: int, v: int):
        if self.weights is None:
            return 1
        return self.weights[_edge_key(u, v)]

    def fingerprint(self):
        """Hashable identity used by solver-level caches."""
        return self._fingerprint

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Separation:
    """A pair (x, y) covering V(G) with no x-only to y-only edges."""

    x: VertexSet
    y: VertexSet

    def order(self) -> int:
        return len(self.x & self.y)

    def is_valid(self, g: Graph) -> bool:
        if self.x | self.y != frozenset(g.vertices()):
            return False
        x_only = self.x - self.y
        y_only = self.y - self.x
        for u in x_only:
            for v in g.adj[u]:
                if v in y_only:
                    return False
        return True


def connected_components(g: Graph, removed: VertexSet = frozenset()) -> list[VertexSet]:
    """Components of g minus ``removed``, ordered by smallest member."""
    seen = set(removed)
    out = []
    for s in g.vertices():
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s`` plus the new-id -> old-id mapping.

    The mapping is the sorted list of kept vertex ids, so the round trip
    ``mapping[new_id] == old_id`` holds.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    old_to_new = {old: new for new, old in enumerate(keep)}
    in_s = set(keep)
    edges = []
    weights = {} if g.weights is not None else None
    for u, v in g.edges:
        if u in in_s and v in in_s:
            edges.append((old_to_new[u], old_to_new[v]))
            if weights is not None:
                weights[(old_to_new[u], old_to_new[v])] = g.weights[(u, v)]
    return Graph(len(keep), edges, weights), keep


def neighbourhood(g: Graph, s: Iterable[int]) -> VertexSet:
    """Open neighbourhood N(s)."""
    s = set(s)
    out = set()
    for u in s:
        for v in g.adj[u]:
            if v not in s:
                out.add(v)
    return frozenset(out)


def reachable_set(g: Graph, sources: Iterable[int], removed: Iterable[int] = ()) -> VertexSet:
    """Vertices reachable from ``sources - removed`` in g minus ``removed``."""
    removed = set(removed)
    seen = set()
    stack = [s for s in sources if s not in removed]
    seen.update(stack)
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in seen and v not in removed:
                seen.add(v)
                stack.append(v)
    return frozenset(seen)


def edge_cut_size(g: Graph, colouring: Mapping[int, object]) -> int:
    """Number of bichromatic edges under a total colouring."""
    return sum(1 for u, v in g.edges if colouring[u] != colouring[v])


def edge_cut_weight(g: Graph, colouring: Mapping[int, object]):
    """Total weight of bichromatic edges (weights default to 1)."""
    total = 0
    for u, v in g.edges:
        if colouring[u] != colouring[v]:
            total += g.weight(u, v)
    return total


class _FlowNetwork:
    """Unit-vertex-capacity flow via vertex splitting.

    Node ids: 2v = v_in, 2v+1 = v_out.  Terminal vertices get effectively
    infinite internal capacity (their split arc is never counted as cut).
    Arc capacities are 1 for internal split arcs and "infinite" for edge arcs;
    augmentation pushes one unit per round, so k+1 rounds decide whether the
    minimum cut exceeds k even when only infinite arcs are available.
    """

    def __init__(self, g: Graph, sources: frozenset, sinks: frozenset, removed: frozenset):
        self.g = g
        self.sources = sources
        self.sinks = sinks
        self.removed = removed
        # split-arc flow: vertex -> 0/1; edge-arc flow: (u, v) directed -> int
        self.split_flow: dict[int, int] = {}
        self.edge_flow: dict[tuple[int, int], int] = {}

    def _residual_out(self, node: int):
        """Residual arcs leaving a split node (generated lazily)."""
        v, is_out = node >> 1, node & 1
        if is_out:
            for w in self.g.adj[v]:
                if w not in self.removed:
                    yield 2 * w  # edge arc v_out -> w_in, infinite cap
            if self.split_flow.get(v, 0) > 0:
                yield 2 * v  # undo internal flow
        else:
            free_internal = v in self.sources or v in self.sinks or self.split_flow.get(v, 0) == 0
            if free_internal:
                yield 2 * v + 1
            for w in self.g.adj[v]:
                # undo edge flow w_out -> v_in
                if w not in self.removed and self.edge_flow.get((w, v), 0) > 0:
                    yield 2 * w + 1

    def augment(self) -> bool:
        """One BFS round; returns True if a source->sink unit was pushed."""
        start = [2 * v + 1 for v in sorted(self.sources) if v not in self.removed]
        prev: dict[int, int] = {s: -1 for s in start}
        queue = list(start)
        goal = -1
        while queue:
            nxt = []
            for node in queue:
                for to in self._residual_out(node):
                    if to in prev:
                        continue
                    prev[to] = node
                    if to & 1 == 0 and (to >> 1) in self.sinks:
                        goal = to
                        break
                    nxt.append(to)
                if goal >= 0:
                    break
            if goal >= 0:
                break
            queue = nxt
        if goal < 0:
            return False
        node = goal
        while prev[node] != -1:
            par = prev[node]
            if par >> 1 == node >> 1:  # internal arc
                v = node >> 1
                if node & 1:  # in -> out forward
                    self.split_flow[v] = self.split_flow.get(v, 0) + 1
                else:  # out -> in undo
                    self.split_flow[v] -= 1
            elif par & 1 and node & 1 == 0:  # u_out -> w_in, forward edge arc
                u, w = par >> 1, node >> 1
                back = self.edge_flow.get((w, u), 0)
                if back > 0:
                    self.edge_flow[(w, u)] = back - 1
                else:
                    self.edge_flow[(u, w)] = self.edge_flow.get((u, w), 0) + 1
            else:  # v_in -> w_out, undo arc of edge flow w -> v
                v, w = par >> 1, node >> 1
                self.edge_flow[(w, v)] = self.edge_flow.get((w, v), 0) - 1
            node = par
        return True

    def sink_side_cut(self) -> frozenset:
        """Min cut closest to the sinks: reverse-residual co-reachability."""
        co = set()
        queue = []
        for v in sorted(self.sinks):
            if v not in self.removed:
                co.add(2 * v)
                queue.append(2 * v)
        # reverse residual: arc a->b traversed b->a when residual(a->b) > 0
        while queue:
            node = queue.pop()
            v, is_out = node >> 1, node & 1
            if is_out:
                # arcs into v_out: internal v_in->v_out (residual if unsaturated or terminal)
                free = v in self.sources or v in self.sinks or self.split_flow.get(v, 0) == 0
                if free and 2 * v not in co:
                    co.add(2 * v)
                    queue.append(2 * v)
                # undo arcs w_in -> v_out exist when edge_flow[v][w] > 0 is... none (edge arcs go out->in)
                for w in self.g.adj[v]:
                    if w not in self.removed and self.edge_flow.get((v, w), 0) > 0:
                        # residual undo arc w_in -> v_out
                        if 2 * w not in co:
                            co.add(2 * w)
                            queue.append(2 * w)
            else:
                # arcs into v_in: edge arcs w_out -> v_in (infinite, always residual)
                for w in self.g.adj[v]:
                    if w not in self.removed and (2 * w + 1) not in co:
                        co.add(2 * w + 1)
                        queue.append(2 * w + 1)
                # internal undo arc v_out -> v_in when split_flow[v] > 0
                if self.split_flow.get(v, 0) > 0 and (2 * v + 1) not in co:
                    co.add(2 * v + 1)
                    queue.append(2 * v + 1)
        cut = set()
        for v in self.g.vertices():
            if v in self.removed or v in self.sources or v in self.sinks:
                continue
            if (2 * v + 1) in co and (2 * v) not in co:
                cut.add(v)
        return frozenset(cut)


def min_vertex_cut(
    g: Graph,
    x0: Iterable[int],
    y0: Iterable[int],
    k: int,
    removed: Iterable[int] = (),
    terminals_deletable: bool = False,
) -> frozenset | None:
    """Minimum x0-y0 vertex separator of size <= k, or None.

    By default terminal vertices cannot be deleted (they get infinite
    capacity); with ``terminals_deletable`` the search also considers
    separators containing terminals, matching the loose separator notion
    where only the surviving components matter.  The returned separator is
    the minimum cut closest to y0, which makes the result deterministic and
    maximises the x0-side reach.
    """
    x0 = frozenset(x0)
    y0 = frozenset(y0)
    removed = frozenset(removed)
    if x0 & y0 and not terminals_deletable:
        raise GraphError("x0 and y0 overlap")
    if terminals_deletable:
        # Apex trick: fresh source/sink vertices adjacent to x0/y0 make every
        # original vertex (terminals included) deletable without changing
        # which vertex sets separate x0 from y0.
        apex_x, apex_y = g.n, g.n + 1
        edges = list(g.edges)
        edges += [(apex_x, v) for v in sorted(x0)]
        edges += [(apex_y, v) for v in sorted(y0)]
        g2 = Graph(g.n + 2, edges)
        return min_vertex_cut(g2, {apex_x}, {apex_y}, k, removed=removed)
    net = _FlowNetwork(g, x0, y0, removed)
    flow = 0
    while flow <= k:
        if not net.augment():
            break
        flow += 1
    if flow > k:
        return None
    return net.sink_side_cut()


def is_separator(g: Graph, w: Iterable[int], x: Iterable[int], y: Iterable[int]) -> bool:
    """True iff no component of g - w contains both an x and a y vertex."""
    w = frozenset(w)
    x_alive = [v for v in x if v not in w]
    y_alive = frozenset(v for v in y if v not in w)
    reach = reachable_set(g, x_alive, w)
    return not (reach & y_alive)
