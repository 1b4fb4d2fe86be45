"""Brute-force reference implementations used as ground truth in tests.

Everything here is deliberately naive and independent of the main pipeline:
the only shared code is the Graph container.  Enumeration guards refuse
inputs large enough to make exhaustive search meaningless.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GraphError

INF = float("inf")


class OracleSizeError(GraphError):
    """Input too large for exhaustive enumeration."""


def _cut_edges(g: Graph, side_a: frozenset) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges if (u in side_a) != (v in side_a)]


def brute_bisection(g: Graph, k: int, target: int, weighted: bool = False):
    """Exact sized-cut optimum by enumerating all size-``target`` subsets.

    Returns (feasible, cut_size, cut_weight, partition) where partition is
    (A, B) with |A| = target; infeasible results carry None fields.
    """
    if g.n > 24:
        raise OracleSizeError("brute_bisection limited to n <= 24")
    if not 0 <= target <= g.n:
        raise GraphError("target out of range")
    best = None
    verts = list(g.vertices())
    for combo in combinations(verts, target):
        a = frozenset(combo)
        cut = _cut_edges(g, a)
        if len(cut) > k:
            continue
        if weighted:
            value = sum(g.weight(u, v) for u, v in cut)
            key = (value, len(cut), tuple(sorted(a)))
        else:
            value = len(cut)
            key = (value, tuple(sorted(a)))
        if best is None or key < best[0]:
            best = (key, a, len(cut), value)
    if best is None:
        return False, None, None, None
    _, a, cut_size, value = best
    b = frozenset(verts) - a
    weight = value if weighted else None
    return True, cut_size, weight, (a, b)


def brute_hp(instance) -> list:
    """Hypergraph-painting optimum by enumerating all total colourings.

    ``instance`` is an hp.HPInstance; only its data fields are read.  The
    per-colouring budget distribution is a plain nested-loop accumulation,
    independent of the solver's convolution code.
    """
    n = len(instance.vertices)
    if n > 16:
        raise OracleSizeError("brute_hp limited to 16 vertices")
    b, k = instance.b, instance.k
    free = [v for v in instance.vertices if v not in instance.col0]
    fixed_white = frozenset(v for v, c in instance.col0.items() if c == "white")
    w = [INF] * (b + 1)
    for mask in range(1 << len(free)):
        white = set(fixed_white)
        for i, v in enumerate(free):
            if mask >> i & 1:
                white.add(v)
        # acc[mu] = min total cost using the hyperedges folded so far
        acc = [0] + [INF] * b
        for he, cost in zip(instance.hyperedges, instance.costs):
            colkey = frozenset(he & white)
            new = [INF] * (b + 1)
            for mu1 in range(b + 1):
                if acc[mu1] > k:
                    continue
                for (ck, mu2), val in cost.items():
                    if ck != colkey:
                        continue
                    mu = mu1 + mu2
                    if mu > b:
                        continue
                    tot = acc[mu1] + val
                    if tot <= k and tot < new[mu]:
                        new[mu] = tot
            acc = new
        for mu in range(b + 1):
            if acc[mu] < w[mu]:
                w[mu] = acc[mu]
    return w


def brute_hp_weighted(instance) -> dict:
    """Weighted analogue of brute_hp: returns {(mu, xi): min weight}."""
    n = len(instance.vertices)
    if n > 16:
        raise OracleSizeError("brute_hp_weighted limited to 16 vertices")
    b, k = instance.b, instance.k
    free = [v for v in instance.vertices if v not in instance.col0]
    fixed_white = frozenset(v for v, c in instance.col0.items() if c == "white")
    best: dict = {}
    for mask in range(1 << len(free)):
        white = set(fixed_white)
        for i, v in enumerate(free):
            if mask >> i & 1:
                white.add(v)
        acc = {(0, 0): 0}
        for he, cost in zip(instance.hyperedges, instance.costs):
            colkey = frozenset(he & white)
            new = {}
            for (mu1, xi1), wt1 in acc.items():
                for (ck, mu2, xi2), wt2 in cost.items():
                    if ck != colkey:
                        continue
                    mu, xi = mu1 + mu2, xi1 + xi2
                    if mu > b or xi > k:
                        continue
                    tot = wt1 + wt2
                    cur = new.get((mu, xi))
                    if cur is None or tot < cur:
                        new[(mu, xi)] = tot
            acc = new
        for key, wt in acc.items():
            cur = best.get(key)
            if cur is None or wt < cur:
                best[key] = wt
    return best


def _is_separator(g: Graph, w: frozenset, x: frozenset, y: frozenset) -> bool:
    alive = [v for v in x if v not in w]
    seen = set(alive)
    stack = list(alive)
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in w and v not in seen:
                seen.add(v)
                stack.append(v)
    return not any(v in seen for v in y if v not in w)


def _reach(g: Graph, w: frozenset, x: frozenset) -> frozenset:
    alive = [v for v in x if v not in w]
    seen = set(alive)
    stack = list(alive)
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in w and v not in seen:
                seen.add(v)
                stack.append(v)
    return frozenset(seen)


def brute_important_separators(g: Graph, x, s, k: int) -> list[frozenset]:
    """All important x-s separators of size <= k, straight from the definition.

    Separators may contain terminal vertices; importance is judged against
    every separator of at most the same size (not just the minimal ones).
    """
    if g.n > 12:
        raise OracleSizeError("brute_important_separators limited to n <= 12")
    x = frozenset(x)
    s = frozenset(s)
    verts = list(g.vertices())
    separators: list[tuple[frozenset, frozenset]] = []  # (W, reach)
    for size in range(0, k + 1):
        for combo in combinations(verts, size):
            w = frozenset(combo)
            if _is_separator(g, w, x, s):
                separators.append((w, _reach(g, w, x)))
    important = []
    for w, reach in separators:
        if any(w2 < w for w2, _ in separators):
            continue  # not inclusion-minimal
        dominated = False
        for w2, reach2 in separators:
            if w2 != w and len(w2) <= len(w) and reach < reach2:
                dominated = True
                break
        if not dominated:
            important.append(w)
    return sorted(important, key=lambda w: (len(w), tuple(sorted(w))))


def brute_unbreakability(g: Graph, a, q: int, k: int):
    """Witnessing separation for (q,k)-breakability of ``a``, or None.

    Enumerates every candidate X∩Y of size <= k and every assignment of the
    remaining components to the two sides.
    """
    if g.n > 12:
        raise OracleSizeError("brute_unbreakability limited to n <= 12")
    a = frozenset(a)
    verts = list(g.vertices())
    for size in range(0, k + 1):
        for combo in combinations(verts, size):
            z = frozenset(combo)
            comps = []
            seen = set(z)
            for v in verts:
                if v in seen:
                    continue
                comp = [v]
                seen.add(v)
                stack = [v]
                while stack:
                    u = stack.pop()
                    for t in g.adj[u]:
                        if t not in seen:
                            seen.add(t)
                            comp.append(t)
                            stack.append(t)
                comps.append(frozenset(comp))
            counts = [len(c & a) for c in comps]
            total = sum(counts)
            if total <= 2 * q:
                continue
            # subset-sum over component counts: find a side sum in (q, total-q)
            achievable = {0: []}
            found = None
            for i, c in enumerate(counts):
                for s, idxs in list(achievable.items()):
                    s2 = s + c
                    if s2 not in achievable:
                        achievable[s2] = idxs + [i]
                        if q < s2 < total - q:
                            found = achievable[s2]
                            break
                if found is not None:
                    break
            if found is not None:
                chosen = set(found)
                x = set(z)
                y = set(z)
                for i, comp in enumerate(comps):
                    (x if i in chosen else y).update(comp)
                return frozenset(x), frozenset(y)
    return None


def brute_edge_disjoint_paths(n: int, edges, u: int, v: int) -> int:
    """Max number of edge-disjoint u-v paths in (V, edges), by unit edge flow."""
    adj: dict[int, dict[int, int]] = {i: {} for i in range(n)}
    for a, b in edges:
        adj[a][b] = adj[a].get(b, 0) + 1
        adj[b][a] = adj[b].get(a, 0) + 1
    flow = 0
    while True:
        prev = {u: None}
        queue = [u]
        while queue and v not in prev:
            cur = queue.pop(0)
            for nxt, cap in sorted(adj[cur].items()):
                if cap > 0 and nxt not in prev:
                    prev[nxt] = cur
                    queue.append(nxt)
        if v not in prev:
            return flow
        node = v
        while prev[node] is not None:
            par = prev[node]
            adj[par][node] -= 1
            adj[node][par] = adj[node].get(par, 0) + 1
            node = par
        flow += 1
