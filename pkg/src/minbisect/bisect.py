"""Top-level minimum-bisection solvers.

Pipeline: sparsify (unweighted only), split into components, build the
unbreakable decomposition per component, run the bottom-up DP where each
bag is one hypergraph-painting instance, and combine component vectors with
a knapsack.  Tables are exact; witnesses are decoded from the winning
branches so results always carry an actual partition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .decompose import Constants, TreeDecomposition, build_decomposition
from .graph import Graph, GraphError, connected_components, induced_subgraph
from .hp import (
    BLACK,
    WHITE,
    HPInstance,
    HPSolution,
    HPWeightedInstance,
    INF,
)
from .sparsify import sparsify


@dataclass(frozen=True)
class SolveOptions:
    """Solver knobs shared by the bisection entry points.

    The DP drives the painting solver deterministically by default: the
    exhaustive support family is provably covering and far cheaper than the
    sampled one at desk scale.  Randomized mode remains available for
    parity with direct solve_hp use.
    """

    seed: int = 0
    deterministic: bool = True
    no_sparsify: bool = False
    eta: int | None = None
    tau: int | None = None
    tau_prime: int | None = None

    def constants(self, k: int) -> Constants:
        return Constants.for_k(k, eta=self.eta, tau=self.tau, tau_prime=self.tau_prime)


@dataclass(frozen=True)
class BisectionResult:
    feasible: bool
    cut_size: int | None
    cut_weight: object | None
    partition: tuple[frozenset, frozenset] | None

    def sizes(self) -> tuple[int, int] | None:
        if self.partition is None:
            return None
        return len(self.partition[0]), len(self.partition[1])


def _edge_connectivity_at_least(g: Graph, u: int, v: int, need: int) -> bool:
    """True iff there are >= need edge-disjoint u-v paths (unit edge flow)."""
    cap: dict[tuple[int, int], int] = {}
    for a, b in g.edges:
        cap[(a, b)] = 1
        cap[(b, a)] = 1
    flow = 0
    while flow < need:
        prev = {u: None}
        queue = [u]
        found = False
        while queue and not found:
            nxt = []
            for cur in queue:
                for nb in g.adj[cur]:
                    if nb in prev or cap.get((cur, nb), 0) <= 0:
                        continue
                    prev[nb] = cur
                    if nb == v:
                        found = True
                        break
                    nxt.append(nb)
                if found:
                    break
            queue = nxt
        if not found:
            return False
        node = v
        while prev[node] is not None:
            par = prev[node]
            cap[(par, node)] -= 1
            cap[(node, par)] = cap.get((node, par), 0) + 1
            node = par
        flow += 1
    return True


def _admissible_colourings(sigma: frozenset, k: int) -> list[frozenset]:
    """White-sets of sigma whose minority colour class has size <= 3k."""
    from itertools import combinations

    sigma_sorted = sorted(sigma)
    out: dict[frozenset, None] = {}
    cap = min(3 * k, len(sigma_sorted))
    for size in range(cap + 1):
        for combo in combinations(sigma_sorted, size):
            out[frozenset(combo)] = None                      # minority white
            out[frozenset(sigma_sorted) - frozenset(combo)] = None  # minority black
    return sorted(out, key=lambda w: (len(w), tuple(sorted(w))))


class _TreeDP:
    """Bottom-up DP over one connected graph's decomposition."""

    def __init__(self, g: Graph, k: int, opts: SolveOptions, weighted: bool):
        if not g.n:
            raise GraphError("empty component")
        self.g = g
        self.k = k
        self.opts = opts
        self.weighted = weighted
        self.c = opts.constants(k)
        self.td: TreeDecomposition = build_decomposition(g, k, self.c)
        self.solutions: dict[tuple, HPSolution] = {}
        self.instances: dict[tuple, object] = {}
        self._uncuttable_cache: dict[int, set] = {}
        for t in self.td.postorder():
            for white in _admissible_colourings(self.td.sigma(t), k):
                col0 = {v: (WHITE if v in white else BLACK) for v in self.td.sigma(t)}
                inst = self.build_instance(t, col0)
                key = (t, white)
                self.instances[key] = inst
                self.solutions[key] = HPSolution(
                    inst, seed=opts.seed, deterministic=opts.deterministic
                )

    # -- instance construction ----------------------------------------------

    def _uncuttable_pairs(self, t: int) -> set:
        """Bag-internal edges no gamma(t)-colouring can cut within budget."""
        if t in self._uncuttable_cache:
            return self._uncuttable_cache[t]
        gamma = self.td.gamma(t)
        sub, keep = induced_subgraph(self.g, gamma)
        to_new = {old: new for new, old in enumerate(keep)}
        bag = self.td.bag(t)
        out = set()
        for u, v in self.g.edges:
            if u in bag and v in bag:
                if _edge_connectivity_at_least(sub, to_new[u], to_new[v], self.k + 1):
                    out.add((u, v))
        self._uncuttable_cache[t] = out
        return out

    def build_instance(self, t: int, col0: dict):
        """One hyperedge per bag vertex, bag edge, and child adhesion."""
        td, g, k = self.td, self.g, self.k
        bag = td.bag(t)
        b = len(td.gamma(t))
        hyperedges: list[frozenset] = []
        costs: list[dict] = []
        weighted = self.weighted
        uncuttable = self._uncuttable_pairs(t)
        for v in sorted(bag):
            hyperedges.append(frozenset({v}))
            if weighted:
                costs.append({(frozenset({v}), 1, 0): 0, (frozenset(), 0, 0): 0})
            else:
                costs.append({(frozenset({v}), 1): 0, (frozenset(), 0): 0})
        for u, v in g.edges:
            if u not in bag or v not in bag:
                continue
            he = frozenset({u, v})
            hyperedges.append(he)
            if weighted:
                cost = {(he, 0, 0): 0, (frozenset(), 0, 0): 0}
                if 1 <= k and (u, v) not in uncuttable:
                    w = g.weight(u, v)
                    cost[(frozenset({u}), 0, 1)] = w
                    cost[(frozenset({v}), 0, 1)] = w
            else:
                cost = {(he, 0): 0, (frozenset(), 0): 0}
                if 1 <= k and (u, v) not in uncuttable:
                    cost[(frozenset({u}), 0)] = 1
                    cost[(frozenset({v}), 0)] = 1
            costs.append(cost)
        for child in td.children[t]:
            sigma = td.sigma(child)
            hyperedges.append(sigma)
            cost: dict = {}
            sigma_edges = [(u, v) for u, v in g.edges if u in sigma and v in sigma]
            for white in _admissible_colourings(sigma, k):
                mu0 = len(white)
                cross = [(u, v) for u, v in sigma_edges if (u in white) != (v in white)]
                sol = self.solutions[(child, white)]
                if weighted:
                    x0 = len(cross)
                    w0 = sum(g.weight(u, v) for u, v in cross)
                    for (mu_c, xi_c), (val, _s, _sup) in sol.best.items():
                        mu = mu_c - mu0
                        xi = xi_c - x0
                        if mu < 0 or xi < 0 or mu > b:
                            continue
                        entry = val - w0
                        cur = cost.get((white, mu, xi))
                        if cur is None or entry < cur:
                            cost[(white, mu, xi)] = entry
                else:
                    x0 = len(cross)
                    for (mu_c,), (val, _s, _sup) in sol.best.items():
                        mu = mu_c - mu0
                        if mu < 0 or mu > b:
                            continue
                        entry = val - x0
                        cur = cost.get((white, mu))
                        if cur is None or entry < cur:
                            cost[(white, mu)] = entry
            costs.append(cost)
        d = max((len(h) for h in hyperedges), default=1)
        q = min(self.c.tau_prime + k, len(bag))
        if weighted:
            return HPWeightedInstance(k=k, b=b, d=d, q=q, vertices=tuple(sorted(bag)),
                                      hyperedges=hyperedges, col0=dict(col0), costs=costs)
        return HPInstance(k=k, b=b, d=d, q=q, vertices=tuple(sorted(bag)),
                          hyperedges=hyperedges, col0=dict(col0), costs=costs)

    # -- results --------------------------------------------------------------

    def root_solution(self) -> HPSolution:
        root = self.td.root
        return self.solutions[(root.id, frozenset())]

    def root_vector(self) -> list:
        """Unweighted: minimum cut with exactly mu white vertices, mu = 0..n."""
        n = self.g.n
        w = [INF] * (n + 1)
        for (mu,), (val, _s, _sup) in self.root_solution().best.items():
            if mu <= n and val < w[mu]:
                w[mu] = val
        return w

    def root_table(self) -> dict:
        """Weighted: {(mu, xi): min weight}."""
        return {key: entry[0] for key, entry in self.root_solution().best.items()}

    def decode_white_set(self, t: int, white_sigma: frozenset, key) -> frozenset:
        """White vertices of gamma(t) achieving the table entry ``key``."""
        sol = self.solutions[(t, white_sigma)]
        decoded = sol.decode(key)
        if decoded is None:
            raise GraphError("decode requested for infeasible entry")
        colouring, per_edge = decoded
        whites = {v for v, colour in colouring.items() if colour == WHITE}
        inst = self.instances[(t, white_sigma)]
        td = self.td
        n_bag_edges = len(inst.hyperedges) - len(td.children[t])
        for slot, child in enumerate(td.children[t]):
            entry = per_edge[n_bag_edges + slot]
            if entry is None:
                raise GraphError("child hyperedge missing from decode")
            child_white, key_split = entry
            mu0 = len(child_white)
            sigma = td.sigma(child)
            sigma_edges = [(u, v) for u, v in self.g.edges if u in sigma and v in sigma]
            cross = [(u, v) for u, v in sigma_edges
                     if (u in child_white) != (v in child_white)]
            if self.weighted:
                child_key = (key_split[0] + mu0, key_split[1] + len(cross))
            else:
                child_key = (key_split[0] + mu0,)
            whites |= self.decode_white_set(child, child_white, child_key)
        return frozenset(whites)


_DP_CACHE: dict = {}
_DP_CACHE_LIMIT = 48


def _tree_dp(g: Graph, k: int, opts: SolveOptions, weighted: bool) -> _TreeDP:
    key = (g.fingerprint(), k, opts, weighted)
    dp = _DP_CACHE.get(key)
    if dp is None:
        dp = _TreeDP(g, k, opts, weighted)
        if len(_DP_CACHE) >= _DP_CACHE_LIMIT:
            _DP_CACHE.pop(next(iter(_DP_CACHE)))
        _DP_CACHE[key] = dp
    return dp


def _prepare_components(g: Graph, k: int, opts: SolveOptions, weighted: bool):
    """Sparsify (unweighted), split into components, run per-component DPs."""
    if weighted or opts.no_sparsify:
        work = g
    else:
        res = sparsify(g, k)
        work = res.graph(g.n)
    comps = connected_components(work)
    out = []
    for comp in comps:
        sub, keep = induced_subgraph(work, comp)
        out.append((_tree_dp(sub, k, opts, weighted), keep))
    return out


def solve_sized_cut(g: Graph, k: int, target: int,
                    opts: SolveOptions = SolveOptions()) -> BisectionResult:
    """Minimum cut over partitions with |A| = target, or infeasible if > k."""
    if k < 0:
        raise GraphError("k must be non-negative")
    if not 0 <= target <= g.n:
        raise GraphError("target out of range")
    if g.n and len(connected_components(g)) != 1:
        raise GraphError("solve_sized_cut requires a connected graph")
    if g.n == 0:
        return BisectionResult(True, 0, None, (frozenset(), frozenset()))
    dps = _prepare_components(g, k, opts, weighted=False)
    dp, keep = dps[0]
    vec = dp.root_vector()
    val = vec[target]
    if val > k:
        return BisectionResult(False, None, None, None)
    whites = dp.decode_white_set(dp.td.root.id, frozenset(), (target,))
    a = frozenset(keep[v] for v in whites)
    b = frozenset(g.vertices()) - a
    return BisectionResult(True, int(val), None, (a, b))


def _combine_vectors(vectors: list[list]) -> tuple[list, list]:
    """Knapsack across components; returns (combined, per-mu split lists)."""
    comb = [INF] * 1
    comb[0] = 0
    splits: list[list | None] = [[]]
    for vec in vectors:
        new_len = len(comb) + len(vec) - 1
        new = [INF] * new_len
        new_splits: list[list | None] = [None] * new_len
        for mu1, v1 in enumerate(comb):
            if v1 == INF:
                continue
            for mu2, v2 in enumerate(vec):
                if v2 == INF:
                    continue
                tot = v1 + v2
                mu = mu1 + mu2
                if tot < new[mu]:
                    new[mu] = tot
                    new_splits[mu] = splits[mu1] + [mu2]
        comb = new
        splits = new_splits
    return comb, splits


def solve_bisection(g: Graph, k: int,
                    opts: SolveOptions = SolveOptions()) -> BisectionResult:
    """Minimum bisection: sides differ by at most one, at most k cut edges."""
    if k < 0:
        raise GraphError("k must be non-negative")
    if g.n == 0:
        return BisectionResult(True, 0, None, (frozenset(), frozenset()))
    dps = _prepare_components(g, k, opts, weighted=False)
    vectors = [dp.root_vector() for dp, _keep in dps]
    comb, splits = _combine_vectors(vectors)
    lo, hi = g.n // 2, (g.n + 1) // 2
    candidates = [(comb[mu], mu) for mu in {lo, hi} if comb[mu] <= k]
    if not candidates:
        return BisectionResult(False, None, None, None)
    val, mu = min(candidates)
    a = set()
    for (dp, keep), mu_c in zip(dps, splits[mu]):
        whites = dp.decode_white_set(dp.td.root.id, frozenset(), (mu_c,))
        a.update(keep[v] for v in whites)
    a = frozenset(a)
    b = frozenset(g.vertices()) - a
    return BisectionResult(True, int(val), None, (a, b))


def solve_weighted_bisection(g: Graph, k: int,
                             opts: SolveOptions = SolveOptions()) -> BisectionResult:
    """Minimum-weight bisection among partitions with at most k cut edges."""
    if k < 0:
        raise GraphError("k must be non-negative")
    if g.n == 0:
        return BisectionResult(True, 0, 0, (frozenset(), frozenset()))
    dps = _prepare_components(g, k, opts, weighted=True)
    tables = [dp.root_table() for dp, _keep in dps]
    comb: dict = {(0, 0): (0, [])}
    for idx, table in enumerate(tables):
        new: dict = {}
        for (mu1, xi1), (w1, split) in comb.items():
            for (mu2, xi2), w2 in table.items():
                mu, xi = mu1 + mu2, xi1 + xi2
                if xi > k:
                    continue
                tot = w1 + w2
                cur = new.get((mu, xi))
                if cur is None or tot < cur[0]:
                    new[(mu, xi)] = (tot, split + [(mu2, xi2)])
        comb = new
    lo, hi = g.n // 2, (g.n + 1) // 2
    best = None
    for (mu, xi), (wt, split) in comb.items():
        if mu not in (lo, hi):
            continue
        key = (wt, xi, mu)
        if best is None or key < best[0]:
            best = (key, mu, xi, wt, split)
    if best is None:
        return BisectionResult(False, None, None, None)
    _, mu, xi, wt, split = best
    a = set()
    for (dp, keep), key_c in zip(dps, split):
        whites = dp.decode_white_set(dp.td.root.id, frozenset(), key_c)
        a.update(keep[v] for v in whites)
    a = frozenset(a)
    b = frozenset(g.vertices()) - a
    return BisectionResult(True, int(xi), wt, (a, b))


def build_hp_instance_for_bag(g: Graph, dp: _TreeDP, node: int, col0: dict):
    """Construction surface for tests: one bag's painting instance."""
    return dp.build_instance(node, col0)


def group_values(values: list, alpha) -> list[list]:
    """Partition values in [0, alpha] summing to 1 into <= 2*ceil(1/alpha)-1
    groups, each summing to at most alpha (prefix-cut construction)."""
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        if alpha != 1:
            raise GraphError("alpha must lie in (0, 1]")
    vals = [Fraction(v) for v in values]
    if any(v < 0 or v > alpha for v in vals):
        raise GraphError("every value must lie in [0, alpha]")
    if sum(vals) != 1:
        raise GraphError("values must sum to 1")
    q = math.ceil(1 / alpha)
    n = len(vals)
    prefix = [Fraction(0)] * (n + 1)
    for i, v in enumerate(vals):
        prefix[i + 1] = prefix[i] + v
    cut_indices = []
    for j in range(1, q):
        target = j * alpha
        ij = next(i for i in range(1, n + 1)
                  if prefix[i - 1] <= target < prefix[i])
        cut_indices.append(ij)
    groups: list[list] = []
    start = 1
    for ij in cut_indices:
        groups.append([vals[i - 1] for i in range(start, ij)])
        groups.append([vals[ij - 1]])
        start = ij + 1
    groups.append([vals[i - 1] for i in range(start, n + 1)])
    return groups
