"""Hypergraph painting: minimise summed hyperedge costs over 2-colourings.

Each solver branch guesses which hyperedges are bichromatic and how (the
support); everything else collapses into monochromatic components, the
guess is cleaned up, and per-component colour choices are aggregated with
knapsack convolutions.  Branch families come from splitters and perfect
families in randomized mode and from exhaustive small-support enumeration
in deterministic mode.  Every branch value is achievable by a real
colouring, so the pointwise minimum over branches is exact once one branch
matches an optimal colouring.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, product

from .graph import GraphError

INF = float("inf")

BLACK = "black"
WHITE = "white"

_LOG_TARGET = math.log(2) * 21  # per-layer failure below 2^-21


class HPInstanceError(GraphError):
    """Improper hypergraph-painting instance."""


# ---------------------------------------------------------------------------
# knapsack function algebra


@dataclass(frozen=True)
class KnapsackFn:
    """Function {0..b} -> {0..k, inf} under min-plus convolution."""

    b: int
    k: int
    values: tuple

    @staticmethod
    def from_entries(b: int, k: int, entries: dict) -> "KnapsackFn":
        vals = [INF] * (b + 1)
        for mu, val in entries.items():
            if not 0 <= mu <= b:
                raise GraphError(f"mu={mu} outside 0..{b}")
            vals[mu] = val if val <= k else INF
        return KnapsackFn(b=b, k=k, values=tuple(vals))

    @staticmethod
    def identity(b: int, k: int) -> "KnapsackFn":
        return KnapsackFn.from_entries(b, k, {0: 0})

    @staticmethod
    def infinite(b: int, k: int) -> "KnapsackFn":
        return KnapsackFn(b=b, k=k, values=(INF,) * (b + 1))

    def finite_entries(self) -> dict:
        return {mu: v for mu, v in enumerate(self.values) if v <= self.k}


def _check_operands(g: KnapsackFn, h: KnapsackFn):
    if g.b != h.b or g.k != h.k:
        raise GraphError("operands must share b and k")


def oplus(g: KnapsackFn, h: KnapsackFn) -> KnapsackFn:
    """Min-plus convolution, saturating above k."""
    _check_operands(g, h)
    b, k = g.b, g.k
    out = [INF] * (b + 1)
    for mu1, v1 in enumerate(g.values):
        if v1 > k:
            continue
        top = b - mu1
        for mu2 in range(top + 1):
            v2 = h.values[mu2]
            if v2 > k:
                continue
            tot = v1 + v2
            if tot <= k and tot < out[mu1 + mu2]:
                out[mu1 + mu2] = tot
    return KnapsackFn(b=b, k=k, values=tuple(out))


def min_fn(g: KnapsackFn, h: KnapsackFn) -> KnapsackFn:
    """Pointwise minimum."""
    _check_operands(g, h)
    return KnapsackFn(
        b=g.b, k=g.k,
        values=tuple(min(a, c) for a, c in zip(g.values, h.values)),
    )


def oplus_fft(g: KnapsackFn, h: KnapsackFn) -> KnapsackFn:
    """Same convolution via per-level 0/1 polynomial products.

    Exact: coefficients are integer counts bounded by b+1, far inside
    int64.  Only worthwhile for large b; the naive loop stays the
    correctness reference.
    """
    import numpy as np

    _check_operands(g, h)
    b, k = g.b, g.k
    levels_g = [np.array([1 if v == j else 0 for v in g.values], dtype=np.int64)
                for j in range(k + 1)]
    levels_h = [np.array([1 if v == j else 0 for v in h.values], dtype=np.int64)
                for j in range(k + 1)]
    out = [INF] * (b + 1)
    for j1 in range(k + 1):
        if not levels_g[j1].any():
            continue
        for j2 in range(k + 1 - j1):
            if not levels_h[j2].any():
                continue
            prod = np.convolve(levels_g[j1], levels_h[j2])
            tot = j1 + j2
            for mu in range(min(b + 1, len(prod))):
                if prod[mu] and tot < out[mu]:
                    out[mu] = tot
    return KnapsackFn(b=b, k=k, values=tuple(out))


# ---------------------------------------------------------------------------
# derandomization families


def splitter_family(universe_size: int, a: int, b: int, seed: int = 0,
                    deterministic: bool = True) -> list[frozenset]:
    """Sets hitting every disjoint (A, B): some member contains A, avoids B.

    Deterministic mode returns all subsets of size at most a; the member
    equal to A itself witnesses every pair, so the family provably covers
    regardless of b (practical at desk scale only).  Randomized mode samples
    with per-element probability a/(a+b), sized so a fixed pair is missed
    with probability below 2^-21.
    """
    if not (0 <= a <= universe_size and 0 <= b <= universe_size):
        raise GraphError("need 0 <= a, b <= universe size")
    universe = list(range(universe_size))
    if deterministic:
        return [frozenset(c) for size in range(a + 1)
                for c in combinations(universe, size)]
    if a == 0:
        return [frozenset()]
    if b == 0:
        return [frozenset(universe)]
    pi = a / (a + b)
    p_star = pi ** a * (1 - pi) ** b
    reps = math.ceil(_LOG_TARGET / p_star)
    rng = random.Random(seed)
    fam = [frozenset(), frozenset(universe)]
    for _ in range(reps):
        fam.append(frozenset(v for v in universe if rng.random() < pi))
    return fam


def perfect_family(n: int, r: int, seed: int = 0,
                   deterministic: bool = True) -> list[tuple]:
    """Functions {0..n-1} -> {1..r} with one injective on every r-subset.

    Functions are length-n tuples.  Deterministic mode emits one rank
    function per r-subset; randomized mode samples uniformly with the usual
    r!/r^r per-subset success rate.
    """
    if n == 0:
        return [tuple()]
    if not 1 <= r <= n:
        raise GraphError("need 1 <= r <= n")
    if r == 1:
        return [tuple(1 for _ in range(n))]
    if deterministic:
        if r == n:
            return [tuple(range(1, n + 1))]
        fam = []
        for sub in combinations(range(n), r):
            ranks = {v: i + 1 for i, v in enumerate(sub)}
            fam.append(tuple(ranks.get(v, 1) for v in range(n)))
        return fam
    p = math.factorial(r) / r ** r
    reps = math.ceil(_LOG_TARGET / p)
    rng = random.Random(seed)
    return [tuple(rng.randint(1, r) for _ in range(n)) for _ in range(reps)]


# ---------------------------------------------------------------------------
# instances


@dataclass
class HPInstance:
    """Instance data; colourings are keyed by the white subset of an edge.

    ``costs[i]`` maps ``(white_key, mu)`` to a finite value in 0..k; absent
    entries mean infinity.
    """

    k: int
    b: int
    d: int
    q: int
    vertices: tuple
    hyperedges: list
    col0: dict
    costs: list

    weighted = False

    def validate(self):
        vset = set(self.vertices)
        if len(self.hyperedges) != len(self.costs):
            raise HPInstanceError("hyperedges and costs differ in length")
        for v, colour in self.col0.items():
            if v not in vset or colour not in (BLACK, WHITE):
                raise HPInstanceError(f"bad col0 entry {v}={colour}")
        for he, cost in zip(self.hyperedges, self.costs):
            if not he <= vset:
                raise HPInstanceError("hyperedge outside vertex set")
            if not 0 < len(he) <= self.d:
                raise HPInstanceError("hyperedge size outside 1..d")
            for (white, mu), val in cost.items():
                if not white <= he:
                    raise HPInstanceError("colouring key outside hyperedge")
                if not 0 <= mu <= self.b:
                    raise HPInstanceError("mu outside 0..b")
                if not 0 <= val <= self.k:
                    raise HPInstanceError("finite cost outside 0..k")
                n_white = len(white)
                n_black = len(he) - n_white
                if min(n_white, n_black) > 3 * self.k:
                    raise HPInstanceError("finite cost violates local unbreakability")
                if 0 < n_white < len(he) and val == 0:
                    raise HPInstanceError("zero cost on bichromatic colouring")

    def swapped(self) -> "HPInstance":
        costs = [
            {(he - white, mu): val for (white, mu), val in cost.items()}
            for he, cost in zip(self.hyperedges, self.costs)
        ]
        col0 = {v: (BLACK if c == WHITE else WHITE) for v, c in self.col0.items()}
        return HPInstance(k=self.k, b=self.b, d=self.d, q=self.q,
                          vertices=self.vertices, hyperedges=list(self.hyperedges),
                          col0=col0, costs=costs)


@dataclass
class HPWeightedInstance:
    """Weighted variant: costs map (white_key, mu, xi) to an exact weight.

    xi counts cut edges and is capped at k; weights are non-negative ints
    or Fractions.
    """

    k: int
    b: int
    d: int
    q: int
    vertices: tuple
    hyperedges: list
    col0: dict
    costs: list

    weighted = True

    def validate(self):
        vset = set(self.vertices)
        if len(self.hyperedges) != len(self.costs):
            raise HPInstanceError("hyperedges and costs differ in length")
        for v, colour in self.col0.items():
            if v not in vset or colour not in (BLACK, WHITE):
                raise HPInstanceError(f"bad col0 entry {v}={colour}")
        for he, cost in zip(self.hyperedges, self.costs):
            if not he <= vset:
                raise HPInstanceError("hyperedge outside vertex set")
            for (white, mu, xi), val in cost.items():
                if not white <= he:
                    raise HPInstanceError("colouring key outside hyperedge")
                if not (0 <= mu <= self.b and 0 <= xi <= self.k):
                    raise HPInstanceError("(mu, xi) outside range")
                if val < 0:
                    raise HPInstanceError("negative weight")
                n_white = len(white)
                n_black = len(he) - n_white
                if min(n_white, n_black) > 3 * self.k:
                    raise HPInstanceError("finite cost violates local unbreakability")
                if 0 < n_white < len(he) and xi == 0:
                    raise HPInstanceError("bichromatic colouring with xi=0")

    def swapped(self) -> "HPWeightedInstance":
        costs = [
            {(he - white, mu, xi): val for (white, mu, xi), val in cost.items()}
            for he, cost in zip(self.hyperedges, self.costs)
        ]
        col0 = {v: (BLACK if c == WHITE else WHITE) for v, c in self.col0.items()}
        return HPWeightedInstance(k=self.k, b=self.b, d=self.d, q=self.q,
                                  vertices=self.vertices, hyperedges=list(self.hyperedges),
                                  col0=col0, costs=costs)


# ---------------------------------------------------------------------------
# solver internals


class _UnweightedOps:
    """Keys are (mu,); values are int costs saturating above k."""

    weighted = False

    def __init__(self, b: int, k: int):
        self.b = b
        self.k = k
        self.zero_key = (0,)

    def split_cost(self, raw_key):
        white, mu = raw_key
        return white, (mu,)

    def combine(self, key1, key2, val1, val2):
        mu = key1[0] + key2[0]
        if mu > self.b:
            return None
        tot = val1 + val2
        if tot > self.k:
            return None
        return (mu,), tot


class _WeightedOps:
    """Keys are (mu, xi); values are exact weights, xi capped at k."""

    weighted = True

    def __init__(self, b: int, k: int):
        self.b = b
        self.k = k
        self.zero_key = (0, 0)

    def split_cost(self, raw_key):
        white, mu, xi = raw_key
        return white, (mu, xi)

    def combine(self, key1, key2, val1, val2):
        mu = key1[0] + key2[0]
        xi = key1[1] + key2[1]
        if mu > self.b or xi > self.k:
            return None
        return (mu, xi), val1 + val2


def _fold(table: dict, vec: dict, ops) -> dict:
    out: dict = {}
    for key1, val1 in table.items():
        for key2, val2 in vec.items():
            combined = ops.combine(key1, key2, val1, val2)
            if combined is None:
                continue
            key, val = combined
            cur = out.get(key)
            if cur is None or val < cur:
                out[key] = val
    return out


def _split_step(prior: dict, vec: dict, key, val, ops):
    """Find (key1, val1, key2, val2) with prior + vec reaching (key, val)."""
    for key1 in sorted(prior):
        val1 = prior[key1]
        for key2 in sorted(vec):
            val2 = vec[key2]
            combined = ops.combine(key1, key2, val1, val2)
            if combined is not None and combined[0] == key and combined[1] == val:
                return key1, val1, key2, val2
    return None


@dataclass
class _Edge:
    index: int
    verts: tuple              # local vertex indices, sorted
    vert_set: frozenset
    black_vec: dict           # key -> value, col0-filtered; {} means infinity
    white_vec: dict
    cands: list               # (white_key, vec), lexicographic white order


@dataclass
class Assignment:
    """Branch state: candidate colourings per hyperedge plus the guess p.

    ``p`` maps a hyperedge index to a 1-based position in its candidate
    list; absent indices mean "definitely monochromatic".
    """

    candidates: list
    p: dict

    def white_side(self, edge_index: int) -> frozenset:
        return self.candidates[edge_index][self.p[edge_index] - 1][0]


class ComponentGraph:
    """Components of the auxiliary graph, merged small-to-large.

    Every vertex holds a direct component-root pointer, so lookups are
    constant time and a merge walks only the smaller member list.  For the
    cleanup operations the class tracks, per component, which straddling
    guessed edges mark it white or black (the T(D, colour) lists); those
    lists are folded into the survivor on every merge.
    """

    def __init__(self, n: int):
        self.root = list(range(n))
        self.members = {v: [v] for v in range(n)}
        self.t_white: dict[int, set] = {}
        self.t_black: dict[int, set] = {}

    def find(self, v: int) -> int:
        return self.root[v]

    def union(self, a: int, b: int) -> int:
        ra, rb = self.root[a], self.root[b]
        if ra == rb:
            return ra
        if len(self.members[ra]) < len(self.members[rb]):
            ra, rb = rb, ra
        for v in self.members[rb]:
            self.root[v] = ra
        self.members[ra].extend(self.members.pop(rb))
        for lists in (self.t_white, self.t_black):
            moved = lists.pop(rb, None)
            if moved:
                lists.setdefault(ra, set()).update(moved)
        return ra

    def union_chain(self, verts) -> None:
        it = iter(verts)
        try:
            first = next(it)
        except StopIteration:
            return
        for v in it:
            self.union(first, v)

    def mark(self, root: int, colour: str, edge_index: int) -> None:
        lists = self.t_white if colour == WHITE else self.t_black
        lists.setdefault(root, set()).add(edge_index)

    def unmark(self, edge_index: int) -> None:
        for lists in (self.t_white, self.t_black):
            for bucket in lists.values():
                bucket.discard(edge_index)

    def double_marked(self):
        """Roots carrying both a white and a black mark, smallest first."""
        return sorted(r for r, bucket in self.t_white.items()
                      if bucket and self.t_black.get(r))


class _Engine:
    """One colour side of the solver; white is the choosing colour."""

    def __init__(self, instance, ops):
        self.ops = ops
        self.k = instance.k
        self.b = instance.b
        self.q = instance.q
        self.n = len(instance.vertices)
        self.v_index = {v: i for i, v in enumerate(instance.vertices)}
        self.col0 = [None] * self.n
        for v, colour in instance.col0.items():
            self.col0[self.v_index[v]] = colour
        self.edges: list[_Edge] = []
        for idx, (he, cost) in enumerate(zip(instance.hyperedges, instance.costs)):
            verts = tuple(sorted(self.v_index[v] for v in he))
            vset = frozenset(verts)
            by_col: dict[frozenset, dict] = {}
            for raw_key, val in cost.items():
                white_raw, key = ops.split_cost(raw_key)
                white = frozenset(self.v_index[v] for v in white_raw)
                vec = by_col.setdefault(white, {})
                cur = vec.get(key)
                if cur is None or val < cur:
                    vec[key] = val
            black_vec = self._filter_col0(by_col.get(frozenset(), {}), vset, frozenset())
            white_vec = self._filter_col0(by_col.get(vset, {}), vset, vset)
            cands = []
            for white in sorted((w for w in by_col if 0 < len(w) < len(vset)),
                                key=lambda w: tuple(sorted(w))):
                vec = self._filter_col0(by_col[white], vset, white)
                if vec:
                    cands.append((white, vec))
            self.edges.append(_Edge(index=idx, verts=verts, vert_set=vset,
                                    black_vec=black_vec, white_vec=white_vec,
                                    cands=cands))
        self.universe = [e for e in self.edges if e.cands]

    def _filter_col0(self, vec: dict, vset: frozenset, white: frozenset) -> dict:
        for v in vset:
            c = self.col0[v]
            if c == WHITE and v not in white:
                return {}
            if c == BLACK and v in white:
                return {}
        return vec

    # -- branch generation --------------------------------------------------

    def deterministic_supports(self) -> list[tuple]:
        """All consistent supports of size <= k, with a cut lower bound.

        A support fixes colours on its vertices; every hyperedge made
        bichromatic by those colours costs at least one unit in any
        colouring extending them, so partial supports forcing more than k
        bichromatic edges cover no witness and are pruned.
        """
        k = self.k
        chi: list = list(self.col0)
        has_white = [0] * len(self.edges)
        has_black = [0] * len(self.edges)
        incident: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            for v in e.verts:
                incident[v].append(e.index)
        bichrom = 0
        for v in range(self.n):
            if chi[v] == WHITE:
                for ei in incident[v]:
                    has_white[ei] += 1
            elif chi[v] == BLACK:
                for ei in incident[v]:
                    has_black[ei] += 1
        for e in self.edges:
            if has_white[e.index] and has_black[e.index]:
                bichrom += 1

        out: list[tuple] = [tuple()]
        if bichrom > k:
            return out
        support: list[tuple[int, frozenset]] = []
        universe = self.universe

        def set_colour(v: int, colour: str, undo: list) -> bool:
            nonlocal bichrom
            cur = chi[v]
            if cur is not None:
                return cur == colour
            chi[v] = colour
            undo.append(v)
            for ei in incident[v]:
                before = has_white[ei] and has_black[ei]
                if colour == WHITE:
                    has_white[ei] += 1
                else:
                    has_black[ei] += 1
                if not before and has_white[ei] and has_black[ei]:
                    bichrom += 1
            return True

        def unset(undo: list):
            nonlocal bichrom
            for v in reversed(undo):
                colour = chi[v]
                for ei in incident[v]:
                    before = has_white[ei] and has_black[ei]
                    if colour == WHITE:
                        has_white[ei] -= 1
                    else:
                        has_black[ei] -= 1
                    if before and not (has_white[ei] and has_black[ei]):
                        bichrom -= 1
                chi[v] = None

        def dfs(start: int):
            if len(support) == k:
                return
            for pos in range(start, len(universe)):
                edge = universe[pos]
                for white, _vec in edge.cands:
                    undo: list = []
                    ok = True
                    for v in edge.verts:
                        if not set_colour(v, WHITE if v in white else BLACK, undo):
                            ok = False
                            break
                    if ok and bichrom <= k:
                        support.append((edge.index, white))
                        out.append(tuple(support))
                        dfs(pos + 1)
                        support.pop()
                    unset(undo)

        dfs(0)
        return out

    def randomized_supports(self, seed: int) -> list[tuple]:
        """Splitter-sampled subsets with exhaustive per-slot index guesses."""
        k = self.k
        universe = self.universe
        u = len(universe)
        a = min(k, u)
        if a == 0 or u == 0:
            return [tuple()]
        white_cap = max(0, min(self.q, self.n // 2))
        b_split = max(0, min(white_cap - 1, u))
        pi = a / (a + b_split)
        p_s = pi ** a * (1 - pi) ** b_split
        p_delta = math.factorial(a) / a ** a
        reps = math.ceil(_LOG_TARGET / (p_s * p_delta))
        rng = random.Random(seed)
        seen = {tuple()}
        out = [tuple()]
        for _ in range(reps):
            chosen = [e for e in universe if rng.random() < pi]
            if not chosen:
                continue
            delta = [rng.randint(1, a) for _ in chosen]
            slots: dict[int, list[_Edge]] = {}
            for e, j in zip(chosen, delta):
                slots.setdefault(j, []).append(e)
            slot_ids = sorted(slots)
            ranges = [range(max(len(e.cands) for e in slots[j])) for j in slot_ids]
            for pick in product(*ranges):
                sup = []
                for j, idx in zip(slot_ids, pick):
                    for e in slots[j]:
                        if idx < len(e.cands):
                            sup.append((e.index, e.cands[idx][0]))
                sup.sort(key=lambda it: (it[0], tuple(sorted(it[1]))))
                key = tuple(sup)
                if key not in seen:
                    seen.add(key)
                    out.append(key)
        return out

    # -- branch evaluation ----------------------------------------------------

    def _components(self, support: tuple):
        """Component graph build plus cleanup; returns (cg, active supports)."""
        cg = ComponentGraph(self.n)
        sup_map = dict(support)
        for e in self.edges:
            if e.index in sup_map:
                white = sup_map[e.index]
                cg.union_chain(v for v in e.verts if v in white)
                cg.union_chain(v for v in e.verts if v not in white)
            else:
                cg.union_chain(e.verts)
        for ei in sorted(sup_map):
            white = sup_map[ei]
            e = self.edges[ei]
            cg.mark(cg.find(next(iter(white))), WHITE, ei)
            cg.mark(cg.find(next(v for v in e.verts if v not in white)), BLACK, ei)

        active = dict(sup_map)

        def demote(ei: int):
            del active[ei]
            cg.unmark(ei)
            cg.union_chain(self.edges[ei].verts)

        while True:
            victim = None
            # operation 1: a guessed edge swallowed by one component
            for ei in sorted(active):
                white = active[ei]
                e = self.edges[ei]
                if cg.find(next(iter(white))) == cg.find(
                        next(v for v in e.verts if v not in white)):
                    victim = ei
                    break
            if victim is None:
                # operation 2: a component marked both white and black loses
                # its white-marking edge
                doubled = cg.double_marked()
                if doubled:
                    victim = min(cg.t_white[doubled[0]])
            if victim is None:
                break
            demote(victim)
        return cg, active

    def build_atoms(self, support: tuple):
        """Fold units for one branch.

        Returns (atoms, black_roots, find).  Each atom is a list of
        alternatives; an alternative is (root, colour, [(edge_idx,
        white_key, vec), ...]).  Black components yield single-alternative
        atoms; potentially white components offer the all-black and the
        as-guessed alternatives.
        """
        cg, active = self._components(support)
        black_roots = set()
        for ei, white in active.items():
            e = self.edges[ei]
            black_roots.add(cg.find(next(v for v in e.verts if v not in white)))

        comp_in: dict[int, list[int]] = {}
        for e in self.edges:
            if e.index in active:
                continue
            comp_in.setdefault(cg.find(e.verts[0]), []).append(e.index)
        comp_straddle: dict[int, list[int]] = {}
        for ei in active:
            white = active[ei]
            comp_straddle.setdefault(cg.find(next(iter(white))), []).append(ei)

        atoms = []
        roots = sorted(set(comp_in) | set(comp_straddle) | black_roots)
        for root in roots:
            if root in black_roots:
                parts = [(ei, frozenset(), self.edges[ei].black_vec)
                         for ei in comp_in.get(root, ())]
                if parts:
                    atoms.append([(root, BLACK, parts)])
                continue
            black_parts = []
            white_parts = []
            for ei in comp_in.get(root, ()):
                e = self.edges[ei]
                black_parts.append((ei, frozenset(), e.black_vec))
                white_parts.append((ei, e.vert_set, e.white_vec))
            for ei in comp_straddle.get(root, ()):
                e = self.edges[ei]
                white = active[ei]
                cand_vec = next(vec for w, vec in e.cands if w == white)
                black_parts.append((ei, frozenset(), e.black_vec))
                white_parts.append((ei, white, cand_vec))
            atoms.append([(root, BLACK, black_parts), (root, WHITE, white_parts)])
        return atoms, black_roots, cg

    def evaluate(self, support: tuple) -> dict:
        ops = self.ops
        atoms, _black_roots, _cg = self.build_atoms(support)
        table = {ops.zero_key: 0}
        for atom in atoms:
            merged: dict = {}
            for _root, _colour, parts in atom:
                alt = {ops.zero_key: 0}
                for _ei, _white, vec in parts:
                    alt = _fold(alt, vec, ops)
                    if not alt:
                        break
                for key, val in alt.items():
                    cur = merged.get(key)
                    if cur is None or val < cur:
                        merged[key] = val
            table = _fold(table, merged, ops)
            if not table:
                return {}
        return table

    def assignment(self, support: tuple) -> Assignment:
        """The branch guess in index form (0 entries left implicit)."""
        p = {}
        for ei, white in support:
            idx = next(i for i, (w, _vec) in enumerate(self.edges[ei].cands)
                       if w == white)
            p[ei] = idx + 1
        return Assignment(candidates=[e.cands for e in self.edges], p=p)

    def decode(self, support: tuple, key, value):
        """Reconstruct (colouring over local indices, per-edge assignment).

        Walks the atom folds backwards, choosing an alternative per
        component and a budget split per edge consistent with (key, value).
        """
        ops = self.ops
        atoms, black_roots, cg = self.build_atoms(support)
        prefixes = [{ops.zero_key: 0}]
        alt_tables = []
        for atom in atoms:
            merged: dict = {}
            tables = []
            for _root, _colour, parts in atom:
                alt_prefixes = [{ops.zero_key: 0}]
                for _ei, _white, vec in parts:
                    alt_prefixes.append(_fold(alt_prefixes[-1], vec, ops))
                tables.append(alt_prefixes)
                for akey, aval in alt_prefixes[-1].items():
                    cur = merged.get(akey)
                    if cur is None or aval < cur:
                        merged[akey] = aval
            alt_tables.append(tables)
            prefixes.append(_fold(prefixes[-1], merged, ops))

        comp_colour: dict[int, str] = {root: BLACK for root in black_roots}
        edge_assign: dict[int, tuple] = {}
        tkey, tval = key, value
        for pos in range(len(atoms) - 1, -1, -1):
            atom = atoms[pos]
            chosen = None
            for alt_idx, (root, colour, parts) in enumerate(atom):
                alt_total = alt_tables[pos][alt_idx][-1]
                split = _split_step(prefixes[pos], alt_total, tkey, tval, ops)
                if split is not None:
                    chosen = (alt_idx, root, colour, parts, split)
                    break
            if chosen is None:
                raise GraphError("witness decode failed")  # should not happen
            alt_idx, root, colour, parts, (key1, val1, key2, val2) = chosen
            comp_colour[root] = colour
            alt_prefixes = alt_tables[pos][alt_idx]
            ekey, eval_ = key2, val2
            for ppos in range(len(parts) - 1, -1, -1):
                ei, white, vec = parts[ppos]
                split = _split_step(alt_prefixes[ppos], vec, ekey, eval_, ops)
                pkey, pval, ckey, _cval = split
                edge_assign[ei] = (white, ckey)
                ekey, eval_ = pkey, pval
            tkey, tval = key1, val1

        colouring = []
        for v in range(self.n):
            colour = comp_colour.get(cg.find(v))
            if colour is None:
                colour = self.col0[v] if self.col0[v] else BLACK
            colouring.append(colour)
        return colouring, edge_assign


class HPSolution:
    """Solved instance: value tables plus winning branches for decoding."""

    def __init__(self, instance, seed: int = 0, deterministic: bool = False):
        instance.validate()
        self.instance = instance
        ops_cls = _WeightedOps if instance.weighted else _UnweightedOps
        self.ops = ops_cls(instance.b, instance.k)
        sides = [(0, instance)]
        if not deterministic:
            # the swapped side covers optima whose black class is the small one
            sides.append((1, instance.swapped()))
        self.engines = {}
        self.best: dict = {}
        for side, inst in sides:
            engine = _Engine(inst, self.ops)
            self.engines[side] = engine
            if deterministic:
                supports = engine.deterministic_supports()
            else:
                supports = engine.randomized_supports(seed + 7919 * side)
            for support in supports:
                table = engine.evaluate(support)
                for key, val in table.items():
                    cur = self.best.get(key)
                    if cur is None or val < cur[0]:
                        self.best[key] = (val, side, support)

    def value(self, key):
        entry = self.best.get(key)
        return INF if entry is None else entry[0]

    def winning_assignment(self, key) -> Assignment | None:
        """Guess behind the best entry for ``key`` (debugging surface)."""
        entry = self.best.get(key)
        if entry is None:
            return None
        _val, side, support = entry
        return self.engines[side].assignment(support)

    def w_array(self) -> list:
        w = [INF] * (self.instance.b + 1)
        for key, (val, _side, _sup) in self.best.items():
            mu = key[0]
            if val < w[mu]:
                w[mu] = val
        return w

    def decode(self, key):
        """(colouring dict, per-edge (white_key, key_split) list) or None."""
        entry = self.best.get(key)
        if entry is None:
            return None
        value, side, support = entry
        engine = self.engines[side]
        local_col, edge_assign = engine.decode(support, key, value)
        inst = self.instance
        colouring = {}
        for v, idx in engine.v_index.items():
            colour = local_col[idx]
            if side == 1:
                colour = BLACK if colour == WHITE else WHITE
            colouring[v] = colour
        per_edge = []
        for idx, he in enumerate(inst.hyperedges):
            if idx not in edge_assign:
                per_edge.append(None)
                continue
            white_local, key_split = edge_assign[idx]
            white = frozenset(inst.vertices[i] for i in white_local)
            if side == 1:
                white = he - white
            per_edge.append((white, key_split))
        return colouring, per_edge


def solve_hp(instance: HPInstance, seed: int = 0, deterministic: bool = False) -> list:
    """The w array: w[mu] = minimum total cost at budget mu, inf if none."""
    return HPSolution(instance, seed=seed, deterministic=deterministic).w_array()


def solve_hp_weighted(instance: HPWeightedInstance, seed: int = 0,
                      deterministic: bool = False) -> dict:
    """{(mu, xi): minimum weight} over all feasible keys."""
    sol = HPSolution(instance, seed=seed, deterministic=deterministic)
    return {key: val for key, (val, _s, _sup) in sol.best.items()}
