"""Search: transversals of cover graphs, precoloring extension, and the
three chromatic numbers at desk scale.

Everything here is exact.  The exhaustive modes quantify over the
relabeling-reduced cover stream (see :func:`dpcolor.cover.enumerate_covers`)
and additionally skip covers equivalent under renaming all lists by one
common permutation, which changes no verdict: such a renaming maps
transversals to transversals bijectively.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .cover import (Cover, CoverGraph, bfs_tree_edges, cover_graph,
                    full_cover, random_chooser)
from .plane_graph import PlaneGraph

DEFAULT_COVER_BUDGET = 10_000_000
DEFAULT_NODE_BUDGET = 20_000_000


class SolverError(Exception):
    pass


class BudgetExceeded(SolverError):
    """An exhaustive request is larger than the configured budget."""


class InconsistentPrecoloring(SolverError):
    """Two precolored endpoints of an edge conflict through the matching."""


@dataclass(frozen=True)
class Transversal:
    """One chosen color per vertex, independent in the cover graph."""

    assignment: tuple[int, ...]

    def color(self, v: int) -> int:
        return self.assignment[v]


@dataclass(frozen=True)
class Precoloring:
    """A partial assignment, typically on the vertices of a short cycle."""

    items: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, assignment: Mapping[int, int]) -> "Precoloring":
        return cls(tuple(sorted(assignment.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.items)


@dataclass(frozen=True)
class ColorabilityVerdict:
    """Outcome of a colorability sweep over a cover stream."""

    mode: str  # "exhaustive" | "sampled"
    all_colorable: bool
    counterexample: Optional[Cover]
    covers_checked: int
    samples: Optional[int] = None
    seed: Optional[int] = None


# -- fast search core --------------------------------------------------------


class _Instance:
    """Backtracking-ready form of a cover graph.

    Vertices are visited in smallest-last (degeneracy) order; each position
    stores, for every earlier neighbor, the map from that neighbor's chosen
    color index to the forbidden index here (-1 when unmatched).
    """

    __slots__ = ("order", "colors", "constraints", "fixed")

    def __init__(self, groups: Sequence[Sequence[int]],
                 matching_of, edges: Iterable[tuple[int, int]],
                 fixed: Optional[Mapping[int, int]] = None):
        n = len(groups)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        self.order = _degeneracy_order(n, adj)
        pos = {v: i for i, v in enumerate(self.order)}
        self.colors = [tuple(sorted(groups[v])) for v in range(n)]
        index_of = [{c: i for i, c in enumerate(cs)} for cs in self.colors]
        fixed = dict(fixed or {})
        self.fixed = {v: index_of[v][c] for v, c in fixed.items()}
        # constraints[i]: list of (earlier position, map array)
        self.constraints: list[list[tuple[int, tuple[int, ...]]]] = [
            [] for _ in range(n)]
        for i, v in enumerate(self.order):
            for u in adj[v]:
                if pos[u] >= i:
                    continue
                table = [-1] * len(self.colors[u])
                for cu, cv in matching_of(u, v):
                    iu = index_of[u].get(cu)
                    iv = index_of[v].get(cv)
                    if iu is not None and iv is not None:
                        table[iu] = iv
                self.constraints[i].append((pos[u], tuple(table)))

    def solve(self) -> Optional[tuple[int, ...]]:
        """First transversal in (degeneracy order, ascending color) order."""
        n = len(self.order)
        chosen = [-1] * n
        sizes = [len(self.colors[v]) for v in self.order]
        fixed_at = {}
        for v, idx in self.fixed.items():
            fixed_at[self.order.index(v)] = idx

        def rec(i: int) -> bool:
            if i == n:
                return True
            banned = 0
            for j, table in self.constraints[i]:
                t = table[chosen[j]]
                if t >= 0:
                    banned |= 1 << t
            if i in fixed_at:
                idx = fixed_at[i]
                if banned >> idx & 1:
                    return False
                chosen[i] = idx
                if rec(i + 1):
                    return True
                chosen[i] = -1
                return False
            for idx in range(sizes[i]):
                if banned >> idx & 1:
                    continue
                chosen[i] = idx
                if rec(i + 1):
                    return True
            chosen[i] = -1
            return False

        if not rec(0):
            return None
        out = [0] * n
        for i, v in enumerate(self.order):
            out[v] = self.colors[v][chosen[i]]
        return tuple(out)


def _degeneracy_order(n: int, adj: Sequence[set[int]]) -> list[int]:
    """Smallest-last order: repeatedly peel a minimum-degree vertex."""
    degree = [len(adj[v]) for v in range(n)]
    removed = [False] * n
    peeled: list[int] = []
    for _ in range(n):
        v = min((x for x in range(n) if not removed[x]),
                key=lambda x: (degree[x], x))
        removed[v] = True
        peeled.append(v)
        for u in adj[v]:
            if not removed[u]:
                degree[u] -= 1
    peeled.reverse()
    return peeled


def find_transversal(h: CoverGraph) -> Optional[Transversal]:
    """A transversal of the cover graph, or None when none exists.

    Deterministic: vertices are tried in smallest-last order and colors in
    ascending order.
    """
    if any(len(cs) == 0 for cs in h.groups):
        return None
    inst = _Instance(h.groups, h.matching, h.graph_edges)
    sol = inst.solve()
    return Transversal(sol) if sol is not None else None


def extend_precoloring(g: PlaneGraph, cover: Cover,
                       pre: Precoloring) -> Optional[Transversal]:
    """Extend a partial assignment to a full transversal, if possible.

    Residual lists are implicit: a color of an uncolored vertex is pruned
    exactly when it is matched to a chosen neighbor color.  Raises
    InconsistentPrecoloring when the given partial assignment already
    conflicts (wrong list, or a matched pair chosen on an edge).
    """
    fixed = pre.as_dict()
    for v, c in fixed.items():
        if c not in cover.lists[v]:
            raise InconsistentPrecoloring(f"color {c} not in list of {v}")
    for u, v in g.edges():
        if u in fixed and v in fixed:
            if cover.matched_color(u, fixed[u], v) == fixed[v]:
                raise InconsistentPrecoloring(
                    f"edge ({u},{v}): precolored pair is matched")
    inst = _Instance(cover.lists, cover.matching, g.edges(), fixed)
    sol = inst.solve()
    return Transversal(sol) if sol is not None else None


# -- exhaustive cover sweeps -------------------------------------------------


def _conjugate(p: tuple[int, ...], sigma: tuple[int, ...]) -> tuple[int, ...]:
    """sigma o p o sigma^{-1}, all permutations of 1..k as image tuples."""
    k = len(p)
    q = [0] * k
    for c in range(1, k + 1):
        q[sigma[c - 1] - 1] = sigma[p[c - 1] - 1]
    return tuple(q)


class _CoverSweep:
    """Shared machinery for exhaustive sweeps over covers with lists 1..k.

    Covers are represented by the tuple of permutations on non-tree edges
    (tree edges are straight).  ``canonical_tuples`` enumerates one
    representative per orbit under renaming all lists by a common
    permutation; renaming preserves transversal existence and maps valid
    precolorings bijectively, so sweeps may quantify over representatives.
    """

    def __init__(self, g: PlaneGraph, k: int):
        self.g = g
        self.k = k
        self.tree = set(bfs_tree_edges(g))
        self.edges = g.edges()
        self.non_tree = [e for e in self.edges if e not in self.tree]
        self.perms = sorted(itertools.permutations(range(1, k + 1)))
        self._conj = {}
        for s in self.perms:
            for p in self.perms:
                self._conj[(s, p)] = _conjugate(p, s)

    @property
    def total_covers(self) -> int:
        return math.factorial(self.k) ** len(self.non_tree)

    def canonical_tuples(self) -> Iterator[tuple[tuple[int, ...], ...]]:
        sigmas = [s for s in self.perms if any(self._conj[(s, p)] != p
                                               for p in self.perms)]
        m = len(self.non_tree)
        prefix: list[tuple[int, ...]] = []

        def rec(active: list[tuple[int, ...]]
                ) -> Iterator[tuple[tuple[int, ...], ...]]:
            if len(prefix) == m:
                yield tuple(prefix)
                return
            for p in self.perms:
                nxt = []
                smaller = False
                for s in active:
                    q = self._conj[(s, p)]
                    if q < p:
                        smaller = True
                        break
                    if q == p:
                        nxt.append(s)
                if smaller:
                    continue
                prefix.append(p)
                yield from rec(nxt)
                prefix.pop()

        yield from rec(sigmas)

    def all_tuples(self) -> Iterator[tuple[tuple[int, ...], ...]]:
        yield from itertools.product(self.perms, repeat=len(self.non_tree))

    def cover_from(self, perm_tuple: Sequence[tuple[int, ...]]) -> Cover:
        k = self.k
        lists = tuple(tuple(range(1, k + 1)) for _ in range(self.g.vertex_count))
        identity = tuple((c, c) for c in range(1, k + 1))
        matchings = {e: identity for e in self.tree}
        for e, p in zip(self.non_tree, perm_tuple):
            matchings[e] = tuple((c, p[c - 1]) for c in range(1, k + 1))
        return Cover(lists, matchings)

    def searcher(self) -> "_SweepSearcher":
        return _SweepSearcher(self)


class _SweepSearcher:
    """Transversal search specialized to a sweep's graph; recheckable per cover."""

    def __init__(self, sweep: _CoverSweep):
        g, k = sweep.g, sweep.k
        n = g.vertex_count
        adj = [set(g.neighbors(v)) for v in range(n)]
        self.k = k
        self.order = _degeneracy_order(n, adj)
        pos = {v: i for i, v in enumerate(self.order)}
        nt_index = {e: i for i, e in enumerate(sweep.non_tree)}
        # (earlier position, non-tree index or -1 for straight, forward?)
        self.constraints: list[list[tuple[int, int, bool]]] = [[] for _ in range(n)]
        for i, v in enumerate(self.order):
            for u in adj[v]:
                if pos[u] >= i:
                    continue
                e = (u, v) if u < v else (v, u)
                if e in nt_index:
                    self.constraints[i].append((pos[u], nt_index[e], u < v))
                else:
                    self.constraints[i].append((pos[u], -1, True))

    def has_transversal(self, perm_tuple: Sequence[tuple[int, ...]],
                        fixed_at: Optional[dict[int, int]] = None) -> bool:
        """fixed_at maps order-position -> 0-based color index."""
        k = self.k
        forward = []
        inverse = []
        for p in perm_tuple:
            forward.append(tuple(c - 1 for c in p))
            inv = [0] * k
            for i, c in enumerate(p):
                inv[c - 1] = i
            inverse.append(tuple(inv))
        constraints = self.constraints
        n = len(self.order)
        chosen = [0] * n
        full = (1 << k) - 1
        fixed_at = fixed_at or {}

        def rec(i: int) -> bool:
            if i == n:
                return True
            banned = 0
            for j, t, fwd in constraints[i]:
                cj = chosen[j]
                if t < 0:
                    banned |= 1 << cj
                elif fwd:
                    banned |= 1 << forward[t][cj]
                else:
                    banned |= 1 << inverse[t][cj]
            if i in fixed_at:
                idx = fixed_at[i]
                if banned >> idx & 1:
                    return False
                chosen[i] = idx
                return rec(i + 1)
            avail = full & ~banned
            while avail:
                idx = (avail & -avail).bit_length() - 1
                chosen[i] = idx
                if rec(i + 1):
                    return True
                avail &= avail - 1
            return False

        return rec(0)


def dp_colorable(g: PlaneGraph, k: int, mode: str = "exhaustive", *,
                 samples: int = 1000, seed: int = 0,
                 budget: int = DEFAULT_COVER_BUDGET) -> ColorabilityVerdict:
    """Decide whether every cover with lists of size k admits a transversal.

    Exhaustive mode sweeps the relabeling-reduced cover space (guarded by
    ``budget`` against (k!)**(|E|-|V|+1) blowup); sampled mode draws seeded
    random permutation covers and is labeled as such in the verdict.
    """
    if mode == "exhaustive":
        sweep = _CoverSweep(g, k)
        if sweep.total_covers > budget:
            raise BudgetExceeded(
                f"{sweep.total_covers} covers exceed budget {budget}")
        searcher = sweep.searcher()
        checked = 0
        for t in sweep.canonical_tuples():
            checked += 1
            if not searcher.has_transversal(t):
                bad = sweep.cover_from(t)
                assert find_transversal(cover_graph(g, bad)) is None
                return ColorabilityVerdict("exhaustive", False, bad, checked)
        return ColorabilityVerdict("exhaustive", True, None, checked)
    if mode == "sampled":
        rng = random.Random(seed)
        checked = 0
        for _ in range(samples):
            cover = full_cover(g, k, random_chooser(rng.randrange(2 ** 32)))
            checked += 1
            if find_transversal(cover_graph(g, cover)) is None:
                return ColorabilityVerdict("sampled", False, cover, checked,
                                           samples=samples, seed=seed)
        return ColorabilityVerdict("sampled", True, None, checked,
                                   samples=samples, seed=seed)
    raise ValueError(f"unknown mode {mode!r}")


def dp_chromatic(g: PlaneGraph, k_max: int, *,
                 budget: int = DEFAULT_COVER_BUDGET) -> Optional[int]:
    """Smallest k <= k_max whose exhaustive sweep is all-colorable, else None."""
    for k in range(1, k_max + 1):
        if dp_colorable(g, k, "exhaustive", budget=budget).all_colorable:
            return k
    return None


# -- ordinary and list chromatic numbers -------------------------------------


def _adjacency(g: PlaneGraph) -> list[frozenset[int]]:
    return [frozenset(g.neighbors(v)) for v in range(g.vertex_count)]


def _k_colorable(adj: Sequence[frozenset[int]], k: int, counter: list[int]) -> bool:
    n = len(adj)
    order = _degeneracy_order(n, [set(a) for a in adj])
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[pos[u] for u in adj[v] if pos[u] < i]
               for i, v in enumerate(order)]
    color = [-1] * n

    def rec(i: int, used: int) -> bool:
        counter[0] -= 1
        if counter[0] < 0:
            raise BudgetExceeded("coloring search budget exhausted")
        if i == n:
            return True
        banned = {color[j] for j in earlier[i]}
        # trying one unused color is enough: unused colors are interchangeable
        limit = min(used + 1, k)
        for c in range(limit):
            if c in banned:
                continue
            color[i] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        color[i] = -1
        return False

    return rec(0, 0)


def chromatic(g: PlaneGraph, k_max: int, *,
              budget: int = DEFAULT_NODE_BUDGET) -> Optional[int]:
    """Smallest k <= k_max admitting a proper k-coloring, else None."""
    adj = _adjacency(g)
    counter = [budget]
    for k in range(1, k_max + 1):
        if _k_colorable(adj, k, counter):
            return k
    return None


class _Choosability:
    """Exact list-chromatic checks by canonical list-assignment search.

    Assignments are enumerated up to renaming colors (fresh colors always
    take the smallest unused ids), which covers every assignment from an
    arbitrary color pool.  Two sound reductions keep the search small:
    vertices with degree below k are peeled (they can always be colored
    last), and once every vertex-deleted subgraph is known k-choosable,
    only assignments where each list color reappears on a neighbor can be
    bad, so all other branches are pruned.
    """

    def __init__(self, adj: Sequence[frozenset[int]], k: int, counter: list[int]):
        self.adj = adj
        self.k = k
        self.counter = counter
        self.memo: dict[frozenset[int], bool] = {}

    def choosable(self, subset: frozenset[int]) -> bool:
        subset = self._core(subset)
        if not subset:
            return True
        hit = self.memo.get(subset)
        if hit is not None:
            return hit
        comps = self._components(subset)
        if len(comps) > 1:
            result = all(self.choosable(c) for c in comps)
            self.memo[subset] = result
            return result
        result = True
        for v in sorted(subset):
            if not self.choosable(subset - {v}):
                result = False
                break
        if result:
            result = not self._bad_assignment_exists(subset)
        self.memo[subset] = result
        return result

    def _core(self, subset: frozenset[int]) -> frozenset[int]:
        live = set(subset)
        changed = True
        while changed:
            changed = False
            for v in list(live):
                if len(self.adj[v] & live) < self.k:
                    live.discard(v)
                    changed = True
        return frozenset(live)

    def _components(self, subset: frozenset[int]) -> list[frozenset[int]]:
        left = set(subset)
        comps = []
        while left:
            start = min(left)
            seen = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self.adj[u] & subset:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(frozenset(seen))
            left -= seen
        return comps

    def _bad_assignment_exists(self, subset: frozenset[int]) -> bool:
        k = self.k
        verts = sorted(subset)
        # BFS order keeps processed vertices adjacent to upcoming ones
        order = [verts[0]]
        seen = {verts[0]}
        qi = 0
        while qi < len(order):
            u = order[qi]
            qi += 1
            for w in sorted(self.adj[u] & subset):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
        m = len(order)
        pos = {v: i for i, v in enumerate(order)}
        nbr_pos = [sorted(pos[u] for u in self.adj[v] & subset) for v in order]
        last_future = [max((p for p in nbr_pos[i] if p > i), default=-1)
                       for i in range(m)]
        lists: list[frozenset[int]] = []
        # pending[(p, c)] = deadline: position p still needs some neighbor
        # to carry color c; its last chance is the given position
        pending: dict[tuple[int, int], int] = {}

        def colorable() -> bool:
            chosen = [0] * m

            def rec(i: int) -> bool:
                if i == m:
                    return True
                banned = {chosen[p] for p in nbr_pos[i] if p < i}
                for c in lists[i]:
                    if c in banned:
                        continue
                    chosen[i] = c
                    if rec(i + 1):
                        return True
                return False

            return rec(0)

        def candidates(i: int, used: int) -> Iterator[tuple[int, ...]]:
            earlier = [p for p in nbr_pos[i] if p < i]
            forced = {c for (p, c), deadline in pending.items()
                      if deadline == i}
            if len(forced) > k:
                return
            old_pool = [c for c in range(1, used + 1) if c not in forced]
            forced_t = tuple(sorted(forced))
            has_future = last_future[i] >= 0
            for fresh in range(0, k - len(forced) + 1):
                if fresh and not has_future:
                    break  # a brand-new color here could never reappear
                need_old = k - len(forced) - fresh
                fresh_t = tuple(range(used + 1, used + 1 + fresh))
                for old in itertools.combinations(old_pool, need_old):
                    cand = tuple(sorted(forced_t + old + fresh_t))
                    if not has_future:
                        # every color must already sit on a processed neighbor
                        if any(all(c not in lists[p] for p in earlier)
                               for c in cand):
                            continue
                    yield cand

        def rec_assign(i: int, used: int) -> bool:
            self.counter[0] -= 1
            if self.counter[0] < 0:
                raise BudgetExceeded("choosability search budget exhausted")
            if i == m:
                return not colorable()
            earlier = set(p for p in nbr_pos[i] if p < i)
            for cand in candidates(i, used):
                cand_set = set(cand)
                # discharge obligations of earlier neighbors whose color
                # now appears here
                discharged = [(key, deadline) for key, deadline in pending.items()
                              if key[0] in earlier and key[1] in cand_set]
                for key, _ in discharged:
                    del pending[key]
                ok = True
                added: list[tuple[int, int]] = []
                for c in cand_set:
                    if all(c not in lists[p] for p in earlier):
                        if last_future[i] < 0:
                            ok = False
                            break
                        pending[(i, c)] = last_future[i]
                        added.append((i, c))
                if ok:
                    lists.append(frozenset(cand_set))
                    if rec_assign(i + 1, max(used, max(cand, default=0))):
                        return True
                    lists.pop()
                for key in added:
                    del pending[key]
                for key, deadline in discharged:
                    pending[key] = deadline
            return False

        return rec_assign(0, 0)


def list_chromatic(g: PlaneGraph, k_max: int, *,
                   budget: int = DEFAULT_NODE_BUDGET) -> Optional[int]:
    """Smallest k <= k_max such that every size-k list assignment is colorable.

    Exact: enumeration up to color renaming is exhaustive over arbitrary
    pools (fresh colors are introduced at most k per vertex, so a pool of
    k*|V| colors already contains a representative of every assignment).
    """
    adj = _adjacency(g)
    counter = [budget]
    full = frozenset(range(g.vertex_count))
    for k in range(1, k_max + 1):
        if _Choosability(adj, k, counter).choosable(full):
            return k
    return None


# -- precoloring-extension surveys -------------------------------------------


@dataclass
class ExtensionFailure:
    cover: Cover
    precoloring: Precoloring


@dataclass
class ExtensionSurvey:
    """Result of sweeping covers x valid precolorings of one cycle."""

    mode: str
    cycle: tuple[int, ...]
    k: int
    covers_checked: int
    precolorings_checked: int
    failures: list[ExtensionFailure] = field(default_factory=list)
    samples: Optional[int] = None
    seed: Optional[int] = None

    @property
    def all_extendable(self) -> bool:
        return not self.failures


def survey_precoloring_extensions(g: PlaneGraph, cycle: Sequence[int], k: int,
                                  mode: str = "exhaustive", *,
                                  samples: int = 500, seed: int = 0,
                                  budget: int = DEFAULT_COVER_BUDGET
                                  ) -> ExtensionSurvey:
    """For each cover, check that every valid precoloring of ``cycle`` extends.

    A precoloring is valid when it is independent on the subgraph induced
    by the cycle's vertices (cycle edges and chords alike).  Per cover, the
    valid precolorings are generated once per distinct restriction of the
    matchings to the induced edges, and extension answers are memoized on
    the residual color masks they induce outside the cycle, so equivalent
    precolorings cost one search.
    """
    cyc = tuple(cycle)
    cyc_set = set(cyc)
    pos_in_cyc = {v: i for i, v in enumerate(cyc)}
    sweep = _CoverSweep(g, k)
    nt_index = {e: i for i, e in enumerate(sweep.non_tree)}
    identity = tuple(range(k))

    # induced edges, described against cycle positions
    inner: list[tuple[int, int, int]] = []  # (pos_u, pos_v, nontree idx | -1)
    for u, v in g.edges():
        if u in cyc_set and v in cyc_set:
            inner.append((pos_in_cyc[u], pos_in_cyc[v], nt_index.get((u, v), -1)))
    inner_nt = sorted({t for _, _, t in inner if t >= 0})

    # boundary constraints: cycle neighbors of each residual vertex
    residual = [v for v in range(g.vertex_count) if v not in cyc_set]
    res_pos = {v: i for i, v in enumerate(residual)}
    # (residual position, cycle position, nontree idx | -1, forward?)
    cross: list[tuple[int, int, int, bool]] = []
    for u, v in g.edges():
        if u in cyc_set and v not in cyc_set:
            e = (u, v)
            cross.append((res_pos[v], pos_in_cyc[u], nt_index.get(e, -1), True))
        elif v in cyc_set and u not in cyc_set:
            e = (u, v)
            cross.append((res_pos[u], pos_in_cyc[v], nt_index.get(e, -1), False))
    # residual-residual constraints for the extension search, ordered
    res_edges: list[tuple[int, int, int, bool]] = []
    for u, v in g.edges():
        if u not in cyc_set and v not in cyc_set:
            a, b = res_pos[u], res_pos[v]
            if a > b:
                a, b = b, a
                fwd = False
            else:
                fwd = True
            res_edges.append((a, b, nt_index.get((u, v), -1), fwd))
    r = len(residual)
    full_mask = (1 << k) - 1

    pre_cache: dict[tuple, list[tuple[int, ...]]] = {}

    def valid_precolorings(key: tuple) -> list[tuple[int, ...]]:
        got = pre_cache.get(key)
        if got is not None:
            return got
        rows = {t: p for t, p in zip(inner_nt, key)}
        inv = {t: tuple(sorted(range(k), key=p.__getitem__))
               for t, p in rows.items()}
        for t, p in rows.items():
            table = [0] * k
            for i, c in enumerate(p):
                table[c] = i
            inv[t] = tuple(table)
        out: list[tuple[int, ...]] = []
        assign = [0] * len(cyc)

        def rec(i: int) -> None:
            if i == len(cyc):
                out.append(tuple(assign))
                return
            banned = 0
            for pu, pv, t in inner:
                if pv == i and pu < i:
                    c = assign[pu] if t < 0 else rows[t][assign[pu]]
                    banned |= 1 << c
                elif pu == i and pv < i:
                    c = assign[pv] if t < 0 else inv[t][assign[pv]]
                    banned |= 1 << c
            for c in range(k):
                if not banned >> c & 1:
                    assign[i] = c
                    rec(i + 1)

        rec(0)
        pre_cache[key] = out
        return out

    def residual_extends(fwd_rows, inv_rows, masks: list[int]) -> bool:
        if any(m == full_mask for m in masks):
            return False

        def rec(i: int) -> bool:
            if i == r:
                return True
            avail = full_mask & ~masks[i]
            while avail:
                c = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                touched: list[tuple[int, int]] = []
                ok = True
                for a, b, t, f in res_edges:
                    if a == i and b > i:
                        banned = c if t < 0 else (fwd_rows[t][c] if f
                                                  else inv_rows[t][c])
                        touched.append((b, masks[b]))
                        masks[b] |= 1 << banned
                        if masks[b] == full_mask:
                            ok = False
                if ok and rec(i + 1):
                    return True
                for b, old in touched:
                    masks[b] = old
            return False

        return rec(0)

    def run(perm_tuple: Sequence[tuple[int, ...]],
            survey: ExtensionSurvey) -> None:
        fwd_rows = []
        inv_rows = []
        for p in perm_tuple:
            row = tuple(c - 1 for c in p)
            fwd_rows.append(row)
            inv = [0] * k
            for i, c in enumerate(row):
                inv[c] = i
            inv_rows.append(tuple(inv))
        key = tuple(fwd_rows[t] for t in inner_nt)
        memo: dict[tuple[int, ...], bool] = {}
        for pre in valid_precolorings(key):
            survey.precolorings_checked += 1
            masks = [0] * r
            for rp, cp, t, f in cross:
                c = pre[cp]
                banned = c if t < 0 else (fwd_rows[t][c] if f else inv_rows[t][c])
                masks[rp] |= 1 << banned
            sig = tuple(masks)
            ok = memo.get(sig)
            if ok is None:
                ok = residual_extends(fwd_rows, inv_rows, list(masks))
                memo[sig] = ok
            if not ok:
                cover = sweep.cover_from(perm_tuple)
                colors = {v: pre[i] + 1 for i, v in enumerate(cyc)}
                survey.failures.append(
                    ExtensionFailure(cover, Precoloring.of(colors)))

    if mode == "exhaustive":
        if sweep.total_covers > budget:
            raise BudgetExceeded(
                f"{sweep.total_covers} covers exceed budget {budget}")
        survey = ExtensionSurvey("exhaustive", cyc, k, 0, 0)
        for t in sweep.canonical_tuples():
            survey.covers_checked += 1
            run(t, survey)
        return survey
    if mode == "sampled":
        rng = random.Random(seed)
        survey = ExtensionSurvey("sampled", cyc, k, 0, 0,
                                 samples=samples, seed=seed)
        for _ in range(samples):
            t = tuple(tuple(rng.sample(range(1, k + 1), k))
                      for _ in sweep.non_tree)
            survey.covers_checked += 1
            run(t, survey)
        return survey
    raise ValueError(f"unknown mode {mode!r}")


def greedy_extension_order(g: PlaneGraph, cycle: Sequence[int],
                           k: int) -> Optional[list[int]]:
    """An order proving every precoloring of ``cycle`` extends, if one exists.

    Peels vertices outside the cycle whose remaining constraint count
    (neighbors on the cycle plus not-yet-peeled neighbors) stays below k;
    coloring the reversed order always leaves a free color, whatever the
    matchings are, so success makes any per-cover sweep unnecessary.
    """
    cyc_set = set(cycle)
    left = {v for v in range(g.vertex_count) if v not in cyc_set}
    peeled: list[int] = []
    while left:
        pick = None
        for v in sorted(left):
            constraints = sum(1 for u in g.neighbors(v)
                              if u in cyc_set or u in left)
            if constraints <= k - 1:
                pick = v
                break
        if pick is None:
            return None
        left.discard(pick)
        peeled.append(pick)
    peeled.reverse()
    return peeled
