"""Covers: list assignments plus one matching per edge, and the cover graph.

A cover pairs every vertex with an ordered list of colors and every edge
(u, v) with a matching between the two lists.  The induced cover graph has
one node per (vertex, color) pair, a clique inside every list, and the
matching pairs as cross edges.  A transversal of that graph (one node per
vertex, independent) is exactly a coloring under the correspondence.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from .plane_graph import PlaneGraph, _norm_edge


class CoverError(Exception):
    """Base class for cover construction errors."""


class BadPermutation(CoverError):
    """A permutation chooser returned something that is not a bijection."""


class NotAForest(CoverError):
    """The edge set handed to straighten contains a cycle."""


class NonPerfectTreeMatching(CoverError):
    """A tree edge's matching is not a bijection between equal-size lists."""


PairList = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Cover:
    """Lists and matchings for one graph.

    ``lists[v]`` is the ordered color list of vertex v.  ``matchings`` maps
    each edge, keyed as (u, v) with u < v, to matched pairs (cu, cv); an
    absent key means the empty matching.
    """

    lists: tuple[tuple[int, ...], ...]
    matchings: Mapping[tuple[int, int], PairList]

    def list_of(self, v: int) -> tuple[int, ...]:
        return self.lists[v]

    def matching(self, u: int, v: int) -> PairList:
        """Pairs for edge uv, oriented (color-of-u, color-of-v)."""
        if u < v:
            return self.matchings.get((u, v), ())
        return tuple((b, a) for a, b in self.matchings.get((v, u), ()))

    def matched_color(self, u: int, cu: int, v: int) -> Optional[int]:
        """Color of v matched with (u, cu) on edge uv, if any."""
        for a, b in self.matching(u, v):
            if a == cu:
                return b
        return None

    def is_straight(self, u: int, v: int) -> bool:
        return all(a == b for a, b in self.matching(u, v))


@dataclass(frozen=True)
class StraightnessCertificate:
    """Which edges were straightened and the per-vertex renamings used.

    ``relabelings[v]`` lists (old color, new color) pairs; the renamings
    give the explicit bijection between transversals of the input and
    output covers: t'(v) = relabel_v(t(v)).
    """

    straight_edges: frozenset[tuple[int, int]]
    relabelings: tuple[tuple[tuple[int, int], ...], ...]

    def permutation(self, v: int) -> dict[int, int]:
        return dict(self.relabelings[v])

    def verify(self, cover: Cover) -> bool:
        """True when every certified edge is straight in ``cover``."""
        return all(cover.is_straight(u, v) for u, v in self.straight_edges)


class CoverGraph:
    """The graph on (vertex, color) nodes induced by a cover.

    Nodes are pairs (v, c) with c in the list of v; every list induces a
    clique and every matched pair is a cross edge.
    """

    __slots__ = ("groups", "cross", "graph_edges")

    def __init__(self, groups: tuple[tuple[int, ...], ...],
                 cross: Mapping[tuple[int, int], PairList]):
        self.groups = groups
        self.cross = dict(cross)
        self.graph_edges = tuple(sorted(self.cross))

    @property
    def vertex_count(self) -> int:
        return len(self.groups)

    def color_vertices(self) -> list[tuple[int, int]]:
        return [(v, c) for v, colors in enumerate(self.groups) for c in colors]

    def matching(self, u: int, v: int) -> PairList:
        if u < v:
            return self.cross.get((u, v), ())
        return tuple((b, a) for a, b in self.cross.get((v, u), ()))

    def matched_color(self, u: int, cu: int, v: int) -> Optional[int]:
        for a, b in self.matching(u, v):
            if a == cu:
                return b
        return None

    def neighbors_of_group(self, v: int) -> list[int]:
        out = set()
        for a, b in self.graph_edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return sorted(out)

    def has_edge(self, x: tuple[int, int], y: tuple[int, int]) -> bool:
        (u, cu), (v, cv) = x, y
        if u == v:
            return cu != cv and cu in self.groups[u] and cv in self.groups[u]
        return self.matched_color(u, cu, v) == cv

    def edges(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """All edges of the cover graph (clique edges plus matching edges)."""
        out = []
        for v, colors in enumerate(self.groups):
            for c1, c2 in itertools.combinations(colors, 2):
                out.append(((v, c1), (v, c2)))
        for (u, v), pairs in sorted(self.cross.items()):
            for cu, cv in pairs:
                out.append(((u, cu), (v, cv)))
        return out


# -- construction -----------------------------------------------------------


def _check_matching(u: int, v: int, pairs: Iterable[tuple[int, int]],
                    lu: Sequence[int], lv: Sequence[int]) -> PairList:
    pairs = tuple(sorted(pairs))
    seen_u: set[int] = set()
    seen_v: set[int] = set()
    for cu, cv in pairs:
        if cu not in lu or cv not in lv:
            raise CoverError(f"edge ({u},{v}): pair ({cu},{cv}) not in lists")
        if cu in seen_u or cv in seen_v:
            raise CoverError(f"edge ({u},{v}): not a matching")
        seen_u.add(cu)
        seen_v.add(cv)
    return pairs


def make_cover(g: PlaneGraph, lists: Sequence[Sequence[int]],
               matchings: Mapping[tuple[int, int], Iterable[tuple[int, int]]]
               ) -> Cover:
    """Validated cover from explicit lists and per-edge matched pairs."""
    ls = tuple(tuple(l) for l in lists)
    if len(ls) != g.vertex_count:
        raise CoverError("one list per vertex required")
    for v, l in enumerate(ls):
        if len(set(l)) != len(l):
            raise CoverError(f"list of {v} repeats a color")
    out: dict[tuple[int, int], PairList] = {}
    for (u, v), pairs in matchings.items():
        u, v = _norm_edge(u, v)
        if not g.has_edge(u, v):
            raise CoverError(f"({u},{v}) is not an edge")
        oriented = [(a, b) for a, b in pairs] if u < v else [(b, a) for a, b in pairs]
        out[(u, v)] = _check_matching(u, v, oriented, ls[u], ls[v])
    return Cover(ls, out)


def diagonal_cover(g: PlaneGraph, lists: Sequence[Sequence[int]]) -> Cover:
    """The cover whose matchings pair equal colors: plain list coloring."""
    ls = tuple(tuple(l) for l in lists)
    matchings: dict[tuple[int, int], PairList] = {}
    for u, v in g.edges():
        shared = sorted(set(ls[u]) & set(ls[v]))
        matchings[(u, v)] = tuple((c, c) for c in shared)
    return Cover(ls, matchings)


PermutationChooser = Callable[[int, int, int], Sequence[int]]


def identity_chooser(u: int, v: int, k: int) -> Sequence[int]:
    return tuple(range(1, k + 1))


def random_chooser(seed: int) -> PermutationChooser:
    """Seeded chooser; deterministic because edges are visited in sorted order."""
    rng = random.Random(seed)

    def choose(u: int, v: int, k: int) -> Sequence[int]:
        perm = list(range(1, k + 1))
        rng.shuffle(perm)
        return tuple(perm)

    return choose


def table_chooser(table: Mapping[tuple[int, int], Sequence[int]]
                  ) -> PermutationChooser:
    """Explicit per-edge permutations; omitted edges get the identity."""

    def choose(u: int, v: int, k: int) -> Sequence[int]:
        if (u, v) in table:
            return tuple(table[(u, v)])
        if (v, u) in table:
            perm = tuple(table[(v, u)])
            inverse = [0] * k
            for i, image in enumerate(perm):
                inverse[image - 1] = i + 1
            return tuple(inverse)
        return tuple(range(1, k + 1))

    return choose


def _perm_pairs(perm: Sequence[int], k: int) -> PairList:
    if sorted(perm) != list(range(1, k + 1)):
        raise BadPermutation(f"{tuple(perm)} is not a bijection on 1..{k}")
    return tuple((c, perm[c - 1]) for c in range(1, k + 1))


def full_cover(g: PlaneGraph, k: int,
               chooser: PermutationChooser = identity_chooser) -> Cover:
    """Cover with every list equal to 1..k and permutation matchings.

    The chooser is called once per edge, in sorted edge order, and must
    return the permutation sending each color of u to its match at v.
    """
    if k < 1:
        raise CoverError("k must be at least 1")
    lists = tuple(tuple(range(1, k + 1)) for _ in range(g.vertex_count))
    matchings: dict[tuple[int, int], PairList] = {}
    for u, v in g.edges():
        matchings[(u, v)] = _perm_pairs(chooser(u, v, k), k)
    return Cover(lists, matchings)


def bfs_tree_edges(g: PlaneGraph, root: int = 0) -> list[tuple[int, int]]:
    """Edges of the breadth-first spanning tree from ``root`` (sorted nbrs)."""
    seen = {root}
    queue = [root]
    tree: list[tuple[int, int]] = []
    while queue:
        u = queue.pop(0)
        for v in sorted(g.neighbors(u)):
            if v not in seen:
                seen.add(v)
                tree.append(_norm_edge(u, v))
                queue.append(v)
    return tree


def enumerate_covers(g: PlaneGraph, k: int) -> Iterator[Cover]:
    """Canonical covers: identity on a spanning tree, all else enumerated.

    Renaming colors vertex by vertex never changes whether a transversal
    exists, and any cover can be renamed so that a fixed spanning tree is
    straight.  Enumerating permutations on the non-tree edges only is
    therefore exhaustive for colorability questions, giving
    (k!)**(|E|-|V|+1) covers for a connected graph.  Renaming every list
    by one common permutation can still identify two of these (conjugate
    twists), so for k >= 3 the stream may hold several members of one
    relabeling class; downstream sweeps exploit exactly that symmetry.
    """
    if k < 1:
        raise CoverError("k must be at least 1")
    tree = set(bfs_tree_edges(g))
    lists = tuple(tuple(range(1, k + 1)) for _ in range(g.vertex_count))
    identity = tuple((c, c) for c in range(1, k + 1))
    non_tree = [e for e in g.edges() if e not in tree]
    perms = list(itertools.permutations(range(1, k + 1)))
    base = {e: identity for e in tree}
    for assignment in itertools.product(perms, repeat=len(non_tree)):
        matchings = dict(base)
        for e, perm in zip(non_tree, assignment):
            matchings[e] = tuple((c, perm[c - 1]) for c in range(1, k + 1))
        yield Cover(lists, matchings)


def cover_graph(g: PlaneGraph, cover: Cover) -> CoverGraph:
    """Materialize the cover graph of ``cover`` over ``g``."""
    if len(cover.lists) != g.vertex_count:
        raise CoverError("cover does not fit graph")
    cross = {e: cover.matchings.get(e, ()) for e in g.edges()}
    return CoverGraph(cover.lists, cross)


def straighten(g: PlaneGraph, cover: Cover,
               tree_edge_set: Iterable[tuple[int, int]]
               ) -> tuple[Cover, StraightnessCertificate]:
    """Rename colors vertex by vertex until every given edge is straight.

    The edges must form a forest and carry bijective matchings between
    equal-size lists.  Only per-vertex renamings are applied, so the
    returned certificate's relabelings place transversals of the old and
    new covers in bijection.
    """
    edges = sorted({_norm_edge(u, v) for u, v in tree_edge_set})
    for u, v in edges:
        if not g.has_edge(u, v):
            raise CoverError(f"({u},{v}) is not an edge")
    # union-find acyclicity check
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotAForest(f"edge ({u},{v}) closes a cycle")
        parent[ru] = rv

    forest_adj: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for u, v in edges:
        forest_adj[u].append(v)
        forest_adj[v].append(u)

    relabel: list[dict[int, int]] = [
        {c: c for c in cover.lists[v]} for v in range(g.vertex_count)
    ]
    visited = [False] * g.vertex_count
    for root in range(g.vertex_count):
        if visited[root]:
            continue
        visited[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in sorted(forest_adj[u]):
                if visited[v]:
                    continue
                pairs = cover.matching(u, v)
                lu, lv = cover.lists[u], cover.lists[v]
                if not (len(pairs) == len(lu) == len(lv)):
                    raise NonPerfectTreeMatching(
                        f"edge ({u},{v}): matching is not a bijection")
                inverse = {cv: cu for cu, cv in pairs}
                relabel[v] = {cv: relabel[u][inverse[cv]] for cv in lv}
                visited[v] = True
                queue.append(v)

    new_lists = tuple(tuple(relabel[v][c] for c in cover.lists[v])
                      for v in range(g.vertex_count))
    new_matchings: dict[tuple[int, int], PairList] = {}
    for (u, v), pairs in cover.matchings.items():
        new_matchings[(u, v)] = tuple(sorted(
            (relabel[u][cu], relabel[v][cv]) for cu, cv in pairs))
    new_cover = Cover(new_lists, new_matchings)
    cert = StraightnessCertificate(
        frozenset(edges),
        tuple(tuple(sorted(relabel[v].items())) for v in range(g.vertex_count)))
    return new_cover, cert
