"""Structural configurations of plane graphs: class membership, triangle
patches, good/bad cycles, vertex/face tags, and checkable structural facts.

Unless stated otherwise, "3-face" below means a bounded (non-outer)
triangular face; the outer face is accounted separately everywhere it
matters.  Everything embedding-dependent is computed relative to the
stored outer face.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .plane_graph import (Cycle, Face, PlaneGraph, _norm_edge,
                          build_from_rotation, enumerate_cycles)


class StructureError(Exception):
    pass


class NotACycle(StructureError):
    pass


class ReductionRefused(StructureError):
    """Base class for identification refusals."""


class CreatesLoop(ReductionRefused):
    pass


class CreatesParallelEdge(ReductionRefused):
    pass


class CreatesForbiddenAdjacency(ReductionRefused):
    pass


class BadFourCyclePresent(ReductionRefused):
    pass


class NotInternal(ReductionRefused):
    pass


@dataclass(frozen=True)
class ClassTag:
    """Membership in the two hereditary classes this laboratory studies.

    g1: no 4-cycle shares an edge with a 5-cycle.
    g2: no 4-cycle shares an edge with a 6-cycle.
    """

    in_g1: bool
    in_g2: bool

    @property
    def label(self) -> str:
        if self.in_g1 and self.in_g2:
            return "both"
        if self.in_g1:
            return "g1"
        if self.in_g2:
            return "g2"
        return "neither"


@dataclass(frozen=True)
class TrianglePatch:
    """A maximal connected group of bounded 3-faces glued along edges."""

    size: int
    face_ids: tuple[int, ...]
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    boundary_edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class CycleClassification:
    cycle: Cycle
    is_bad: bool
    bad_witnesses: tuple[int, ...]
    separating: bool
    has_chord: bool
    has_internal_common_neighbor: bool
    common_neighbor_witnesses: tuple[tuple[int, int, int], ...]
    interior: frozenset[int]
    exterior: frozenset[int]

    @property
    def is_good(self) -> bool:
        return not self.is_bad


@dataclass(frozen=True)
class VertexFaceBadness:
    """Per-vertex and per-face tags driving the discharging rules."""

    bad4: frozenset[int]
    bad5: frozenset[int]
    good5: frozenset[int]
    diamond_faces: frozenset[int]
    triangles_at_vertex: tuple[tuple[int, ...], ...]
    internal_vertices: frozenset[int]
    internal_faces: frozenset[int]
    special_faces: dict[int, frozenset[int]]  # 5-face id -> special 4-minus faces

    def isolated_triangles_at(self, v: int, adjacency: "FaceAdjacency"
                              ) -> tuple[int, ...]:
        """Incident 3-faces adjacent to none of v's other incident 3-faces."""
        fs = self.triangles_at_vertex[v]
        out = []
        for f in fs:
            if all(other == f or not adjacency.adjacent(f, other) for other in fs):
                out.append(f)
        return tuple(out)


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of one structural check.

    kind "theorem": expected to hold for every member of the class the
    check is gated on.  kind "precondition": a hypothesis used by the
    reduction arguments; failures on real graphs are informative, they
    mark the graph as reducible rather than faulty.
    """

    check_id: str
    kind: str
    holds: bool
    witnesses: tuple = ()


class FaceAdjacency:
    """Edge-sharing relation between faces, with shared-edge counts."""

    def __init__(self, g: PlaneGraph):
        self._counts: dict[tuple[int, int], int] = {}
        for u, v in g.edges():
            f1, f2 = g.faces_at_edge(u, v)
            if f1 != f2:
                key = (f1, f2) if f1 < f2 else (f2, f1)
                self._counts[key] = self._counts.get(key, 0) + 1

    def adjacent(self, f1: int, f2: int) -> bool:
        return self.shared_edges(f1, f2) > 0

    def shared_edges(self, f1: int, f2: int) -> int:
        if f1 == f2:
            return 0
        key = (f1, f2) if f1 < f2 else (f2, f1)
        return self._counts.get(key, 0)

    def neighbors(self, f: int) -> list[int]:
        out = set()
        for a, b in self._counts:
            if a == f:
                out.add(b)
            elif b == f:
                out.add(a)
        return sorted(out)


def internal_vertices(g: PlaneGraph) -> frozenset[int]:
    outer = g.outer_vertices()
    return frozenset(v for v in range(g.vertex_count) if v not in outer)


def internal_faces(g: PlaneGraph) -> frozenset[int]:
    outer = g.outer_vertices()
    return frozenset(f.id for f in g.faces
                     if f.id != g.outer_face_id and not (f.vertex_set() & outer))


def bounded_triangles(g: PlaneGraph) -> list[Face]:
    return [f for f in g.faces if f.length == 3 and f.id != g.outer_face_id]


def class_membership(g: PlaneGraph) -> ClassTag:
    """Test the two forbidden cycle adjacencies (cycles share an edge)."""
    cycles = enumerate_cycles(g, 6)
    by_len: dict[int, list[frozenset[tuple[int, int]]]] = {4: [], 5: [], 6: []}
    for c in cycles:
        if c.length in by_len:
            by_len[c.length].append(c.edge_set())
    in_g1 = not any(e4 & e5 for e4 in by_len[4] for e5 in by_len[5])
    in_g2 = not any(e4 & e6 for e4 in by_len[4] for e6 in by_len[6])
    return ClassTag(in_g1, in_g2)


def find_triangle_patches(g: PlaneGraph) -> list[TrianglePatch]:
    """Maximal edge-glued groups of bounded 3-faces; each 3-face in one patch."""
    tris = bounded_triangles(g)
    ids = [f.id for f in tris]
    adjacency = FaceAdjacency(g)
    parent = {i: i for i in ids}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f1, f2 in itertools.combinations(ids, 2):
        if adjacency.adjacent(f1, f2):
            r1, r2 = find(f1), find(f2)
            if r1 != r2:
                parent[r1] = r2
    groups: dict[int, list[int]] = {}
    for i in ids:
        groups.setdefault(find(i), []).append(i)
    patches = []
    for members in groups.values():
        members.sort()
        edge_count: dict[tuple[int, int], int] = {}
        verts: set[int] = set()
        for fid in members:
            face = g.face(fid)
            verts |= face.vertex_set()
            for e in face.edge_set():
                edge_count[e] = edge_count.get(e, 0) + 1
        patches.append(TrianglePatch(
            size=len(members),
            face_ids=tuple(members),
            vertices=frozenset(verts),
            edges=frozenset(edge_count),
            boundary_edges=frozenset(e for e, c in edge_count.items() if c == 1)))
    patches.sort(key=lambda p: p.face_ids)
    return patches


def _cycle_of(g: PlaneGraph, c: Cycle | Sequence[int]) -> Cycle:
    if isinstance(c, Cycle):
        verts = c.vertices
    else:
        verts = tuple(c)
    if len(verts) < 3 or len(set(verts)) != len(verts):
        raise NotACycle(f"{verts} is not a simple cycle")
    for i, u in enumerate(verts):
        if not g.has_edge(u, verts[(i + 1) % len(verts)]):
            raise NotACycle(f"{verts} misses edge at position {i}")
    return Cycle(verts)


def cycle_sides(g: PlaneGraph, cycle: Cycle | Sequence[int]
                ) -> tuple[frozenset[int], frozenset[int]]:
    """(interior, exterior) vertex sets of a cycle, relative to the outer face.

    Faces are two-colored: crossing a cycle edge flips sides, crossing any
    other edge does not; the side holding the outer face is the exterior.
    """
    cyc = _cycle_of(g, cycle)
    on_cycle = cyc.vertex_set()
    cyc_edges = cyc.edge_set()
    side: dict[int, int] = {g.outer_face_id: 0}
    stack = [g.outer_face_id]
    while stack:
        f = stack.pop()
        for u, v in g.face(f).edge_set():
            f1, f2 = g.faces_at_edge(u, v)
            other = f2 if f1 == f else f1
            if other == f:
                continue
            want = side[f] ^ (1 if (u, v) in cyc_edges else 0)
            if other not in side:
                side[other] = want
                stack.append(other)
    interior: set[int] = set()
    exterior: set[int] = set()
    for f in g.faces:
        bucket = interior if side.get(f.id, 0) else exterior
        bucket |= f.vertex_set() - on_cycle
    return frozenset(interior), frozenset(exterior)


def classify_cycle(g: PlaneGraph, cycle: Cycle | Sequence[int]
                   ) -> CycleClassification:
    """Good/bad, separating, chord, and shared-interior-neighbor flags.

    Bad means: some vertex of degree >= 4 off the cycle has at least four
    neighbors on it.  The interior is the side of the cycle away from the
    outer face.
    """
    cyc = _cycle_of(g, cycle)
    on_cycle = cyc.vertex_set()
    bad_witnesses = tuple(sorted(
        u for u in range(g.vertex_count)
        if u not in on_cycle and g.degree(u) >= 4
        and sum(1 for w in g.neighbors(u) if w in on_cycle) >= 4))
    interior, exterior = cycle_sides(g, cyc)
    verts = cyc.vertices
    m = len(verts)
    consecutive = cyc.edge_set()
    has_chord = any(g.has_edge(verts[i], verts[j])
                    and _norm_edge(verts[i], verts[j]) not in consecutive
                    for i in range(m) for j in range(i + 1, m))
    cn_witnesses = []
    for i in range(m):
        for j in range(i + 1, m):
            a, b = verts[i], verts[j]
            if g.has_edge(a, b):
                continue
            for u in sorted(set(g.neighbors(a)) & set(g.neighbors(b)) & interior):
                cn_witnesses.append((a, b, u))
    return CycleClassification(
        cycle=cyc,
        is_bad=bool(bad_witnesses),
        bad_witnesses=bad_witnesses,
        separating=bool(interior) and bool(exterior),
        has_chord=has_chord,
        has_internal_common_neighbor=bool(cn_witnesses),
        common_neighbor_witnesses=tuple(cn_witnesses),
        interior=interior,
        exterior=exterior)


def classify_vertices_and_faces(g: PlaneGraph) -> VertexFaceBadness:
    """Tags used by the discharging rules.

    A 4-vertex is bad when its incident 3-faces are exactly two adjacent
    ones; a 5-vertex is bad when it sits on exactly three 3-faces of which
    exactly one pair is adjacent (one triangle isolated).  A 3-face is in a
    diamond when some edge-adjacent 3-face shares with it exactly two
    vertices, both of degree 4.
    """
    adjacency = FaceAdjacency(g)
    tris = bounded_triangles(g)
    tri_ids = {f.id for f in tris}
    at_vertex: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for f in tris:
        for v in f.vertex_set():
            at_vertex[v].append(f.id)
    bad4, bad5, good5 = set(), set(), set()
    for v in range(g.vertex_count):
        fs = at_vertex[v]
        if g.degree(v) == 4:
            if len(fs) == 2 and adjacency.adjacent(fs[0], fs[1]):
                bad4.add(v)
        elif g.degree(v) == 5:
            pairs = sum(1 for a, b in itertools.combinations(fs, 2)
                        if adjacency.adjacent(a, b))
            if len(fs) == 3 and pairs == 1:
                bad5.add(v)
            else:
                good5.add(v)
    diamonds = set()
    for f in tris:
        for other in adjacency.neighbors(f.id):
            if other not in tri_ids:
                continue
            shared = f.vertex_set() & g.face(other).vertex_set()
            if len(shared) == 2 and all(g.degree(v) == 4 for v in shared):
                diamonds.add(f.id)
                diamonds.add(other)
    ivs = internal_vertices(g)
    ifs = internal_faces(g)
    outer = g.outer_vertices()
    special: dict[int, frozenset[int]] = {}
    for f in g.faces:
        if f.length != 5 or f.id == g.outer_face_id:
            continue
        fv = f.vertex_set()
        found = set()
        for other in adjacency.neighbors(f.id):
            if other == g.outer_face_id:
                continue
            of = g.face(other)
            shared_internal = fv & of.vertex_set() & ivs
            if of.length == 3:
                if len(shared_internal) == 2 and len(of.vertex_set() & outer) == 1:
                    found.add(other)
            elif of.length == 4:
                if (len(shared_internal) == 2 and len(of.vertex_set() & outer) == 2
                        and all(g.face(x).length != 3
                                for x in adjacency.neighbors(other)
                                if x != g.outer_face_id)):
                    found.add(other)
        special[f.id] = frozenset(found)
    return VertexFaceBadness(
        bad4=frozenset(bad4),
        bad5=frozenset(bad5),
        good5=frozenset(good5),
        diamond_faces=frozenset(diamonds),
        triangles_at_vertex=tuple(tuple(sorted(fs)) for fs in at_vertex),
        internal_vertices=ivs,
        internal_faces=ifs,
        special_faces=special)


def _is_wheel4(vertices: frozenset[int], edges: frozenset[tuple[int, int]],
               degree_in_patch: dict[int, int]) -> bool:
    """Union of 4 triangles isomorphic to the 4-spoke wheel."""
    if len(vertices) != 5 or len(edges) != 8:
        return False
    hubs = [v for v in vertices if degree_in_patch[v] == 4]
    if len(hubs) != 1:
        return False
    rim = [v for v in vertices if v != hubs[0]]
    rim_edges = [e for e in edges if hubs[0] not in e]
    return len(rim_edges) == 4 and all(
        sum(1 for e in rim_edges if r in e) == 2 for r in rim)


def verify_structural_lemmas(g: PlaneGraph) -> list[LemmaReport]:
    """Run every structural check applicable to ``g``.

    Theorem checks are expected to hold for class members; precondition
    checks probe the hypotheses the reduction arguments need, and a failure
    only reports the witnesses that make the graph reducible.
    """
    tag = class_membership(g)
    adjacency = FaceAdjacency(g)
    patches = find_triangle_patches(g)
    reports: list[LemmaReport] = []

    def lengths_at(fid: int) -> list[tuple[int, int]]:
        return [(n, g.face(n).length) for n in adjacency.neighbors(fid)]

    if tag.in_g1:
        w = tuple((f.id, n) for f in g.faces if f.length == 3
                  for n, ln in lengths_at(f.id) if ln == 4)
        reports.append(LemmaReport("g1-no-3-face-adjacent-to-4-face",
                                   "theorem", not w, w))
        big = tuple(p for p in patches if p.size >= 3)
        reports.append(LemmaReport("g1-no-triangle-patch-3plus",
                                   "theorem", not big, big))
        w2 = []
        tri_ids = [f.id for f in bounded_triangles(g)]
        for a, b in itertools.permutations(tri_ids, 2):
            if not adjacency.adjacent(a, b):
                continue
            for n, ln in lengths_at(a):
                if n != b and ln < 6:
                    w2.append((a, b, n))
        reports.append(LemmaReport("g1-adjacent-3-face-pair-neighbors-6plus",
                                   "theorem", not w2, tuple(w2)))
        tris_at = classify_vertices_and_faces(g).triangles_at_vertex
        w3 = tuple(v for v in range(g.vertex_count)
                   if g.degree(v) >= 4 and len(tris_at[v]) > g.degree(v) - 2)
        reports.append(LemmaReport("g1-vertex-triangle-incidence-bound",
                                   "theorem", not w3, w3))
        bad_cycles = tuple(c.vertices for c in enumerate_cycles(g, 7)
                           if classify_cycle(g, c).is_bad)
        reports.append(LemmaReport("g1-short-cycles-good",
                                   "theorem", not bad_cycles, bad_cycles))

    if tag.in_g2:
        oversized = tuple(p for p in patches if p.size >= 5)
        deg_in: dict[int, int] = {}
        bad_wheels = []
        for p in patches:
            if p.size == 4:
                deg_in = {v: sum(1 for e in p.edges if v in e) for v in p.vertices}
                if not _is_wheel4(p.vertices, p.edges, deg_in):
                    bad_wheels.append(p)
        reports.append(LemmaReport("g2-triangle-patch-size-bound",
                                   "theorem", not oversized, tuple(oversized)))
        reports.append(LemmaReport("g2-4-patch-is-wheel",
                                   "theorem", not bad_wheels, tuple(bad_wheels)))
        wp = []
        for p in patches:
            if p.size not in (2, 3, 4):
                continue
            for u, v in sorted(p.edges):
                l1 = g.face(g.faces_at_edge(u, v)[0]).length
                l2 = g.face(g.faces_at_edge(u, v)[1]).length
                profile = sorted((l1, l2))
                if profile != [3, 3] and not (profile[0] == 3 and profile[1] >= 7):
                    wp.append((p.face_ids, (u, v), tuple(profile)))
        reports.append(LemmaReport("g2-patch-edge-face-profile",
                                   "theorem", not wp, tuple(wp)))
        tris_at = classify_vertices_and_faces(g).triangles_at_vertex
        w3 = tuple(v for v in range(g.vertex_count)
                   if g.degree(v) >= 5 and len(tris_at[v]) > g.degree(v) - 2)
        reports.append(LemmaReport("g2-vertex-triangle-incidence-bound",
                                   "theorem", not w3, w3))

    ivs = internal_vertices(g)
    low = tuple(sorted(v for v in ivs if g.degree(v) <= 3))
    reports.append(LemmaReport("internal-min-degree-4", "precondition",
                               not low, low))

    if tag.in_g1:
        seps = tuple(c.vertices for c in enumerate_cycles(g, 7)
                     if classify_cycle(g, c).separating)
        reports.append(LemmaReport("g1-no-separating-7minus-cycle",
                                   "precondition", not seps, seps))
    if tag.in_g2:
        seps = tuple(c.vertices for c in enumerate_cycles(g, 8)
                     if (lambda cc: cc.separating and cc.is_good)
                     (classify_cycle(g, c)))
        reports.append(LemmaReport("g2-no-separating-good-8minus-cycle",
                                   "precondition", not seps, seps))

    outer = g.outer_face
    oc = outer_boundary_report(g)
    reports.append(oc)

    if tag.in_g2:
        tags = classify_vertices_and_faces(g)
        int444 = [f.id for f in g.faces
                  if f.id in tags.internal_faces and f.length == 3
                  and all(g.degree(v) == 4 for v in f.vertex_set())]
        w10 = tuple((a, b) for a, b in itertools.combinations(sorted(int444), 2)
                    if adjacency.shared_edges(a, b) == 1)
        reports.append(LemmaReport("no-edge-sharing-internal-444-pair",
                                   "precondition", not w10, w10))
    return reports


def outer_boundary_report(g: PlaneGraph) -> LemmaReport:
    """Chordless outer boundary and no shared interior neighbors.

    Witnesses are chord edges (u, v) or triples (u, v, w) where the
    non-adjacent boundary vertices u, v share the interior neighbor w.
    """
    boundary = g.outer_face.boundary
    on_outer = set(boundary)
    witnesses: list[tuple] = []
    m = len(boundary)
    if m >= 3 and len(on_outer) == m:
        consecutive = {_norm_edge(boundary[i], boundary[(i + 1) % m])
                       for i in range(m)}
        for i in range(m):
            for j in range(i + 1, m):
                a, b = boundary[i], boundary[j]
                if g.has_edge(a, b) and _norm_edge(a, b) not in consecutive:
                    witnesses.append((a, b))
                elif not g.has_edge(a, b):
                    for u in sorted(set(g.neighbors(a)) & set(g.neighbors(b))
                                    - on_outer):
                        witnesses.append((a, b, u))
    return LemmaReport("outer-chordless-no-shared-interior-neighbor",
                       "precondition", not witnesses, tuple(witnesses))


def identify_and_reduce(g: PlaneGraph, center_v: int,
                        kept_pair: Iterable[int],
                        removed_set: Optional[Iterable[int]] = None,
                        mode: Optional[str] = "g2") -> PlaneGraph:
    """Delete the center, its other two neighbors, and merge the kept pair.

    The center must be a 4-vertex and the kept pair must be opposite in its
    rotation.  Structural refusals (loop, parallel edge, bad 4-cycle
    through the kept pair and the center) are checked before internality so
    that impossible identifications are reported as such even on graphs
    where the vertices touch the outer face.  With mode "g1"/"g2" the
    result must stay in the respective class, otherwise the identification
    is refused as creating a forbidden adjacency.
    """
    if g.degree(center_v) != 4:
        raise NotInternal(f"center {center_v} is not a 4-vertex")
    rot = g.neighbors(center_v)
    kept = tuple(sorted(kept_pair))
    opposite = (tuple(sorted((rot[0], rot[2]))), tuple(sorted((rot[1], rot[3]))))
    if kept not in opposite:
        raise ValueError(f"kept pair {kept} is not opposite at {center_v}")
    other = opposite[1] if kept == opposite[0] else opposite[0]
    expected_removed = frozenset({center_v, *other})
    if removed_set is not None and frozenset(removed_set) != expected_removed:
        raise ValueError(f"removed set must be {sorted(expected_removed)}")
    a, b = kept
    if g.has_edge(a, b):
        raise CreatesLoop(f"kept pair {a},{b} adjacent: identification loops")
    common = (set(g.neighbors(a)) & set(g.neighbors(b))) - expected_removed
    if common:
        raise CreatesParallelEdge(
            f"{a},{b} share neighbors {sorted(common)} outside the removed set")
    for c in enumerate_cycles(g, 4):
        if c.length == 4 and {a, b, center_v} <= c.vertex_set():
            if classify_cycle(g, c).is_bad:
                raise BadFourCyclePresent(f"bad 4-cycle {c.vertices}")
    outer = g.outer_vertices()
    touching = ({center_v, a, b, *other} & outer)
    if touching:
        raise NotInternal(f"vertices {sorted(touching)} lie on the outer face")

    removed = expected_removed
    # merged rotation: splice b's rotation into a's at the slot the center held
    rot_a = [x for x in g.neighbors(a) if x not in removed or x == center_v]
    rot_b = [x for x in g.neighbors(b) if x not in removed or x == center_v]
    ia = rot_a.index(center_v)
    ib = rot_b.index(center_v)
    spliced = (rot_a[:ia]
               + [rot_b[(ib + 1 + t) % len(rot_b)] for t in range(len(rot_b) - 1)]
               + rot_a[ia + 1:])
    spliced = [x for x in spliced if x not in removed]

    old_ids = [v for v in range(g.vertex_count) if v not in removed and v != b]
    new_id = {v: i for i, v in enumerate(old_ids)}

    def renamed(x: int) -> int:
        return new_id[a] if x == b else new_id[x]

    rotations: list[list[int]] = []
    for v in old_ids:
        if v == a:
            rotations.append([renamed(x) for x in spliced])
        else:
            rotations.append([renamed(x) for x in g.neighbors(v)
                              if x not in removed])
    hint = [renamed(x) for x in g.outer_face.boundary]
    reduced = build_from_rotation(len(old_ids), rotations, hint)
    if mode in ("g1", "g2"):
        tag = class_membership(reduced)
        ok = tag.in_g1 if mode == "g1" else tag.in_g2
        if not ok:
            raise CreatesForbiddenAdjacency(
                f"identified graph leaves class {mode}")
    elif mode is not None:
        raise ValueError(f"unknown mode {mode!r}")
    return reduced


def five_face_triangle_contact_rule(g: PlaneGraph, five_face_id: int,
                                    triangle_id: int) -> Optional[bool]:
    """Check one labeled configuration: an internal 5-face next to an
    internal all-4-vertex triangle.

    Returns None when the labeled faces do not form the configuration;
    otherwise True when every 4-vertex on the 5-face opposite the shared
    edge forces the shared edge's far endpoint to have a neighbor on the
    outer face.
    """
    f = g.face(five_face_id)
    t = g.face(triangle_id)
    ifs = internal_faces(g)
    if (f.length != 5 or t.length != 3 or f.id not in ifs or t.id not in ifs
            or not all(g.degree(v) == 4 for v in t.vertex_set())):
        return None
    shared = [e for e in f.edge_set() if e in t.edge_set()]
    if len(shared) != 1:
        return None
    v1, v2 = shared[0]
    boundary = list(f.boundary)
    outer = g.outer_vertices()
    m = len(boundary)
    for idx in range(m):
        prev_v = boundary[(idx - 1) % m]
        cur = boundary[idx]
        nxt = boundary[(idx + 1) % m]
        if {prev_v, cur} == {v1, v2} and g.degree(nxt) == 4:
            if not any(w in outer for w in g.neighbors(cur)):
                return False
        if {cur, nxt} == {v1, v2} and g.degree(prev_v) == 4:
            if not any(w in outer for w in g.neighbors(cur)):
                return False
    return True
