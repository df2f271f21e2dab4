"""Exact-rational discharging: charges, rules, transfer logs, and audits.

Charges live on vertices and faces: d(x) - 4 everywhere except the outer
face, which starts at d(D) + 4, so the grand total is exactly zero on any
accepted embedding.  A ruleset moves charge in numbered phases; every move
is logged and the log replays bit-exactly.  Two rulesets are provided:

* G1 - for graphs with no 4-cycle adjacent to a 5-cycle;
* G2 - for graphs with no 4-cycle adjacent to a 6-cycle.

Floating point is never used; all amounts are fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .plane_graph import PlaneGraph
from .structure import (FaceAdjacency, VertexFaceBadness,
                        bounded_triangles, class_membership,
                        classify_cycle, classify_vertices_and_faces,
                        enumerate_cycles, find_triangle_patches,
                        internal_vertices, outer_boundary_report)

Element = tuple[str, int]  # ("v", vertex id) or ("f", face id)


class DischargingError(Exception):
    pass


class TagUnavailable(DischargingError):
    """Precomputed tags were supplied but lack something the rules need."""


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class ChargeLedger:
    """Exact charge per element plus a stage marker."""

    charges: dict[Element, Fraction]
    stage: str

    def total(self) -> Fraction:
        return sum(self.charges.values(), Fraction(0))

    def copy(self, stage: Optional[str] = None) -> "ChargeLedger":
        return ChargeLedger(dict(self.charges), stage or self.stage)

    def __getitem__(self, elem: Element) -> Fraction:
        return self.charges[elem]

    def lines(self) -> list[str]:
        out = []
        for (kind, i), q in sorted(self.charges.items()):
            out.append(f"{kind} {i} {_fmt(q)}")
        return out


@dataclass(frozen=True)
class Transfer:
    rule: str
    sender: Element
    receiver: Element
    amount: Fraction
    note: str = ""

    def line(self) -> str:
        s = f"{self.sender[0]}{self.sender[1]}"
        r = f"{self.receiver[0]}{self.receiver[1]}"
        return f"{self.rule} {s} {r} {_fmt(self.amount)}"


@dataclass
class TransferLog:
    entries: tuple[Transfer, ...]

    def replay(self, initial: ChargeLedger) -> ChargeLedger:
        led = initial.copy("final")
        for t in self.entries:
            led.charges[t.sender] -= t.amount
            led.charges[t.receiver] += t.amount
        return led

    def by_rule(self) -> dict[str, list[Transfer]]:
        out: dict[str, list[Transfer]] = {}
        for t in self.entries:
            out.setdefault(t.rule, []).append(t)
        return out

    def lines(self) -> list[str]:
        return [t.line() for t in self.entries]


class _Context:
    """Everything the rules read: graph, tags, adjacency, live charges."""

    def __init__(self, g: PlaneGraph, tags: VertexFaceBadness):
        self.g = g
        self.tags = tags
        self.adjacency = FaceAdjacency(g)
        self.outer = g.outer_face_id
        self.outer_verts = g.outer_vertices()
        self.tris = bounded_triangles(g)
        self.tri_ids = frozenset(f.id for f in self.tris)
        self.charges: dict[Element, Fraction] = {}
        if not hasattr(tags, "triangles_at_vertex"):  # pragma: no cover
            raise TagUnavailable("vertex/face tags missing")

    def face_len(self, fid: int) -> int:
        return self.g.face(fid).length

    def is_internal_face(self, fid: int) -> bool:
        return fid in self.tags.internal_faces

    def is_444(self, fid: int) -> bool:
        return (fid in self.tri_ids
                and all(self.g.degree(v) == 4
                        for v in self.g.face(fid).vertex_set()))

    def non_internal_tris(self) -> list[int]:
        return [f.id for f in self.tris
                if f.vertex_set() & self.outer_verts]

    def degree(self, v: int) -> int:
        return self.g.degree(v)


RuleEmit = Callable[[_Context], Iterator[Transfer]]


@dataclass(frozen=True)
class Rule:
    """One numbered discharging rule: a guarded sender/receiver/amount recipe."""

    id: str
    description: str
    emit: RuleEmit


@dataclass(frozen=True)
class RuleSet:
    id: str
    rules: tuple[Rule, ...]
    surplus_rule_id: str


# -- G1 rules ---------------------------------------------------------------


def _g1_r1(ctx: _Context) -> Iterator[Transfer]:
    for v in range(ctx.g.vertex_count):
        if v in ctx.outer_verts or ctx.degree(v) < 5:
            continue
        fs = ctx.tags.triangles_at_vertex[v]
        if not fs:
            continue  # no incident 3-face: the vertex keeps its charge
        share = Fraction(ctx.degree(v) - 4, len(fs))
        for fid in fs:
            yield Transfer("R1", ("v", v), ("f", fid), share)


def _g1_r2(ctx: _Context) -> Iterator[Transfer]:
    for f in ctx.g.faces:
        if f.id == ctx.outer or f.length != 5:
            continue
        for fid in ctx.adjacency.neighbors(f.id):
            if fid in ctx.tri_ids and ctx.is_internal_face(fid):
                amt = Fraction(1, 3) if ctx.is_444(fid) else Fraction(1, 6)
                yield Transfer("R2", ("f", f.id), ("f", fid), amt)


def _g1_r3(ctx: _Context) -> Iterator[Transfer]:
    for f in ctx.g.faces:
        if f.id == ctx.outer or f.length < 6:
            continue
        for fid in ctx.adjacency.neighbors(f.id):
            if fid in ctx.tri_ids and ctx.is_internal_face(fid):
                t = ctx.adjacency.shared_edges(f.id, fid)
                rate = Fraction(1, 2) if fid in ctx.tags.diamond_faces \
                    else Fraction(1, 3)
                yield Transfer("R3", ("f", f.id), ("f", fid), rate * t)


def _g1_r4(ctx: _Context) -> Iterator[Transfer]:
    for v in sorted(ctx.outer_verts):
        yield Transfer("R4", ("v", v), ("f", ctx.outer),
                       Fraction(ctx.degree(v) - 4))
    for fid in ctx.non_internal_tris():
        yield Transfer("R4", ("f", ctx.outer), ("f", fid), Fraction(1))


def _surplus(rule_id: str, min_len: int) -> RuleEmit:
    def emit(ctx: _Context) -> Iterator[Transfer]:
        for f in ctx.g.faces:
            if f.id == ctx.outer or f.length < min_len:
                continue
            bal = ctx.charges[("f", f.id)]
            if bal > 0:
                yield Transfer(rule_id, ("f", f.id), ("f", ctx.outer), bal)
    return emit


RULESET_G1 = RuleSet("G1", (
    Rule("R1", "internal 5+-vertex splits its charge over incident 3-faces",
         _g1_r1),
    Rule("R2", "5-face pays 1/3 per adjacent internal all-4 triangle, "
               "1/6 per other adjacent internal 3-face", _g1_r2),
    Rule("R3", "6+-face pays t/2 per adjacent internal diamond 3-face, "
               "t/3 otherwise (t = shared edges)", _g1_r3),
    Rule("R4", "outer face collects d(v)-4 from its vertices and pays 1 "
               "per non-internal 3-face", _g1_r4),
    Rule("R5", "every bounded face sends its positive balance to the outer "
               "face", _surplus("R5", 0)),
), surplus_rule_id="R5")


# -- G2 rules ---------------------------------------------------------------


def _g2_r1(ctx: _Context) -> Iterator[Transfer]:
    for v in range(ctx.g.vertex_count):
        if v in ctx.outer_verts:
            continue
        d = ctx.degree(v)
        fs = ctx.tags.triangles_at_vertex[v]
        if d >= 6:
            for fid in fs:
                yield Transfer("R1", ("v", v), ("f", fid), Fraction(1, 2))
        elif d == 5 and v in ctx.tags.bad5:
            isolated = ctx.tags.isolated_triangles_at(v, ctx.adjacency)
            for fid in fs:
                amt = Fraction(1, 4) if fid in isolated else Fraction(3, 8)
                yield Transfer("R1", ("v", v), ("f", fid), amt)
        elif d == 5 and fs:
            share = Fraction(1, len(fs))
            for fid in fs:
                yield Transfer("R1", ("v", v), ("f", fid), share)


def _g2_r2(ctx: _Context) -> Iterator[Transfer]:
    for f in ctx.g.faces:
        if f.id == ctx.outer or f.length != 5:
            continue
        special = ctx.tags.special_faces.get(f.id, frozenset())
        for fid in ctx.adjacency.neighbors(f.id):
            if fid == ctx.outer:
                continue
            ln = ctx.face_len(fid)
            if ln == 3 and ctx.is_internal_face(fid) and ctx.is_444(fid):
                yield Transfer("R2", ("f", f.id), ("f", fid), Fraction(1, 3))
            elif ln in (3, 4) and fid not in special:
                yield Transfer("R2", ("f", f.id), ("f", fid), Fraction(1, 6))


def _g2_r3(ctx: _Context) -> Iterator[Transfer]:
    for f in ctx.g.faces:
        if f.id == ctx.outer or f.length not in (4, 6):
            continue
        for fid in ctx.adjacency.neighbors(f.id):
            if fid in ctx.tri_ids:
                yield Transfer("R3", ("f", f.id), ("f", fid), Fraction(1, 3))


def _g2_r4(ctx: _Context) -> Iterator[Transfer]:
    for f in ctx.g.faces:
        if f.id == ctx.outer or f.length < 7:
            continue
        fv = f.vertex_set()
        for fid in ctx.adjacency.neighbors(f.id):
            if fid == ctx.outer:
                continue
            ln = ctx.face_len(fid)
            if ln not in (3, 4):
                continue
            t = ctx.adjacency.shared_edges(f.id, fid)
            if ln == 4:
                rate = Fraction(3, 7)
            else:
                shared_bad = len(fv & ctx.g.face(fid).vertex_set()
                                 & ctx.tags.bad4)
                rate = (Fraction(6, 7) if shared_bad >= 2
                        else Fraction(9, 14) if shared_bad == 1
                        else Fraction(3, 7))
            yield Transfer("R4", ("f", f.id), ("f", fid), rate * t)


def _g2_r5(ctx: _Context) -> Iterator[Transfer]:
    for v in sorted(ctx.outer_verts):
        yield Transfer("R5", ("v", v), ("f", ctx.outer),
                       Fraction(ctx.degree(v) - 4))
    for fid in ctx.non_internal_tris():
        yield Transfer("R5", ("f", ctx.outer), ("f", fid), Fraction(5, 7))


RULESET_G2 = RuleSet("G2", (
    Rule("R1", "internal 6+-vertex pays 1/2 per incident 3-face; good "
               "5-vertex splits 1 evenly; bad 5-vertex pays 1/4 to its "
               "isolated 3-face and 3/8 to the adjacent pair", _g2_r1),
    Rule("R2", "5-face pays 1/3 per adjacent internal all-4 triangle and "
               "1/6 per other adjacent non-special 3- or 4-face", _g2_r2),
    Rule("R3", "4- and 6-faces pay 1/3 per adjacent 3-face", _g2_r3),
    Rule("R4", "7+-face pays 6t/7, 9t/14 or 3t/7 per adjacent small face "
               "by shared bad-4-vertex count (t = shared edges)", _g2_r4),
    Rule("R5", "outer face collects d(v)-4 from its vertices and pays 5/7 "
               "per non-internal 3-face", _g2_r5),
    Rule("R6", "every bounded 5+-face sends its positive balance to the "
               "outer face", _surplus("R6", 5)),
), surplus_rule_id="R6")


RULESETS = {"g1": RULESET_G1, "g2": RULESET_G2}


# -- operations --------------------------------------------------------------


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    """d(x) - 4 on vertices and bounded faces, d(D) + 4 on the outer face."""
    charges: dict[Element, Fraction] = {}
    for v in range(g.vertex_count):
        charges[("v", v)] = Fraction(g.degree(v) - 4)
    for f in g.faces:
        if f.id == g.outer_face_id:
            charges[("f", f.id)] = Fraction(f.length + 4)
        else:
            charges[("f", f.id)] = Fraction(f.length - 4)
    led = ChargeLedger(charges, "initial")
    assert led.total() == 0
    return led


def run_discharging(g: PlaneGraph, ruleset: RuleSet,
                    tags: Optional[VertexFaceBadness] = None
                    ) -> tuple[ChargeLedger, TransferLog]:
    """Apply the ruleset's phases in order; returns final ledger and log.

    Within a phase, senders fire in element-id order, receivers in id
    order, so the log is reproducible; replaying it over the initial
    ledger reconstructs the final ledger exactly.
    """
    if tags is None:
        tags = classify_vertices_and_faces(g)
    elif len(tags.triangles_at_vertex) != g.vertex_count:
        raise TagUnavailable("tags were computed for a different graph")
    ctx = _Context(g, tags)
    led = initial_charges(g).copy("post-rules")
    ctx.charges = led.charges
    entries: list[Transfer] = []
    for rule in ruleset.rules:
        for t in rule.emit(ctx):
            led.charges[t.sender] -= t.amount
            led.charges[t.receiver] += t.amount
            entries.append(t)
    led.stage = "final"
    return led, TransferLog(tuple(entries))


@dataclass
class BoundCheck:
    """One conditional inequality; ``holds`` is None when not applicable."""

    id: str
    applicable: bool
    holds: Optional[bool]
    violations: tuple = ()


@dataclass
class OuterAccounting:
    d_outer: int
    s: int
    s_prime: int
    f3: int
    f3_prime: int
    t1: int
    t2: int
    b: Fraction
    k: int
    g1_identity_applicable: bool = False
    g1_identity_holds: Optional[bool] = None
    g2_identity_applicable: bool = False
    g2_identity_holds: Optional[bool] = None


@dataclass
class DischargingReport:
    ruleset_id: str
    initial: ChargeLedger
    final: ChargeLedger
    log: TransferLog
    negative_elements: tuple[tuple[Element, Fraction], ...]
    accounting: OuterAccounting
    bound_checks: list[BoundCheck]
    conservation_ok: bool
    replay_ok: bool
    per_rule_balanced: bool
    nonneg_with_positive_outer: bool

    def to_text(self) -> str:
        lines = [f"ruleset {self.ruleset_id}"]
        lines += self.final.lines()
        lines += self.log.lines()
        return "\n".join(lines) + "\n"


def _restricted_patches(g: PlaneGraph, adjacency: FaceAdjacency,
                        face_ids: list[int]) -> list[list[int]]:
    """Connected groups (by shared edges) within a subset of 3-faces."""
    groups: list[list[int]] = []
    left = set(face_ids)
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in list(left):
                if y not in comp and adjacency.adjacent(x, y):
                    comp.add(y)
                    stack.append(y)
        groups.append(sorted(comp))
        left -= comp
    return groups


def audit(g: PlaneGraph, ruleset: RuleSet) -> DischargingReport:
    """Run the ruleset and cross-check everything checkable.

    Conservation, log replay and per-rule balance are always verified.
    The outer-face accounting identities and the compensation lower bounds
    are evaluated only when their structural hypotheses hold for ``g``
    (they come from arguments about highly constrained embeddings and are
    simply not claims about arbitrary graphs).
    """
    tags = classify_vertices_and_faces(g)
    final, log = run_discharging(g, ruleset, tags)
    initial = initial_charges(g)
    adjacency = FaceAdjacency(g)
    tag = class_membership(g)

    conservation_ok = initial.total() == 0 and final.total() == 0
    replay_ok = log.replay(initial).charges == final.charges
    per_rule = True
    for rule_id, ts in log.by_rule().items():
        sent: dict[Element, Fraction] = {}
        received: dict[Element, Fraction] = {}
        for t in ts:
            sent[t.sender] = sent.get(t.sender, Fraction(0)) + t.amount
            received[t.receiver] = received.get(t.receiver, Fraction(0)) + t.amount
        if sum(sent.values(), Fraction(0)) != sum(received.values(), Fraction(0)):
            per_rule = False

    negative = tuple((e, q) for e, q in sorted(final.charges.items()) if q < 0)
    outer_id = g.outer_face_id
    outer_elem: Element = ("f", outer_id)
    nonneg_rest = all(q >= 0 for e, q in final.charges.items() if e != outer_elem)
    combo = nonneg_rest and final.charges[outer_elem] > 0

    # outer accounting ------------------------------------------------
    outer_verts = g.outer_vertices()
    d_outer = g.outer_face.length
    cross_edges = [(u, v) for u, v in g.edges()
                   if (u in outer_verts) != (v in outer_verts)]
    s = len(cross_edges)
    tri_faces = bounded_triangles(g)
    tri_edge_sets = {f.id: f.edge_set() for f in tri_faces}

    def on_some_triangle(e: tuple[int, int]) -> bool:
        return any(e in es for es in tri_edge_sets.values())

    s_prime = sum(1 for e in cross_edges if not on_some_triangle(e))
    non_internal = [f.id for f in tri_faces if f.vertex_set() & outer_verts]
    f3 = len(non_internal)
    rpatches = _restricted_patches(g, adjacency, non_internal)
    t1 = sum(1 for p in rpatches if len(p) == 1)
    t2 = sum(1 for p in rpatches if len(p) == 2)
    global_patches = find_triangle_patches(g)
    f3_prime = sum(1 for p in global_patches
                   if p.face_ids and all(g.face(fid).vertex_set() & outer_verts
                                         for fid in p.face_ids))
    b = sum((t.amount for t in log.entries
             if t.rule == ruleset.surplus_rule_id and t.receiver == outer_elem),
            Fraction(0))
    k = s - f3
    acct = OuterAccounting(d_outer, s, s_prime, f3, f3_prime, t1, t2, b, k)

    chordless = outer_boundary_report(g).holds
    boundary_simple = (len(set(g.outer_face.boundary))
                       == len(g.outer_face.boundary) >= 3)

    def shared_edge_touches_outer(p: list[int]) -> bool:
        for a, bfid in itertools.combinations(p, 2):
            for e in tri_edge_sets[a] & tri_edge_sets[bfid]:
                if not (e[0] in outer_verts or e[1] in outer_verts):
                    return False
        return True

    if tag.in_g1:
        acct.g1_identity_applicable = (
            chordless and boundary_simple
            and all(len(p) <= 2 for p in rpatches)
            and all(shared_edge_touches_outer(p) for p in rpatches))
        if acct.g1_identity_applicable:
            acct.g1_identity_holds = (f3 == t1 + 2 * t2
                                      and s == s_prime + 2 * t1 + 3 * t2)
    if tag.in_g2:
        mixed = any(
            (any(g.face(fid).vertex_set() & outer_verts for fid in p.face_ids)
             and not all(g.face(fid).vertex_set() & outer_verts
                         for fid in p.face_ids))
            for p in global_patches)
        acyclic = all(len(p.face_ids) - 1 ==
                      sum(1 for a, bfid in itertools.combinations(p.face_ids, 2)
                          if adjacency.adjacent(a, bfid))
                      for p in global_patches)
        acct.g2_identity_applicable = (
            chordless and boundary_simple and not mixed and acyclic
            and all(shared_edge_touches_outer(list(p.face_ids))
                    for p in global_patches))
        if acct.g2_identity_applicable:
            acct.g2_identity_holds = (s == s_prime + f3 + f3_prime)

    checks: list[BoundCheck] = []
    ivs = internal_vertices(g)
    min_deg_ok = all(g.degree(v) >= 4 for v in ivs)
    has_interior = bool(ivs)

    if ruleset.id == "G1":
        sep_free = not any(classify_cycle(g, c).separating
                           for c in enumerate_cycles(g, 7))
        applicable = (tag.in_g1 and has_interior and min_deg_ok and sep_free
                      and chordless and boundary_simple and d_outer >= 5)
        holds = None
        viol: tuple = ()
        if applicable:
            bound = (Fraction(d_outer, 3) if k == 1
                     else Fraction(d_outer - k, 3))
            holds = k >= 1 and b >= bound
            if not holds:
                viol = ((k, b, bound),)
        checks.append(BoundCheck("g1-outer-compensation", applicable,
                                 holds, viol))
        # every internal 3-face receives >= 1/3 from each incident
        # 5+-vertex, provided that vertex obeys the incidence bound
        r1viol = []
        if tag.in_g1:
            for t in log.by_rule().get("R1", ()):
                v = t.sender[1]
                if (t.receiver[1] in tags.internal_faces
                        and len(tags.triangles_at_vertex[v])
                        <= g.degree(v) - 2
                        and t.amount < Fraction(1, 3)):
                    r1viol.append(t)
        checks.append(BoundCheck("g1-vertex-share-floor", tag.in_g1,
                                 (not r1viol) if tag.in_g1 else None,
                                 tuple(r1viol)))

    if ruleset.id == "G2":
        outer_cycle_ok = boundary_simple and d_outer <= 8
        outer_good = (outer_cycle_ok
                      and not classify_cycle(g, g.outer_face.boundary).is_bad)
        sep_free = not any(
            (lambda cc: cc.separating and cc.is_good)(classify_cycle(g, c))
            for c in enumerate_cycles(g, 8))
        applicable = (tag.in_g2 and has_interior and min_deg_ok and sep_free
                      and chordless and outer_good)
        share_viol = []
        comp_holds = None
        comp_viol: tuple = ()
        if applicable:
            surplus_by_face: dict[int, Fraction] = {}
            for t in log.entries:
                if t.rule == ruleset.surplus_rule_id and t.receiver == outer_elem:
                    surplus_by_face[t.sender[1]] = t.amount
            for f in g.faces:
                if f.id == outer_id or f.length < 5:
                    continue
                kf = adjacency.shared_edges(f.id, outer_id)
                if kf == 0:
                    continue
                sent = surplus_by_face.get(f.id, Fraction(0))
                floor = (Fraction(kf, 6) if f.length == 5
                         else Fraction(kf, 3) if f.length == 6
                         else Fraction(3 * kf, 7))
                if sent < floor:
                    share_viol.append((f.id, kf, sent, floor))
            comp_bound = Fraction(d_outer - 3 * f3_prime - s_prime, 3)
            comp_holds = b >= comp_bound
            if not comp_holds:
                comp_viol = ((b, comp_bound),)
        checks.append(BoundCheck("g2-face-share-lower-bounds", applicable,
                                 (not share_viol) if applicable else None,
                                 tuple(share_viol)))
        checks.append(BoundCheck("g2-outer-compensation", applicable,
                                 comp_holds, comp_viol))
        # total sent by each 7+-face under R4 is at most 3/7 of its length
        carry_viol = []
        if tag.in_g2:
            sent_by_face: dict[int, Fraction] = {}
            for t in log.by_rule().get("R4", ()):
                sent_by_face[t.sender[1]] = (sent_by_face.get(t.sender[1],
                                                              Fraction(0))
                                             + t.amount)
            for fid, total in sent_by_face.items():
                if total > Fraction(3 * g.face(fid).length, 7):
                    carry_viol.append((fid, total))
        checks.append(BoundCheck("g2-edge-carry-bound", tag.in_g2,
                                 (not carry_viol) if tag.in_g2 else None,
                                 tuple(carry_viol)))

    return DischargingReport(
        ruleset_id=ruleset.id,
        initial=initial,
        final=final,
        log=log,
        negative_elements=negative,
        accounting=acct,
        bound_checks=checks,
        conservation_ok=conservation_ok,
        replay_ok=replay_ok,
        per_rule_balanced=per_rule,
        nonneg_with_positive_outer=combo)
