"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The corpora come from the deterministic generator: every connected planar
graph on 3..6 vertices (exhaustive, one per isomorphism class) plus seeded
random samples at 7..9 vertices where a criterion calls for them.
"""

from __future__ import annotations

import random
import time

from dpcolor import (RULESET_G1, RULESET_G2, BudgetExceeded, audit,
                     bfs_tree_edges, chromatic, classify_cycle, cover_graph,
                     diagonal_cover, dp_chromatic, dp_colorable,
                     enumerate_cycles, find_transversal, full_cover,
                     list_chromatic, random_chooser, straighten,
                     survey_precoloring_extensions, verify_structural_lemmas)
from conftest import make_cycle
from oracles import count_transversals, list_colorable


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    state = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"CRITERION {num:02d} {state}: {name}{suffix}")


def _chosen_cycle(g, max_len: int, good_only: bool):
    cycles = enumerate_cycles(g, max_len)
    if good_only:
        cycles = [c for c in cycles if classify_cycle(g, c).is_good]
    if not cycles:
        return None
    return min(cycles, key=lambda c: (c.length, c.vertices)).vertices


def test_criterion_01_even_cycle_separation():
    """Even cycles: correspondence chromatic 3 vs list chromatic 2."""
    results = {}
    for n in (4, 6):
        g = make_cycle(n)
        t0 = time.monotonic()
        dp = dp_chromatic(g, 5)
        t_dp = time.monotonic() - t0
        t0 = time.monotonic()
        lc = list_chromatic(g, 5)
        t_lc = time.monotonic() - t0
        results[n] = (dp, lc, t_dp, t_lc)
    ok = all(dp == 3 and lc == 2 for dp, lc, _, _ in results.values())
    timing_ok = all(t_dp < 5.0 and t_lc < 5.0
                    for _, _, t_dp, t_lc in results.values())
    _report(1, "even-cycle separation (dp=3, list=2, each < 5 s)",
            ok and timing_ok,
            ", ".join(f"C{n}: dp={v[0]} list={v[1]}"
                      for n, v in results.items()))
    assert ok and timing_ok


def test_criterion_02_chain_inequality(corpus_n6):
    """chromatic <= list-chromatic <= correspondence-chromatic."""
    violations = []
    completed = 0
    for g in corpus_n6:
        try:
            chi = chromatic(g, 6)
            lst = list_chromatic(g, 6)
            dp = dp_chromatic(g, 6, budget=2_000_000)
        except BudgetExceeded:
            continue
        if chi is None or lst is None or dp is None:
            continue
        completed += 1
        if not (chi <= lst <= dp):
            violations.append((g.rotations, chi, lst, dp))
    ok = not violations and completed >= 100
    _report(2, "chain inequality on the n<=6 corpus", ok,
            f"{completed}/{len(corpus_n6)} completed, "
            f"{len(violations)} violations")
    assert ok, violations


def test_criterion_03_diagonal_cover_equivalence(corpus_n6, corpus_g1_n9):
    """Diagonal covers decide exactly like a list-coloring backtracker."""
    pool = corpus_n6 + [g for g in corpus_g1_n9 if g.vertex_count == 7]
    rng = random.Random(20240803)
    agree = checked = 0
    for _ in range(220):
        g = rng.choice(pool)
        lists = [tuple(sorted(rng.sample(range(1, 9),
                                         rng.randint(1, 4))))
                 for _ in range(g.vertex_count)]
        cov = diagonal_cover(g, lists)
        got = find_transversal(cover_graph(g, cov)) is not None
        adj = [g.neighbors(v) for v in range(g.vertex_count)]
        want = list_colorable(adj, lists)
        checked += 1
        agree += got == want
    ok = agree == checked >= 200
    _report(3, "diagonal-cover equivalence with list coloring", ok,
            f"{agree}/{checked} agree")
    assert ok


def test_criterion_04_straightening_bijection(corpus_n6):
    """Straightening a spanning tree never changes the transversal count."""
    rng = random.Random(20240804)
    graphs = [g for g in corpus_n6 if g.vertex_count <= 6]
    checked = equal = 0
    for _ in range(110):
        g = rng.choice(graphs)
        k = rng.randint(1, 3)
        cov = full_cover(g, k, random_chooser(rng.randrange(10 ** 9)))
        out, cert = straighten(g, cov, bfs_tree_edges(g))
        assert cert.verify(out)
        before = count_transversals(cov.lists, cov.matchings)
        after = count_transversals(out.lists, out.matchings)
        checked += 1
        equal += before == after
    ok = equal == checked >= 100
    _report(4, "straightening preserves transversal counts", ok,
            f"{equal}/{checked} equal")
    assert ok


def _extension_check(graphs, max_len: int, good_only: bool, seed: int):
    stats = {"exhaustive": 0, "sampled": 0, "skipped": 0}
    failures = []
    for g in graphs:
        cyc = _chosen_cycle(g, max_len, good_only)
        if cyc is None:
            stats["skipped"] += 1
            continue
        if g.vertex_count <= 6:
            survey = survey_precoloring_extensions(g, cyc, 4, "exhaustive")
            stats["exhaustive"] += 1
        else:
            survey = survey_precoloring_extensions(g, cyc, 4, "sampled",
                                                   samples=500, seed=seed)
            stats["sampled"] += 1
        if not survey.all_extendable:
            failures.append((g.rotations, cyc, len(survey.failures)))
    return stats, failures


def test_criterion_05_extension_from_short_cycles_g1(corpus_g1_n9):
    """Any precoloring of a short cycle extends (class g1, up to 9 vertices)."""
    seed = 20240805
    stats, failures = _extension_check(corpus_g1_n9, 7, False, seed)
    ok = not failures
    _report(5, "precoloring extension, g1 corpus", ok,
            f"exhaustive={stats['exhaustive']} sampled={stats['sampled']} "
            f"(seed={seed}) skipped={stats['skipped']} "
            f"failures={len(failures)}")
    assert ok, failures


def test_criterion_06_extension_from_good_cycles_g2(corpus_g2_n9):
    """Any precoloring of a good short cycle extends (class g2)."""
    seed = 20240806
    stats, failures = _extension_check(corpus_g2_n9, 8, True, seed)
    ok = not failures
    _report(6, "precoloring extension, g2 corpus", ok,
            f"exhaustive={stats['exhaustive']} sampled={stats['sampled']} "
            f"(seed={seed}) skipped={stats['skipped']} "
            f"failures={len(failures)}")
    assert ok, failures


def test_criterion_07_structural_lemma_suite(corpus_g1_n6, corpus_g2_n6):
    """Theorem-grade structural checks report no violation on class members.

    Checked literally as stated; see the assertion message for any graphs
    the checker flags, with re-verifiable witnesses.
    """
    violations = []
    for label, corpus, prefix in (("g1", corpus_g1_n6, "g1-"),
                                  ("g2", corpus_g2_n6, "g2-")):
        for g in corpus:
            for r in verify_structural_lemmas(g):
                if r.kind == "theorem" and r.check_id.startswith(prefix) \
                        and not r.holds:
                    violations.append((label, g.rotations, r.check_id,
                                       r.witnesses))
    ok = not violations
    _report(7, "structural checks hold corpus-wide", ok,
            f"{len(violations)} violations" if violations else "clean")
    by_check: dict[str, list] = {}
    for label, rot, check_id, witnesses in violations:
        by_check.setdefault(check_id, []).append((label, rot, witnesses))
    summary = "\n".join(
        f"  {check_id}: {len(items)} graphs, e.g. rotations={items[0][1]!r} "
        f"witnesses={items[0][2]!r:.120}"
        for check_id, items in sorted(by_check.items()))
    assert ok, (
        "structural theorem checks failed on class members whose vertex "
        "count is too small for the class constraint to bite (every witness "
        "re-verifies against the definitions; see the companion witness "
        "test):\n" + summary)


def test_criterion_07_witnesses_reverify(corpus_g1_n6, corpus_g2_n6):
    """Every violation the checker reports is a real configuration."""
    from dpcolor import find_triangle_patches
    for corpus in (corpus_g1_n6, corpus_g2_n6):
        for g in corpus:
            patches = {p.face_ids: p for p in find_triangle_patches(g)}
            for r in verify_structural_lemmas(g):
                if r.holds:
                    continue
                if r.check_id.endswith("no-triangle-patch-3plus"):
                    for patch in r.witnesses:
                        assert patch.size >= 3
                        assert patches[patch.face_ids].size == patch.size
                if r.check_id.endswith("patch-edge-face-profile"):
                    for _, (u, v), profile in r.witnesses:
                        f1, f2 = g.faces_at_edge(u, v)
                        assert sorted((g.face(f1).length,
                                       g.face(f2).length)) == list(profile)


def test_criterion_08_discharging_conservation(corpus_n6, corpus_g1_n9):
    """Exact conservation, balance, and bit-exact replay, both rulesets."""
    extra = [g for g in corpus_g1_n9 if g.vertex_count > 6][:10]
    bad = []
    for g in corpus_n6 + extra:
        for ruleset in (RULESET_G1, RULESET_G2):
            rep = audit(g, ruleset)
            if not (rep.conservation_ok and rep.replay_ok
                    and rep.per_rule_balanced):
                bad.append((g.rotations, ruleset.id))
    ok = not bad
    _report(8, "discharging conservation / replay / balance", ok,
            f"{(len(corpus_n6) + len(extra)) * 2} runs")
    assert ok, bad


def test_criterion_09_no_positive_total_contradiction(corpus_n6):
    """Never 'all elements nonnegative' together with positive outer charge."""
    occurrences = []
    for g in corpus_n6:
        for ruleset in (RULESET_G1, RULESET_G2):
            rep = audit(g, ruleset)
            if rep.nonneg_with_positive_outer:
                occurrences.append((g.rotations, ruleset.id))
    ok = not occurrences
    _report(9, "conservation forbids all-nonnegative with positive outer",
            ok, f"{len(corpus_n6) * 2} audits")
    assert ok, occurrences


def test_criterion_10_forbidden_cycle_length_colorability(corpus_n6):
    """Graphs lacking any k-cycle (k=3..6) are 4-correspondence-colorable."""
    failures = []
    checked = 0
    for k in (3, 4, 5, 6):
        for g in corpus_n6:
            if any(c.length == k for c in enumerate_cycles(g, k)):
                continue
            verdict = dp_colorable(g, 4, "exhaustive")
            checked += 1
            if not verdict.all_colorable:
                failures.append((k, g.rotations,
                                 verdict.counterexample.matchings))
    ok = not failures
    _report(10, "no-k-cycle graphs are 4-correspondence-colorable", ok,
            f"{checked} exhaustive sweeps, {len(failures)} failures")
    assert ok, failures
