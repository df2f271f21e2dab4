"""Canonical forms for small abstract graphs (corpus deduplication)."""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence


def _refine(n: int, adj: Sequence[frozenset[int]]) -> list[int]:
    """Iterated neighbor-degree refinement; returns a color per vertex."""
    color = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(color[v], tuple(sorted(color[u] for u in adj[v])))
               for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == color:
            return color
        color = new


def canonical_certificate(n: int, edges: Iterable[tuple[int, int]]) -> tuple:
    """A label-independent certificate: equal iff the graphs are isomorphic.

    Exact (not a hash): vertices are bucketed by a degree refinement and
    the minimum edge list over all bucket-respecting relabelings is taken.
    Intended for n up to about 10.
    """
    es = {(min(u, v), max(u, v)) for u, v in edges}
    adj = [frozenset(v for u, v in es if u == w) | frozenset(u for u, v in es if v == w)
           for w in range(n)]
    color = _refine(n, adj)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(color[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    # positions each cell's vertices may occupy in the canonical order
    starts = []
    pos = 0
    for cell in ordered_cells:
        starts.append(pos)
        pos += len(cell)

    best: tuple | None = None
    for perms in itertools.product(*(itertools.permutations(c)
                                     for c in ordered_cells)):
        label = [0] * n
        for cell_perm, start in zip(perms, starts):
            for offset, v in enumerate(cell_perm):
                label[v] = start + offset
        cand = tuple(sorted((min(label[u], label[v]), max(label[u], label[v]))
                            for u, v in es))
        if best is None or cand < best:
            best = cand
    return (n, best if best is not None else ())


def connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def vertex_connectivity_at_least(n: int, edges: Iterable[tuple[int, int]],
                                 c: int) -> bool:
    """Brute-force check for small n: no cutset of fewer than c vertices."""
    es = list(edges)
    if not connected(n, es):
        return False
    if c <= 1:
        return True
    if n <= c:
        # complete graphs are the only graphs this size with no small cutset
        return len(es) == n * (n - 1) // 2
    for size in range(1, c):
        for cut in itertools.combinations(range(n), size):
            keep = [v for v in range(n) if v not in cut]
            idx = {v: i for i, v in enumerate(keep)}
            sub = [(idx[u], idx[v]) for u, v in es
                   if u not in cut and v not in cut]
            if not connected(len(keep), sub):
                return False
    return True
