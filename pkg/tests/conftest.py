"""Shared fixtures: small named graphs and session-cached corpora."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dpcolor import CorpusSpec, build_from_rotation, corpus_generate


def cycle_rotations(n):
    return [((v - 1) % n, (v + 1) % n) for v in range(n)]


def make_cycle(n):
    return build_from_rotation(n, cycle_rotations(n))


@pytest.fixture(scope="session")
def c4():
    return make_cycle(4)


@pytest.fixture(scope="session")
def c5():
    return make_cycle(5)


@pytest.fixture(scope="session")
def c6():
    return make_cycle(6)


@pytest.fixture(scope="session")
def c7():
    return make_cycle(7)


@pytest.fixture(scope="session")
def k4():
    return build_from_rotation(4, [(1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2)])


@pytest.fixture(scope="session")
def k4_minus_edge():
    # triangles 0,1,2 and 0,1,3 sharing edge 01; outer quad 2-0-3-1
    return build_from_rotation(4, [(2, 1, 3), (3, 0, 2), (0, 1), (1, 0)])


@pytest.fixture(scope="session")
def w4():
    # rim 0..3, hub 4; outer face is the rim
    return build_from_rotation(
        5, [(1, 4, 3), (2, 4, 0), (3, 4, 1), (0, 4, 2), (0, 1, 2, 3)])


@pytest.fixture(scope="session")
def octahedron():
    return build_from_rotation(6, [
        (1, 2, 3, 4), (0, 4, 5, 2), (0, 1, 5, 3), (0, 2, 5, 4),
        (0, 3, 5, 1), (1, 4, 3, 2)])


@pytest.fixture(scope="session")
def single_edge():
    return build_from_rotation(2, [(1,), (0,)])


@pytest.fixture(scope="session")
def k1():
    return build_from_rotation(1, [()])


@pytest.fixture(scope="session")
def hex_prism():
    # two hexagons 0..5 (outer) and 6..11 (inner), vertical edges i -> i+6
    rot = []
    for v in range(6):
        rot.append(((v - 1) % 6, (v + 1) % 6, v + 6))
    for v in range(6):
        base = v
        rot.append((base, 6 + (v + 1) % 6, 6 + (v - 1) % 6))
    return build_from_rotation(12, rot, outer_face_hint=list(range(6)))


@pytest.fixture(scope="session")
def corpus_n6():
    """Every connected planar graph with 3..6 vertices, embedded."""
    return list(corpus_generate(CorpusSpec(3, 6)))


@pytest.fixture(scope="session")
def corpus_g1_n6(corpus_n6):
    from dpcolor import class_membership
    return [g for g in corpus_n6 if class_membership(g).in_g1]


@pytest.fixture(scope="session")
def corpus_g2_n6(corpus_n6):
    from dpcolor import class_membership
    return [g for g in corpus_n6 if class_membership(g).in_g2]


@pytest.fixture(scope="session")
def corpus_g1_n9():
    """Exhaustive through n=6 plus seeded random samples for n=7..9."""
    return list(corpus_generate(CorpusSpec(3, 9, "g1", seed=20240801,
                                           per_size_samples=8)))


@pytest.fixture(scope="session")
def corpus_g2_n9():
    return list(corpus_generate(CorpusSpec(3, 9, "g2", seed=20240802,
                                           per_size_samples=8)))
