"""Shared fixtures: the worked-example complexes and seeded random data."""

import random

import pytest

from polyjoin import (PairDecomposition, SimplicialComplex, empty_complex,
                      random_complex)

# 6-vertex triangulation of the real projective plane
RP2_TRIANGLES = (
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 6), (1, 5, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
)


def rp2_complex() -> SimplicialComplex:
    labels = tuple(str(i) for i in range(1, 7))
    faces = tuple(tuple(str(v) for v in t) for t in RP2_TRIANGLES)
    return SimplicialComplex(labels, faces, name="rp2")


def composed_example():
    """Base on three vertices with blocks of sizes 1, 1, 2; the composed
    complex has maximal faces {11,21,31},{11,21,32},{21,31,32}."""
    K = SimplicialComplex(("1", "2", "3"), (("1",), ("2", "3")))
    L1 = empty_complex(1, ("11",))
    L2 = SimplicialComplex(("21",), (("21",),))
    L3 = SimplicialComplex(("31", "32"), (("31",), ("32",)))
    return K, (L1, L2, L3)


def poincare_fixture():
    """Two ghost vertices with a one-point block and a two-point block;
    every vertex carries the pair B={0,4}, C={6}, E={2}."""
    K = empty_complex(2)
    L1 = SimplicialComplex(("11",), (("11",),))
    L2 = SimplicialComplex(("21", "22"), (("21",), ("22",)))
    pair = PairDecomposition({0: 1, 4: 1}, {6: 1}, {2: 1})
    return K, (L1, L2), pair


def random_pair(rng) -> PairDecomposition:
    b = {0: 1}
    if rng.random() < 0.7:
        b[rng.randint(1, 4)] = rng.randint(1, 2)
    c = {rng.randint(1, 5): rng.randint(1, 2)} if rng.random() < 0.8 else {}
    e = {rng.randint(1, 4): rng.randint(1, 2)} if rng.random() < 0.8 else {}
    return PairDecomposition(b, c, e)


def random_ghostfree(n, rng) -> SimplicialComplex:
    while True:
        K = random_complex(n, rng)
        if not K.ghost_vertices():
            return K


def random_setup(rng, ghostfree_blocks=False, max_base=3, max_block=2):
    """Random base, blocks with fresh labels, and a pair per block vertex."""
    K = random_complex(rng.randint(1, max_base), rng)
    make = random_ghostfree if ghostfree_blocks else random_complex
    blocks = []
    for k in range(K.n):
        size = rng.randint(1, max_block)
        L = make(size, rng)
        blocks.append(L.relabeled(tuple(f"b{k}v{j}" for j in range(size))))
    pair_table = {}
    for L in blocks:
        for lbl in L.labels:
            pair_table[lbl] = random_pair(rng)
    return K, blocks, pair_table


@pytest.fixture
def rng():
    return random.Random(20260819)


@pytest.fixture
def rp2():
    return rp2_complex()
