"""Multigraded Betti numbers, beta polynomials, and their composition."""

from conftest import composed_example

from polyjoin import (beta_compose, beta_polynomial, boundary_complex,
                      compose, empty_complex, hochster_betti,
                      multigraded_betti, simplex_complex)
from polyjoin.poly import MultiPoly


def test_multigraded_composed_example():
    K, blocks = composed_example()
    composed = compose(K, *blocks)
    assert multigraded_betti(composed, {2: 1}, 8, ("11", "31", "32")) == 1
    assert multigraded_betti(composed, {2: 1}, 0, ()) == 1
    assert multigraded_betti(composed, {2: 1}, 3, ()) == 0
    assert multigraded_betti(composed, {2: 1}, 7, ("11", "31", "32")) == 0


def test_multigraded_edge_boundary():
    assert multigraded_betti(boundary_complex(1), {0: 1}, 1, ("1", "2")) == 1


def test_beta_polynomial_composed_example():
    K, blocks = composed_example()
    composed = compose(K, *blocks)
    expected = MultiPoly({(0, ()): 1, (8, ("11", "31", "32")): 1})
    assert beta_polynomial(composed, {2: 1}) == expected
    assert str(beta_polynomial(composed, {2: 1})) == "1 + s^8*t[11]*t[31]*t[32]"


def test_beta_polynomial_block_reduced():
    _, blocks = composed_example()
    got = beta_polynomial(blocks[2], {2: 1}, reduced=True)
    assert got == MultiPoly({(5, ("31", "32")): 1})


def test_beta_polynomial_full_simplex_is_unit():
    for n in range(3):
        assert beta_polynomial(simplex_complex(n), {4: 2}) == MultiPoly.one()


def test_beta_compose_matches_direct():
    K, blocks = composed_example()
    direct = beta_polynomial(compose(K, *blocks), {2: 1})
    assert beta_compose(K, blocks, {2: 1}) == direct
    assert direct == MultiPoly({(0, ()): 1, (8, ("11", "31", "32")): 1})


def test_beta_compose_simplex_base_is_unit():
    blocks = (boundary_complex(1, ("11", "12")), boundary_complex(1, ("21", "22")))
    assert beta_compose(simplex_complex(1), blocks, {0: 1}) == MultiPoly.one()


def test_beta_compose_ghost_base_passes_block_through():
    # one ghost base vertex: the composed complex is the block itself
    K = empty_complex(1)
    block = boundary_complex(1, ("11", "12"))
    got = beta_compose(K, (block,), {0: 1})
    assert got == beta_polynomial(block, {0: 1})


def test_hochster_examples():
    assert hochster_betti(boundary_complex(1), 1, ("1", "2")) == 1
    assert hochster_betti(boundary_complex(1), 0, ()) == 1
    assert hochster_betti(boundary_complex(2), 1, ("1", "2", "3")) == 1
    assert hochster_betti(boundary_complex(2), 1, ("1", "2")) == 0


def test_hochster_bridges_multigraded():
    # with trivial one-point data the two gradings are reindexings of each
    # other: beta_{i,J} of the face ring vs rank at |J|-i in the other table
    K = boundary_complex(2)
    for jmask in range(K.full_mask + 1):
        J = K.labels_of(jmask)
        for d in range(len(J) + 1):
            assert multigraded_betti(K, {0: 1}, d, J) == \
                hochster_betti(K, len(J) - d, J)
