"""Series engines: one-level sums, composed blocks, cone pairs, splitting."""

import pytest

from conftest import composed_example, poincare_fixture

from polyjoin import (JoinEntry, JoinSpec, PairDecomposition, bbcg_series,
                      boundary_complex, caa_series, compose, csc_series,
                      empty_complex, empty_series, pair_from_empty,
                      polyhedral_join, preset_pair, remark_series,
                      rmac_betti_poly, simplex_complex, splitting_check)
from polyjoin.poly import UniPoly

S0 = preset_pair("interval_s0")
POINCARE_VALUE = UniPoly({9: 1, 11: 1, 12: 3, 14: 5, 16: 2})


def test_bbcg_sphere():
    # boundary of the triangle with (D^1, S^0): the 3-cube boundary, S^2
    got = bbcg_series(boundary_complex(2), S0)
    assert got == UniPoly({0: 1, 2: 1})
    assert bbcg_series(boundary_complex(2), S0, "full", "q") == got


def test_bbcg_ghost_vertex_gives_b_plus_e():
    pair = PairDecomposition({0: 1, 3: 2}, {5: 1}, {2: 1})
    got = bbcg_series(empty_complex(1), pair)
    assert got == pair.b_series() + pair.e_series()


def test_bbcg_smash_fixture():
    K, blocks, pair = poincare_fixture()
    composed = compose(K, *blocks)
    assert bbcg_series(composed, pair, "smash") == POINCARE_VALUE


def test_bbcg_rejects_unknown_mode():
    with pytest.raises(ValueError):
        bbcg_series(boundary_complex(1), S0, "bogus")


def test_csc_matches_composed_complex():
    K, blocks, pair = poincare_fixture()
    composed = compose(K, *blocks)
    for mode in ("full", "smash"):
        assert csc_series(K, blocks, pair, mode) == bbcg_series(composed, pair, mode)
    assert csc_series(K, blocks, pair, "smash") == POINCARE_VALUE


def test_csc_edge_boundary_blocks():
    # two-point base with two-point blocks composes to the boundary of the
    # tetrahedron; with (D^1, S^0) that reads as the 4-cube boundary S^3
    K = boundary_complex(1)
    blocks = (boundary_complex(1, ("11", "12")), boundary_complex(1, ("21", "22")))
    got = csc_series(K, blocks, S0)
    assert got == UniPoly({0: 1, 3: 1})
    assert got == bbcg_series(compose(K, *blocks), S0)


def test_csc_single_vertex_base_is_product():
    # the composed complex of a one-vertex base is the full simplex on the
    # block, so the series is the product of the P(B)+P(C) factors
    K, blocks, pair = poincare_fixture()
    got = csc_series(simplex_complex(0), (blocks[1],), pair)
    factor = pair.b_series() + pair.c_series()
    assert got == factor * factor


def test_csc_arity_mismatch():
    with pytest.raises(ValueError):
        csc_series(boundary_complex(1), (boundary_complex(1, ("11", "12")),), S0)


def test_empty_point_base():
    # one present vertex, block two points: the join is just the block, and
    # the real moment-angle complex over two points is the circle
    K = simplex_complex(0)
    blocks = (boundary_complex(1, ("11", "12")),)
    expected = UniPoly({0: 1, 1: 1})
    for route in ("pairs", "expanded", "join"):
        assert empty_series(K, blocks, S0, route=route) == expected


def test_empty_ghost_base_is_product_of_bottoms():
    # a ghost base vertex keeps only the bottom complexes: everything is
    # outside, so each block vertex contributes P(B)+P(E)
    K = empty_complex(1)
    blocks = (boundary_complex(1, ("11", "12")),)
    got = empty_series(K, blocks, S0)
    assert got == UniPoly({0: 4})
    derived = pair_from_empty(blocks[0], S0)
    assert derived.B == {0: 1}
    assert got == bbcg_series(K, {"1": derived})


def test_empty_routes_agree_with_join_oracle():
    K = boundary_complex(1)
    blocks = (boundary_complex(1, ("11", "12")), boundary_complex(1, ("21", "22")))
    spec = JoinSpec(K, tuple(JoinEntry.empty_bottom(L) for L in blocks))
    joined = polyhedral_join(spec)
    expected = rmac_betti_poly(joined)
    for route in ("pairs", "expanded", "join"):
        assert empty_series(K, blocks, S0, route=route) == expected


def test_empty_rejects_unknown_route():
    with pytest.raises(ValueError):
        empty_series(simplex_complex(0), (boundary_complex(1, ("11", "12")),),
                     S0, route="bogus")


def test_empty_expanded_rejects_ghost_blocks():
    with pytest.raises(ValueError):
        empty_series(simplex_complex(0), (empty_complex(1, ("11",)),),
                     S0, route="expanded")


def test_caa_composed_example():
    K, blocks = composed_example()
    assert caa_series(K, blocks, {2: 1}, reduced=True) == UniPoly({8: 1})
    assert caa_series(K, blocks, {2: 1}) == UniPoly({0: 1, 8: 1})


def test_caa_ghost_base_edge_block():
    # one ghost base vertex with a two-point block and A = S^0
    K = empty_complex(1)
    blocks = (boundary_complex(1, ("11", "12")),)
    assert caa_series(K, blocks, {0: 1}, reduced=True) == UniPoly({1: 1})


def test_caa_empty_spaces_vanish():
    K, blocks = composed_example()
    assert caa_series(K, blocks, {}, reduced=True) == UniPoly.zero()


def test_remark_matches_caa():
    K, blocks = composed_example()
    assert remark_series(K, blocks, {2: 1}) == UniPoly({8: 1})
    K2 = empty_complex(1)
    blocks2 = (boundary_complex(1, ("11", "12")),)
    assert remark_series(K2, blocks2, {0: 1}) == UniPoly({1: 1})


def test_remark_full_simplex_blocks_vanish():
    # cones over full simplices are contractible, so every block factor is 0
    K = boundary_complex(1)
    blocks = (simplex_complex(0, ("11",)), simplex_complex(1, ("21", "22")))
    assert remark_series(K, blocks, {3: 1}) == UniPoly.zero()


def test_splitting_examples():
    assert splitting_check(boundary_complex(2), S0)
    K, blocks, pair = poincare_fixture()
    assert splitting_check(compose(K, *blocks), pair)
    assert splitting_check(empty_complex(2), pair)
