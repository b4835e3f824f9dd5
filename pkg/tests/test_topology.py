"""Chain complexes, exact cohomology over F2 and Q, suspended series."""

import pytest

from polyjoin import (ChainComplex, betti_numbers, boundary_complex,
                      build_complex, empty_complex, reduced_cohomology,
                      simplex_complex, simplicial_chain_complex,
                      suspended_series)
from polyjoin.linalg import SparseMatrix
from polyjoin.poly import UniPoly
from polyjoin.topology import series_of, validate_graded_dims


def test_zero_complex_betti():
    cc = ChainComplex("f2", [1], [])
    assert betti_numbers(cc) == [1]


def test_chain_complex_shape_validation():
    with pytest.raises(ValueError):
        ChainComplex("f2", [2, 3], [SparseMatrix(1, 3)])
    with pytest.raises(ValueError):
        ChainComplex("f2", [2, 3], [])


def test_simplicial_chain_complex_boundaries_square_to_zero():
    for K in (boundary_complex(3), build_complex("abc", [["a", "b"], ["b", "c"]])):
        for field in ("f2", "q"):
            assert simplicial_chain_complex(K, field).validate()


def test_sphere_betti_numbers():
    # boundary of the n-simplex is an (n-1)-sphere
    assert betti_numbers(simplicial_chain_complex(boundary_complex(3), "f2")) == [1, 0, 1]
    assert betti_numbers(simplicial_chain_complex(boundary_complex(4), "f2")) == [1, 0, 0, 1]
    assert betti_numbers(simplicial_chain_complex(boundary_complex(3), "q")) == [1, 0, 1]


def test_reduced_cohomology_circle():
    assert reduced_cohomology(boundary_complex(2), "f2") == {1: 1}
    assert reduced_cohomology(boundary_complex(2), "q") == {1: 1}


def test_reduced_cohomology_two_points():
    K = build_complex(["1", "2"], [["1"], ["2"]])
    assert reduced_cohomology(K, "f2") == {0: 1}


def test_reduced_cohomology_rp2(rp2):
    # torsion shows up over F2 only
    assert reduced_cohomology(rp2, "f2") == {1: 1, 2: 1}
    assert reduced_cohomology(rp2, "q") == {}


def test_reduced_cohomology_of_empty_complex_rejected():
    with pytest.raises(ValueError):
        reduced_cohomology(empty_complex(1), "f2")


def test_reduced_cohomology_ignores_ghosts():
    K = build_complex(["1", "2", "3"], [["1"], ["2"]])
    assert reduced_cohomology(K, "f2") == {0: 1}


def test_suspended_series():
    assert suspended_series(empty_complex(0), "f2") == UniPoly.one()
    assert suspended_series(empty_complex(3), "f2") == UniPoly.one()
    assert suspended_series(boundary_complex(1), "f2") == UniPoly.term(1)
    for n in (0, 1, 2):
        assert suspended_series(simplex_complex(n), "f2") == UniPoly.zero()


def test_suspended_series_cached_across_labelings():
    a = build_complex(["x", "y"], [["x"], ["y"]])
    b = build_complex(["p", "q", "r"], [["p"], ["r"]])  # ghost q
    assert suspended_series(a, "f2") == suspended_series(b, "f2")


def test_unknown_field_rejected():
    with pytest.raises(ValueError):
        reduced_cohomology(boundary_complex(2), "f3")


def test_validate_graded_dims():
    assert validate_graded_dims({"2": "1"}) == {2: 1}
    assert validate_graded_dims({}) == {}
    with pytest.raises(ValueError):
        validate_graded_dims({-1: 1})
    with pytest.raises(ValueError):
        validate_graded_dims({2: 0})


def test_series_of():
    assert series_of({0: 1, 4: 1}) == UniPoly({0: 1, 4: 1})
