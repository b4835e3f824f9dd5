"""Simplicial complex composition and polyhedral product invariants.

Exact cohomology over F2 and Q, Hilbert-Poincare series of polyhedral
products from per-vertex pair data, composition rules for series,
multigraded Betti numbers and Stanley-Reisner generators, and an
independent cubical-model oracle.
"""

from .betti import (beta_compose, beta_polynomial, hochster_betti,
                    multigraded_betti)
from .complexes import (SimplicialComplex, all_complexes, boundary_complex,
                        build_complex, default_labels, empty_complex,
                        ghost_vertices, is_face, full_subcomplex,
                        link_restricted, simplex_complex, simplicial_join,
                        standard_complex)
from .joins import (JoinEntry, JoinSpec, LinkDecomposition, compose,
                    compose_member, join_spec_from_json_dict, link_decompose,
                    polyhedral_join)
from .oracle import (CubicalModel, random_complex, rmac_betti_poly,
                     rmac_model, verify_formula)
from .pairs import (PairAssignment, PairDecomposition, dims_from_json_dict,
                    pair_from_csc, pair_from_empty, pairs_from_json_dict,
                    preset_pair, validate_pair)
from .poly import MultiPoly, UniPoly
from .series import (bbcg_series, caa_series, csc_series, empty_series,
                     remark_series, splitting_check)
from .srings import minimal_nonfaces, sr_compose_generators, sr_ideal_member
from .topology import (ChainComplex, F2, Q, betti_numbers,
                       reduced_cohomology, simplicial_chain_complex,
                       suspended_series)

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex", "all_complexes", "boundary_complex", "build_complex",
    "default_labels", "empty_complex", "ghost_vertices", "is_face",
    "full_subcomplex", "link_restricted", "simplex_complex",
    "simplicial_join", "standard_complex",
    "JoinEntry", "JoinSpec", "LinkDecomposition", "compose", "compose_member",
    "join_spec_from_json_dict", "link_decompose", "polyhedral_join",
    "ChainComplex", "F2", "Q", "betti_numbers", "reduced_cohomology",
    "simplicial_chain_complex", "suspended_series",
    "PairAssignment", "PairDecomposition", "dims_from_json_dict",
    "pair_from_csc", "pair_from_empty", "pairs_from_json_dict", "preset_pair",
    "validate_pair",
    "bbcg_series", "caa_series", "csc_series", "empty_series", "remark_series",
    "splitting_check",
    "beta_compose", "beta_polynomial", "hochster_betti", "multigraded_betti",
    "minimal_nonfaces", "sr_compose_generators", "sr_ideal_member",
    "CubicalModel", "random_complex", "rmac_betti_poly", "rmac_model",
    "verify_formula",
    "MultiPoly", "UniPoly",
    "__version__",
]
