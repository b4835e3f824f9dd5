"""Independent brute-force check: the cubical model of Z_K(D¹, S⁰).

The real coordinate subspace arrangement complement deformation retracts
onto a cube complex with one cell per pair (σ, ε), where σ is a face of K
and ε picks an endpoint ±1 in every coordinate outside σ. Its boundary
map touches no simplicial algebra from the rest of the package, so
matching Betti numbers against the series engine is a genuine
cross-check, not a tautology.

Cell counts grow like 3^m, so the model refuses ground sets beyond a
configurable vertex limit.
"""

from __future__ import annotations

import os

from .complexes import SimplicialComplex, bits_of, default_labels, submasks
from .linalg import SparseMatrix
from .pairs import preset_pair
from .poly import UniPoly
from .series import bbcg_series
from .topology import ChainComplex, F2, betti_numbers, normalize_field

DEFAULT_MAX_VERTICES = 16
ENV_MAX_VERTICES = "POLYJOIN_MAX_VERTICES"


def vertex_limit() -> int:
    """Current cell-count guard, re-read from the environment on each call."""
    raw = os.environ.get(ENV_MAX_VERTICES, "").strip()
    return int(raw) if raw else DEFAULT_MAX_VERTICES


class CubicalModel:
    """Cube cells of Z_K(D¹, S⁰) plus their cellular chain complex."""

    __slots__ = ("complex", "field", "cells", "chain")

    def __init__(self, complex: SimplicialComplex, field: str,
                 cells, chain: ChainComplex):
        self.complex = complex
        self.field = field
        self.cells = cells
        self.chain = chain

    def cell_count(self) -> int:
        return sum(len(layer) for layer in self.cells)

    def betti_numbers(self) -> list[int]:
        # Betti numbers of the space: trailing zero ranks of the chain
        # complex carry no information and are dropped
        ranks = betti_numbers(self.chain)
        while len(ranks) > 1 and ranks[-1] == 0:
            ranks.pop()
        return ranks

    def betti_poly(self) -> UniPoly:
        return UniPoly({d: b for d, b in enumerate(self.betti_numbers()) if b})


def rmac_model(K: SimplicialComplex, field: str = F2) -> CubicalModel:
    """Build the cube complex cell by cell. Dimension of (σ, ε) is |σ|;
    the boundary replaces one σ-coordinate by its two endpoints."""
    field = normalize_field(field)
    limit = vertex_limit()
    if K.n > limit:
        raise ValueError(f"{K.n} vertices exceed the cubical model limit "
                         f"{limit}; raise {ENV_MAX_VERTICES} to override")
    full = K.full_mask
    top = K.dim + 1
    cells: list[list[tuple[int, int]]] = [[] for _ in range(top + 1)]
    for sigma in K.face_masks():
        comp = full & ~sigma
        d = sigma.bit_count()
        for eps in submasks(comp):
            cells[d].append((sigma, eps))
    index = [{cell: i for i, cell in enumerate(layer)} for layer in cells]
    boundaries = []
    for d in range(top):
        mat = SparseMatrix(len(cells[d]), len(cells[d + 1]))
        for j, (sigma, eps) in enumerate(cells[d + 1]):
            for i, p in enumerate(bits_of(sigma)):
                sign = -1 if i & 1 else 1
                low = sigma ^ (1 << p)
                mat.add(index[d][(low, eps | (1 << p))], j, sign)
                mat.add(index[d][(low, eps)], j, -sign)
        boundaries.append(mat)
    dims = [len(layer) for layer in cells]
    return CubicalModel(K, field, cells, ChainComplex(field, dims, boundaries))


def rmac_betti_poly(K: SimplicialComplex, field: str = F2) -> UniPoly:
    """Betti numbers of Z_K(D¹, S⁰) as a polynomial in t."""
    return rmac_model(K, field).betti_poly()


def verify_formula(K: SimplicialComplex, field: str = F2) -> bool:
    """Cubical Betti numbers == series engine with the (D¹, S⁰) pair."""
    field = normalize_field(field)
    direct = rmac_betti_poly(K, field)
    predicted = bbcg_series(K, preset_pair("interval_s0"), "full", field)
    return direct == predicted


def random_complex(n: int, rng) -> SimplicialComplex:
    """Random complex on n labeled vertices with at least one vertex used."""
    if n < 1:
        raise ValueError("need at least one vertex")
    count = rng.randint(1, max(2, 2 * n))
    masks = [rng.randrange(1, 1 << n) for _ in range(count)]
    return SimplicialComplex.from_masks(default_labels(n), masks)
