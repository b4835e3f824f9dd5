"""Exact simplicial (co)homology over F2 or Q, and the suspended series.

Graded dimensions are plain dicts degree -> positive rank. The suspended
series of a complex with no nonempty faces is the constant 1, which encodes
the reduced cohomology of the suspension of the empty space; every formula
downstream relies on that convention.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, bits_of
from .linalg import SparseMatrix
from .poly import UniPoly

F2 = "f2"
Q = "q"
FIELDS = (F2, Q)


def normalize_field(f: str) -> str:
    name = str(f).lower()
    if name in FIELDS:
        return name
    raise ValueError(f"unknown field {f!r}; expected one of {FIELDS}")


class ChainComplex:
    """Chain complex over a field: boundaries[d] maps degree d+1 to degree d."""

    __slots__ = ("field", "dims", "boundaries")

    def __init__(self, field: str, dims, boundaries):
        self.field = normalize_field(field)
        self.dims = [int(d) for d in dims]
        if any(d < 0 for d in self.dims):
            raise ValueError("negative rank")
        self.boundaries = list(boundaries)
        if len(self.boundaries) != max(len(self.dims) - 1, 0):
            raise ValueError("boundary count does not match dims")
        for d, mat in enumerate(self.boundaries):
            if mat.nrows != self.dims[d] or mat.ncols != self.dims[d + 1]:
                raise ValueError(f"boundary {d} has shape "
                                 f"{(mat.nrows, mat.ncols)}, dims expect "
                                 f"{(self.dims[d], self.dims[d + 1])}")

    def validate(self) -> bool:
        """True iff consecutive boundaries compose to zero."""
        for d in range(len(self.boundaries) - 1):
            if not self.boundaries[d].compose(self.boundaries[d + 1]).is_zero(self.field):
                return False
        return True


def betti_numbers(cc: ChainComplex) -> list[int]:
    """Homology ranks by degree: dim ker minus rank of the incoming boundary."""
    ranks = [mat.rank(cc.field) for mat in cc.boundaries]
    out = []
    for d, n in enumerate(cc.dims):
        below = ranks[d - 1] if d >= 1 else 0
        above = ranks[d] if d < len(ranks) else 0
        out.append(n - below - above)
    return out


def _faces_by_cardinality(K: SimplicialComplex) -> list[list[int]]:
    """Face masks grouped by cardinality, starting at 1 (vertices in faces)."""
    grouped: list[list[int]] = [[] for _ in range(K.dim + 2)]
    for mask in K.face_masks():
        if mask:
            grouped[mask.bit_count()].append(mask)
    return grouped[1:]


def _boundary_matrix(field: str, low: list[int], high: list[int]) -> SparseMatrix:
    """Signed boundary from cardinality k+1 faces to cardinality k faces."""
    index = {mask: i for i, mask in enumerate(low)}
    mat = SparseMatrix(len(low), len(high))
    for j, mask in enumerate(high):
        for i, pos in enumerate(bits_of(mask)):
            mat.add(index[mask ^ (1 << pos)], j, -1 if i & 1 else 1)
    return mat


def simplicial_chain_complex(K: SimplicialComplex, field: str) -> ChainComplex:
    """Unreduced simplicial chain complex on the non-ghost part of K."""
    field = normalize_field(field)
    grouped = _faces_by_cardinality(K)
    dims = [len(g) for g in grouped]
    boundaries = [_boundary_matrix(field, grouped[k], grouped[k + 1])
                  for k in range(len(grouped) - 1)]
    return ChainComplex(field, dims, boundaries)


_cohomology_cache: dict[tuple, dict[int, int]] = {}


def reduced_cohomology(K: SimplicialComplex, field: str) -> dict[int, int]:
    """Reduced cohomology ranks of |K| over the field, as {degree: rank}.

    Ghost vertices are ignored. The complex {∅} has no realization to take
    cohomology of; suspended_series owns that convention, so it is rejected
    here.
    """
    field = normalize_field(field)
    if not K.maximal:
        raise ValueError("reduced cohomology of the complex {∅} is undefined; "
                         "use suspended_series")
    key = (K.topology_key(), field)
    cached = _cohomology_cache.get(key)
    if cached is not None:
        return dict(cached)
    # Augmented complex: the empty face sits alone in cardinality 0, and the
    # boundary of every vertex is the empty face. Over a field the cohomology
    # ranks equal the homology ranks, so only boundary ranks are needed.
    grouped = [[0]] + _faces_by_cardinality(K)
    counts = [len(g) for g in grouped]
    ranks = [_boundary_matrix(field, grouped[k], grouped[k + 1]).rank(field)
             for k in range(len(grouped) - 1)]
    ranks.append(0)
    out = {}
    for d in range(len(grouped) - 1):
        r = counts[d + 1] - ranks[d] - ranks[d + 1]
        if r:
            out[d] = r
    _cohomology_cache[key] = dict(out)
    return out


_suspended_cache: dict[tuple, UniPoly] = {}


def suspended_series(K: SimplicialComplex, field: str) -> UniPoly:
    """Poincaré series of the reduced cohomology of the suspension of |K|.

    A complex with no nonempty faces contributes the constant 1; otherwise
    the result is t times the reduced Poincaré series of |K|.
    """
    field = normalize_field(field)
    if not K.maximal:
        return UniPoly.one()
    key = (K.topology_key(), field)
    cached = _suspended_cache.get(key)
    if cached is None:
        cached = UniPoly({d + 1: r for d, r in reduced_cohomology(K, field).items()})
        _suspended_cache[key] = cached
    return cached


def validate_graded_dims(dims) -> dict[int, int]:
    """Coerce and check a sparse degree -> rank table."""
    out = {}
    for deg, rank in dict(dims).items():
        deg = int(deg)
        rank = int(rank)
        if deg < 0:
            raise ValueError(f"negative degree {deg}")
        if rank <= 0:
            raise ValueError(f"non-positive rank {rank} at degree {deg}")
        out[deg] = rank
    return out


def series_of(dims) -> UniPoly:
    """Poincaré series of a graded dimension table."""
    return UniPoly(dict(dims))
