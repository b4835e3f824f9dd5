"""Multigraded Betti numbers and their behaviour under composition.

The bigraded tables live in a polynomial in s and squarefree vertex
variables t[v]; one monomial s^i * t[J] per (degree, support) pair. The
composition rule substitutes each base variable by the reduced polynomial
of its block, which is exact because every monomial is squarefree.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, submasks
from .pairs import dims_assignment
from .poly import MultiPoly, UniPoly
from .topology import (F2, normalize_field, reduced_cohomology, series_of,
                       suspended_series)


def _support_series(K: SimplicialComplex, jmask: int, dims_spec,
                    field: str) -> UniPoly:
    """susp(K|_J) times the per-vertex series of the chosen dimensions."""
    sub = K.full_subcomplex_mask(jmask)
    poly = suspended_series(sub, field)
    for dims in dims_assignment(sub.labels, dims_spec):
        poly = poly * series_of(dims)
        if poly.is_zero():
            break
    return poly


def multigraded_betti(K: SimplicialComplex, dims_spec, i: int, J,
                      field: str = F2) -> int:
    """Rank in degree i at support J of Z_K(CA, A), from the A dimensions.

    The empty support carries exactly the unit: 1 at i = 0, else 0.
    """
    field = normalize_field(field)
    jmask = K.mask_of(J)
    if jmask == 0:
        return 1 if i == 0 else 0
    return _support_series(K, jmask, dims_spec, field).coeff(i)


def beta_polynomial(K: SimplicialComplex, dims_spec, field: str = F2,
                    reduced: bool = False) -> MultiPoly:
    """All multigraded Betti numbers of K as Σ β^{i,J} s^i t[J].

    The reduced polynomial omits the empty support (the unit term).
    """
    field = normalize_field(field)
    total = MultiPoly.zero()
    for jmask in submasks(K.full_mask):
        if jmask == 0:
            if not reduced:
                total = total + 1
            continue
        poly = _support_series(K, jmask, dims_spec, field)
        tvars = K.labels_of(jmask)
        for e, v in poly.c.items():
            total = total + MultiPoly.term(e, tvars, v)
    return total


def beta_compose(K: SimplicialComplex, inserted, dims_spec,
                 field: str = F2) -> MultiPoly:
    """Beta polynomial of the composed complex by substitution.

    Each base variable t[k] is replaced by the reduced beta polynomial of
    its block; the base polynomial is taken with trivial per-vertex data
    so its s-grading records only the suspended subcomplex cohomology.
    """
    field = normalize_field(field)
    if len(inserted) != K.n:
        raise ValueError(f"base complex has {K.n} vertices but "
                         f"{len(inserted)} block complexes were given")
    outer = beta_polynomial(K, {0: 1}, field)
    replacements = {K.labels[k]: beta_polynomial(L, dims_spec, field, reduced=True)
                    for k, L in enumerate(inserted)}
    return outer.substitute(replacements)


def hochster_betti(K: SimplicialComplex, i: int, J, field: str = F2) -> int:
    """Algebraic Betti number β_{i,J} of the face ring: the rank of the
    reduced cohomology of K|_J in degree |J| - i - 1."""
    field = normalize_field(field)
    jmask = K.mask_of(J)
    sub = K.full_subcomplex_mask(jmask)
    d = jmask.bit_count() - i - 1
    if not sub.maximal:
        return 1 if d == -1 else 0
    if d < 0:
        return 0
    return reduced_cohomology(sub, field).get(d, 0)
