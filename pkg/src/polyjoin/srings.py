"""Stanley-Reisner ideal generators and how they compose.

The face ideal of a complex is generated by the squarefree monomials of
its minimal non-faces (ghost vertices count: their singletons are minimal
non-faces). Composition multiplies out: pick a minimal non-face of the
base, replace each of its vertices by a minimal non-face of that block,
take the union, and keep the inclusion-minimal results.
"""

from __future__ import annotations

import itertools

from .complexes import SimplicialComplex, bits_of
from .joins import _block_owner


def _sorted_masks(masks) -> list[int]:
    return sorted(set(masks), key=lambda m: (m.bit_count(), tuple(bits_of(m))))


def _minimal(masks) -> list[int]:
    distinct = set(masks)
    kept = [m for m in distinct
            if not any(m != other and m & other == other for other in distinct)]
    return _sorted_masks(kept)


def _minimal_nonface_masks(K: SimplicialComplex) -> list[int]:
    out = []
    for mask in range(1, K.full_mask + 1):
        if K.is_face_mask(mask):
            continue
        if all(K.is_face_mask(mask ^ (1 << p)) for p in bits_of(mask)):
            out.append(mask)
    return _sorted_masks(out)


def minimal_nonfaces(K: SimplicialComplex) -> list[tuple[str, ...]]:
    """Minimal non-faces as label tuples, sorted by size then position."""
    return [K.labels_of(m) for m in _minimal_nonface_masks(K)]


def sr_ideal_member(K: SimplicialComplex, s) -> bool:
    """True iff the squarefree monomial on s lies in the face ideal."""
    return not K.is_face(s)


def sr_compose_generators(K: SimplicialComplex, inserted) -> list[tuple[str, ...]]:
    """Minimal non-faces of the composed complex, computed without it.

    Every union of one minimal non-face per chosen block over a minimal
    non-face of the base is a non-face of the composition; the minimal
    ones among those are exactly the composed generators.
    """
    inserted = tuple(inserted)
    if len(inserted) != K.n:
        raise ValueError(f"base complex has {K.n} vertices but "
                         f"{len(inserted)} block complexes were given")
    _block_owner(inserted)  # rejects label collisions across blocks
    offsets = []
    labels: list[str] = []
    for L in inserted:
        offsets.append(len(labels))
        labels.extend(L.labels)
    block_min = [_minimal_nonface_masks(L) for L in inserted]
    unions = []
    for nmask in _minimal_nonface_masks(K):
        chosen = list(bits_of(nmask))
        if any(not block_min[i] for i in chosen):
            continue
        for picks in itertools.product(*(block_min[i] for i in chosen)):
            u = 0
            for i, part in zip(chosen, picks):
                u |= part << offsets[i]
            unions.append(u)
    return [tuple(labels[p] for p in bits_of(m)) for m in _minimal(unions)]
