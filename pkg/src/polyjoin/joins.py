"""Polyhedral joins, compositions, and link factorization for compositions.

A join instance assigns every vertex i of a base complex K a pair of
complexes (top_i, bottom_i) on one ground set, bottom_i a subcomplex of
top_i. The joined complex lives on the concatenation of the entry ground
sets; a face takes its block-i part from top_i when i lies in the chosen
face of K and from bottom_i otherwise. Compositions are the special case
where every top is a full simplex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import (SimplicialComplex, bits_of, empty_complex,
                        simplex_complex)
from .poly import UniPoly
from .topology import suspended_series

KIND_SIMPLEX_TOP = "simplex_top"
KIND_EMPTY_BOTTOM = "empty_bottom"
KIND_GENERAL = "general"


@dataclass(frozen=True)
class JoinEntry:
    """One block of a join instance: a complex and a subcomplex of it."""

    kind: str
    top: SimplicialComplex
    bottom: SimplicialComplex

    @classmethod
    def simplex_top(cls, inserted: SimplicialComplex) -> "JoinEntry":
        """Block whose top is the full simplex over the inserted complex."""
        if not inserted.labels:
            raise ValueError("a join block needs at least one vertex")
        top = simplex_complex(len(inserted.labels) - 1, inserted.labels)
        return cls(KIND_SIMPLEX_TOP, top, inserted)

    @classmethod
    def empty_bottom(cls, top: SimplicialComplex) -> "JoinEntry":
        """Block whose bottom is {∅} on the top complex's ground set."""
        if not top.labels:
            raise ValueError("a join block needs at least one vertex")
        return cls(KIND_EMPTY_BOTTOM, top, empty_complex(len(top.labels), top.labels))

    @classmethod
    def general(cls, top: SimplicialComplex, bottom: SimplicialComplex) -> "JoinEntry":
        entry = cls(KIND_GENERAL, top, bottom)
        entry.check()
        return entry

    def check(self) -> None:
        if not self.top.labels:
            raise ValueError("a join block needs at least one vertex")
        if self.top.labels != self.bottom.labels:
            raise ValueError("join entry complexes must share one ground set")
        for mask in self.bottom.maximal:
            if not self.top.is_face_mask(mask):
                raise ValueError(
                    f"{self.bottom.labels_of(mask)!r} is a face of the bottom "
                    "complex but not of the top complex")


@dataclass(frozen=True)
class JoinSpec:
    """Base complex plus one JoinEntry per base vertex, in label order."""

    base: SimplicialComplex
    entries: tuple[JoinEntry, ...]

    def check(self) -> None:
        if len(self.entries) != self.base.n:
            raise ValueError(f"base complex has {self.base.n} vertices but "
                             f"{len(self.entries)} join entries were given")
        for entry in self.entries:
            entry.check()
        seen: set[str] = set()
        for entry in self.entries:
            for lbl in entry.top.labels:
                if lbl in seen:
                    raise ValueError(f"label collision across blocks: {lbl!r}")
                seen.add(lbl)


def polyhedral_join(spec: JoinSpec) -> SimplicialComplex:
    """Joined complex of the instance, normalized to its maximal faces.

    Only maximal faces of the base and of the per-block complexes are
    combined; the result is re-normalized to an antichain, which yields the
    full joined complex because every other face sits inside one of these.
    """
    spec.check()
    offsets = []
    labels: list[str] = []
    for entry in spec.entries:
        offsets.append(len(labels))
        labels.extend(entry.top.labels)
    masks = set()
    for smask in spec.base.maximal or (0,):
        per_block = []
        for i, entry in enumerate(spec.entries):
            side = entry.top if smask >> i & 1 else entry.bottom
            per_block.append(side.maximal or (0,))
        for combo in itertools.product(*per_block):
            mask = 0
            for off, part in zip(offsets, combo):
                mask |= part << off
            masks.add(mask)
    return SimplicialComplex.from_masks(tuple(labels), masks)


def compose(K: SimplicialComplex, *inserted: SimplicialComplex) -> SimplicialComplex:
    """Composition of K with one inserted complex per vertex of K."""
    if len(inserted) != K.n:
        raise ValueError(f"composition needs one complex per vertex of the "
                         f"base: expected {K.n}, got {len(inserted)}")
    return polyhedral_join(JoinSpec(K, tuple(JoinEntry.simplex_top(L) for L in inserted)))


def _block_owner(inserted) -> dict[str, tuple[int, int]]:
    """Map each block label to (block index, bit position inside the block)."""
    owner: dict[str, tuple[int, int]] = {}
    for i, L in enumerate(inserted):
        for pos, lbl in enumerate(L.labels):
            if lbl in owner:
                raise ValueError(f"label collision across blocks: {lbl!r}")
            owner[lbl] = (i, pos)
    return owner


def _split_by_block(face, owner, nblocks: int) -> list[int]:
    """Per-block bitmasks of a label set over the composed ground set."""
    parts = [0] * nblocks
    for lbl in face:
        where = owner.get(str(lbl))
        if where is None:
            raise ValueError(f"label {lbl!r} is not in the composed ground set")
        parts[where[0]] |= 1 << where[1]
    return parts


def compose_member(K: SimplicialComplex, inserted, face) -> bool:
    """Membership in the composition without building it.

    A subset of the composed ground set is a face exactly when the base
    vertices whose block parts fail to be faces of their inserted complex
    form a face of the base.
    """
    inserted = tuple(inserted)
    if len(inserted) != K.n:
        raise ValueError(f"composition needs one complex per vertex of the "
                         f"base: expected {K.n}, got {len(inserted)}")
    parts = _split_by_block(face, _block_owner(inserted), len(inserted))
    bad = 0
    for i, (L, part) in enumerate(zip(inserted, parts)):
        if not L.is_face_mask(part):
            bad |= 1 << i
    return K.is_face_mask(bad)


@dataclass(frozen=True)
class LinkDecomposition:
    """Factored link of a face in a composition, restricted to a label set.

    The suspended series of the restricted link equals the product of the
    suspended series of the per-block factors and of the outer link.
    """

    base_face: tuple[str, ...]
    base_restriction: tuple[str, ...]
    outer: SimplicialComplex
    blocks: tuple[tuple[str, SimplicialComplex], ...]

    def factors(self) -> list[SimplicialComplex]:
        return [complex_ for _, complex_ in self.blocks] + [self.outer]

    def series(self, field: str) -> UniPoly:
        out = UniPoly.one()
        for factor in self.factors():
            out = out * suspended_series(factor, field)
        return out


def link_decompose(K: SimplicialComplex, inserted, face, restrict_to) -> LinkDecomposition:
    """Factor the link of a composition face restricted to a label set.

    Blocks meeting the restriction set contribute the link of their part of
    the face inside their inserted complex; the remaining blocks whose part
    is not a face of their inserted complex form the outer face, whose link
    in the base closes the factorization. When a restricted block's part is
    not a face of its inserted complex, the whole restricted link is a cone;
    the full simplex on that block's restriction labels stands in as the
    factor, keeping the series product exact (it contributes 0).
    """
    inserted = tuple(inserted)
    if len(inserted) != K.n:
        raise ValueError(f"composition needs one complex per vertex of the "
                         f"base: expected {K.n}, got {len(inserted)}")
    owner = _block_owner(inserted)
    face_parts = _split_by_block(face, owner, len(inserted))
    rest_parts = _split_by_block(restrict_to, owner, len(inserted))
    bad = 0
    for i, (L, part) in enumerate(zip(inserted, face_parts)):
        if part & rest_parts[i]:
            raise ValueError("restriction set meets the face")
        if not L.is_face_mask(part):
            bad |= 1 << i
    if not K.is_face_mask(bad):
        raise ValueError("the given set is not a face of the composition")
    imask = 0
    for i, part in enumerate(rest_parts):
        if part:
            imask |= 1 << i
    sigma = bad & ~imask
    blocks = []
    for i in bits_of(imask):
        L, part, rest = inserted[i], face_parts[i], rest_parts[i]
        if L.is_face_mask(part):
            factor = L.link_mask(part, rest)
        else:
            rest_labels = L.labels_of(rest)
            factor = simplex_complex(len(rest_labels) - 1, rest_labels)
        blocks.append((K.labels[i], factor))
    return LinkDecomposition(
        base_face=K.labels_of(sigma),
        base_restriction=K.labels_of(imask),
        outer=K.link_mask(sigma, imask),
        blocks=tuple(blocks),
    )


def join_spec_from_json_dict(data: dict) -> JoinSpec:
    """Parse {"K": <complex>, "entries": [{"kind", "L", "Ki"?}]}.

    For simplex_top entries the "L" field holds the inserted complex (the
    top simplex is implied by its ground set); for empty_bottom it holds the
    top complex; general entries give the top in "L" and the bottom in "Ki".
    """
    if not isinstance(data, dict):
        raise ValueError("join document must be a JSON object")
    try:
        base = SimplicialComplex.from_json_dict(data["K"])
        raw_entries = data["entries"]
    except KeyError as missing:
        raise ValueError(f"join document missing key {missing}") from None
    if not isinstance(raw_entries, list):
        raise ValueError("entries must be a list")
    entries = []
    for raw in raw_entries:
        if not isinstance(raw, dict) or "kind" not in raw or "L" not in raw:
            raise ValueError("each entry needs \"kind\" and \"L\"")
        kind = raw["kind"]
        L = SimplicialComplex.from_json_dict(raw["L"])
        if kind == KIND_SIMPLEX_TOP:
            entries.append(JoinEntry.simplex_top(L))
        elif kind == KIND_EMPTY_BOTTOM:
            entries.append(JoinEntry.empty_bottom(L))
        elif kind == KIND_GENERAL:
            if "Ki" not in raw:
                raise ValueError("general entries need \"Ki\"")
            entries.append(JoinEntry.general(L, SimplicialComplex.from_json_dict(raw["Ki"])))
        else:
            raise ValueError(f"unknown entry kind {kind!r}")
    return JoinSpec(base, tuple(entries))
