"""Abstract simplicial complexes stored by their maximal faces.

A complex lives on an ordered ground set of distinct string labels. Faces are
integer bitmasks over label positions internally; the public surface speaks
labels. The empty face is always present implicitly, so ``maximal == ()``
denotes the complex {∅} (possibly with ghost vertices). A void complex with
no faces at all is not representable.
"""

from __future__ import annotations

import itertools


def bits_of(mask: int):
    """Positions of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int):
    """All submasks of mask, descending from mask itself to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _antichain(masks) -> tuple[int, ...]:
    """Drop masks contained in another; sort by (cardinality, positions)."""
    distinct = set(masks)
    distinct.discard(0)
    kept = [m for m in distinct
            if not any(m != other and m & other == m for other in distinct)]
    kept.sort(key=lambda m: (m.bit_count(), tuple(bits_of(m))))
    return tuple(kept)


class SimplicialComplex:
    """Immutable abstract simplicial complex with ghost vertices allowed."""

    __slots__ = ("labels", "maximal", "name", "_index", "_support")

    def __init__(self, labels, faces=(), name: str = ""):
        labels = tuple(str(x) for x in labels)
        index: dict[str, int] = {}
        for pos, lbl in enumerate(labels):
            if not lbl:
                raise ValueError("empty vertex label")
            if lbl in index:
                raise ValueError(f"duplicate vertex label {lbl!r}")
            index[lbl] = pos
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "name", str(name))
        masks = []
        for face in faces:
            mask = 0
            for lbl in face:
                pos = index.get(str(lbl))
                if pos is None:
                    raise ValueError(f"unknown vertex label {lbl!r} in face")
                mask |= 1 << pos
            masks.append(mask)
        object.__setattr__(self, "maximal", _antichain(masks))
        support = 0
        for m in self.maximal:
            support |= m
        object.__setattr__(self, "_support", support)

    def __setattr__(self, key, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_masks(cls, labels, masks, name: str = "") -> "SimplicialComplex":
        """Construct from position bitmasks, skipping label lookups."""
        self = cls.__new__(cls)
        labels = tuple(labels)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {l: p for p, l in enumerate(labels)})
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "maximal", _antichain(masks))
        support = 0
        for m in self.maximal:
            support |= m
        object.__setattr__(self, "_support", support)
        return self

    # -- label/mask plumbing -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def mask_of(self, face) -> int:
        mask = 0
        for lbl in face:
            pos = self._index.get(str(lbl))
            if pos is None:
                raise ValueError(f"unknown vertex label {lbl!r}")
            mask |= 1 << pos
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[p] for p in bits_of(mask))

    # -- queries ---------------------------------------------------------------

    def is_face_mask(self, mask: int) -> bool:
        if mask == 0:
            return True
        return any(mask & m == mask for m in self.maximal)

    def is_face(self, face) -> bool:
        """True iff the labels form a face; the empty face always is one."""
        return self.is_face_mask(self.mask_of(face))

    def __contains__(self, face) -> bool:
        return self.is_face(face)

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 for {∅}."""
        if not self.maximal:
            return -1
        return max(m.bit_count() for m in self.maximal) - 1

    def face_masks(self) -> list[int]:
        """Every face as a bitmask, ordered by (cardinality, positions)."""
        seen = {0}
        for m in self.maximal:
            for sub in submasks(m):
                seen.add(sub)
        return sorted(seen, key=lambda m: (m.bit_count(), tuple(bits_of(m))))

    def faces(self):
        """Every face as a label tuple, ordered by (cardinality, positions)."""
        return [self.labels_of(m) for m in self.face_masks()]

    def maximal_faces(self):
        """The maximal faces as label tuples, in stored order."""
        return [self.labels_of(m) for m in self.maximal]

    def ghost_vertices(self) -> tuple[str, ...]:
        """Labels that belong to no face."""
        return self.labels_of(self.full_mask & ~self._support)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by dimension, starting at dimension 0."""
        counts: dict[int, int] = {}
        for m in self.face_masks():
            if m:
                k = m.bit_count() - 1
                counts[k] = counts.get(k, 0) + 1
        return tuple(counts.get(d, 0) for d in range(self.dim + 1))

    # -- constructions -----------------------------------------------------------

    def full_subcomplex_mask(self, imask: int) -> "SimplicialComplex":
        labels = self.labels_of(imask)
        return SimplicialComplex.from_masks(
            labels, [_compress(m & imask, imask) for m in self.maximal])

    def full_subcomplex(self, restrict_to) -> "SimplicialComplex":
        """All faces contained in the given label set, on that ground set."""
        return self.full_subcomplex_mask(self.mask_of(restrict_to))

    def link_mask(self, smask: int, rmask: int) -> "SimplicialComplex":
        if not self.is_face_mask(smask):
            raise ValueError(f"link of a non-face {self.labels_of(smask)!r}")
        if smask & rmask:
            raise ValueError("restriction set meets the face")
        labels = self.labels_of(rmask)
        masks = [_compress(m & rmask, rmask) for m in self.maximal if m & smask == smask]
        return SimplicialComplex.from_masks(labels, masks)

    def link(self, face, restrict_to) -> "SimplicialComplex":
        """Link of a face, restricted to an explicit disjoint ground set."""
        return self.link_mask(self.mask_of(face), self.mask_of(restrict_to))

    def relabeled(self, new_labels) -> "SimplicialComplex":
        """Same face structure on a renamed ground set of equal size."""
        new_labels = tuple(str(x) for x in new_labels)
        if len(new_labels) != len(self.labels):
            raise ValueError("label count mismatch")
        return SimplicialComplex.from_masks(new_labels, self.maximal, self.name)

    def topology_key(self) -> tuple:
        """Cache key invariant under ghost vertices and label renaming."""
        return tuple(_compress(m, self._support) for m in self.maximal)

    # -- serialization ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.labels),
            "maximal_faces": [list(self.labels_of(m)) for m in self.maximal],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimplicialComplex":
        if not isinstance(data, dict):
            raise ValueError("complex document must be a JSON object")
        try:
            vertices = data["vertices"]
            faces = data["maximal_faces"]
        except KeyError as missing:
            raise ValueError(f"complex document missing key {missing}") from None
        if not isinstance(vertices, list) or not isinstance(faces, list):
            raise ValueError("vertices and maximal_faces must be lists")
        return cls(vertices, faces, name=str(data.get("name", "")))

    # -- dunder -----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self.maximal == other.maximal

    def __hash__(self):
        return hash((self.labels, self.maximal))

    def __repr__(self):
        shown = ", ".join("{%s}" % ",".join(self.labels_of(m)) for m in self.maximal)
        return f"SimplicialComplex(vertices={list(self.labels)}, maximal=[{shown}])"


def _compress(mask: int, within: int) -> int:
    """Re-index the bits of mask to consecutive positions inside within."""
    out = 0
    for new_pos, pos in enumerate(bits_of(within)):
        if mask >> pos & 1:
            out |= 1 << new_pos
    return out


def build_complex(labels, faces, name: str = "") -> SimplicialComplex:
    """Normalize an arbitrary face list to the antichain of maximal faces."""
    return SimplicialComplex(labels, faces, name=name)


def is_face(K: SimplicialComplex, s) -> bool:
    """True iff s is a face of K; the empty set always is."""
    return K.is_face(s)


def full_subcomplex(K: SimplicialComplex, restrict_to) -> SimplicialComplex:
    """Faces of K contained in the given label set, on that ground set."""
    return K.full_subcomplex(restrict_to)


def link_restricted(K: SimplicialComplex, s, restrict_to) -> SimplicialComplex:
    """Link of the face s in K, restricted to a disjoint label set."""
    return K.link(s, restrict_to)


def ghost_vertices(K: SimplicialComplex) -> tuple[str, ...]:
    """Labels of K that belong to no face."""
    return K.ghost_vertices()


def simplicial_join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes on disjoint label sets.

    Maximal faces are all unions of one maximal face from each side; the
    complex {∅} acts as the join unit apart from contributing its ghosts.
    """
    clash = set(a.labels) & set(b.labels)
    if clash:
        raise ValueError(f"label collision in join: {sorted(clash)}")
    shift = len(a.labels)
    left = a.maximal or (0,)
    right = b.maximal or (0,)
    masks = [ma | (mb << shift) for ma in left for mb in right]
    return SimplicialComplex.from_masks(a.labels + b.labels, masks)


def default_labels(count: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(count))


def simplex_complex(n: int, labels=None) -> SimplicialComplex:
    """The full simplex on n+1 vertices."""
    if n < 0:
        raise ValueError("simplex dimension must be >= 0")
    labels = default_labels(n + 1) if labels is None else tuple(labels)
    if len(labels) != n + 1:
        raise ValueError(f"simplex {n} needs {n + 1} labels, got {len(labels)}")
    return SimplicialComplex.from_masks(labels, [(1 << (n + 1)) - 1])


def boundary_complex(n: int, labels=None) -> SimplicialComplex:
    """The boundary of the n-simplex: all proper faces of the full simplex."""
    if n < 0:
        raise ValueError("simplex dimension must be >= 0")
    labels = default_labels(n + 1) if labels is None else tuple(labels)
    if len(labels) != n + 1:
        raise ValueError(f"boundary {n} needs {n + 1} labels, got {len(labels)}")
    full = (1 << (n + 1)) - 1
    return SimplicialComplex.from_masks(labels, [full & ~(1 << i) for i in range(n + 1)])


def empty_complex(l: int, labels=None) -> SimplicialComplex:
    """The complex {∅} with l ghost vertices."""
    if l < 0:
        raise ValueError("vertex count must be >= 0")
    labels = default_labels(l) if labels is None else tuple(labels)
    if len(labels) != l:
        raise ValueError(f"empty complex on {l} vertices needs {l} labels, got {len(labels)}")
    return SimplicialComplex.from_masks(labels, [])


def standard_complex(kind: str, size: int, labels=None) -> SimplicialComplex:
    """Dispatch for the stock complexes: simplex n, boundary n, empty l."""
    if kind == "simplex":
        return simplex_complex(size, labels)
    if kind == "boundary":
        return boundary_complex(size, labels)
    if kind == "empty":
        return empty_complex(size, labels)
    raise ValueError(f"unknown standard complex kind {kind!r}")


def all_complexes(n: int, labels=None):
    """Every simplicial complex on n labeled vertices (antichain enumeration)."""
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    if n > 4:
        raise ValueError("exhaustive enumeration is limited to 4 vertices")
    labels = default_labels(n) if labels is None else tuple(labels)
    nonempty = list(range(1, 1 << n))
    out = []
    for picks in itertools.chain.from_iterable(
            itertools.combinations(nonempty, k) for k in range(len(nonempty) + 1)):
        if any(a != b and a & b == a for a in picks for b in picks):
            continue
        out.append(SimplicialComplex.from_masks(labels, picks))
    return out
