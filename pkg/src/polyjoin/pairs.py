"""Freeness pair data (B, C, E) and the derived pairs of the two join families.

A pair decomposition records the graded dimensions of a CW pair (X, A)
split as H*(X) = B ⊕ C and H*(A) = B ⊕ E, with the unit sitting in B at
degree 0. The two derived constructions package a whole block (a complex L
with pair data on its vertices) as a single pair, so the block can be fed
back to the one-level series engine:

* pair_from_csc describes (∏X, Z_L(X,A)) — tops of a composition block;
* pair_from_empty describes (Z_L(X,A), ∏A) — a block joined over {∅}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .complexes import SimplicialComplex, bits_of, submasks
from .poly import UniPoly
from .topology import (F2, normalize_field, series_of, suspended_series,
                       validate_graded_dims)

MODE_FULL = "full"
MODE_SMASH = "smash"
MODES = (MODE_FULL, MODE_SMASH)


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


@dataclass(frozen=True)
class PairDecomposition:
    """Graded dimensions of one freeness pair: B (unit side), C, E."""

    B: Mapping[int, int]
    C: Mapping[int, int]
    E: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "B", validate_graded_dims(self.B))
        object.__setattr__(self, "C", validate_graded_dims(self.C))
        object.__setattr__(self, "E", validate_graded_dims(self.E))

    def b_series(self) -> UniPoly:
        return series_of(self.B)

    def c_series(self) -> UniPoly:
        return series_of(self.C)

    def e_series(self) -> UniPoly:
        return series_of(self.E)

    def to_json_dict(self) -> dict:
        return {
            "B": {str(d): r for d, r in sorted(self.B.items())},
            "C": {str(d): r for d, r in sorted(self.C.items())},
            "E": {str(d): r for d, r in sorted(self.E.items())},
        }


def preset_pair(name: str, dims=None) -> PairDecomposition:
    """Stock pairs: interval_s0 is (D¹,S⁰), disk2_circle is (D²,S¹), and
    cone takes the reduced dimensions of the base of the cone."""
    if name == "interval_s0":
        return PairDecomposition({0: 1}, {}, {0: 1})
    if name == "disk2_circle":
        return PairDecomposition({0: 1}, {}, {1: 1})
    if name == "cone":
        if dims is None:
            raise ValueError("the cone preset needs the reduced dimensions "
                             "of the cone's base")
        return PairDecomposition({0: 1}, {}, dims)
    raise ValueError(f"unknown pair preset {name!r}")


def validate_pair(p: PairDecomposition) -> bool:
    """True iff the pair carries the unit (B rank at degree 0)."""
    return p.B.get(0, 0) >= 1


class PairAssignment:
    """Per-vertex pair table with an optional default."""

    def __init__(self, by_label=None, default: PairDecomposition | None = None):
        self.by_label = {str(k): v for k, v in (by_label or {}).items()}
        self.default = default

    def pair_for(self, label: str) -> PairDecomposition:
        p = self.by_label.get(label, self.default)
        if p is None:
            raise ValueError(f"no pair assigned to vertex {label!r}")
        return p


def assignment_for(labels, ps) -> list[PairDecomposition]:
    """Resolve pair data to one validated pair per label, in order.

    Accepts a single PairDecomposition (used everywhere), a PairAssignment,
    or a plain mapping from label to PairDecomposition.
    """
    if isinstance(ps, PairDecomposition):
        pairs = [ps] * len(labels)
    elif isinstance(ps, PairAssignment):
        pairs = [ps.pair_for(lbl) for lbl in labels]
    elif isinstance(ps, Mapping):
        pairs = []
        for lbl in labels:
            p = ps.get(lbl)
            if p is None:
                raise ValueError(f"no pair assigned to vertex {lbl!r}")
            pairs.append(p)
    else:
        raise ValueError(f"cannot interpret {type(ps).__name__} as a pair assignment")
    for lbl, p in zip(labels, pairs):
        if not isinstance(p, PairDecomposition):
            raise ValueError(f"entry for vertex {lbl!r} is not a pair decomposition")
        if not validate_pair(p):
            raise ValueError(f"pair for vertex {lbl!r} has no unit in B")
    return pairs


def _dims_of(poly: UniPoly) -> dict[int, int]:
    for e, v in poly.c.items():
        if v < 0:
            raise ValueError(f"negative rank {v} at degree {e}")
    return dict(poly.c)


def _mode_series(pairs, mode: str):
    strip = 1 if mode == MODE_SMASH else 0
    bs = [p.b_series() - strip for p in pairs]
    cs = [p.c_series() for p in pairs]
    es = [p.e_series() for p in pairs]
    return bs, cs, es


def pair_from_csc(L: SimplicialComplex, ps, field: str = F2,
                  mode: str = MODE_FULL) -> PairDecomposition:
    """Pair of (∏X, Z_L(X,A)) for a block L with per-vertex pair data.

    B sums the face terms of the block's top-level decomposition, C the
    non-face terms, and E the suspended link terms with a proper support
    set. In smash mode every B factor is taken without its unit and the
    derived B gets the unit back, so the derived pair plugs straight into
    the smash-mode engine.
    """
    field = normalize_field(field)
    check_mode(mode)
    pairs = assignment_for(L.labels, ps)
    bs, cs, es = _mode_series(pairs, mode)
    full = L.full_mask
    faces = set(L.face_masks())

    b_part = UniPoly.zero()
    c_part = UniPoly.zero()
    for rho in submasks(full):
        y = UniPoly.one()
        for j in range(L.n):
            y = y * (cs[j] if rho >> j & 1 else bs[j])
            if y.is_zero():
                break
        if y.is_zero():
            continue
        if rho in faces:
            b_part = b_part + y
        else:
            c_part = c_part + y

    e_part = UniPoly.zero()
    for jmask in submasks(full):
        if jmask == full:
            continue
        outside = UniPoly.one()
        for j in bits_of(full & ~jmask):
            outside = outside * es[j]
        if outside.is_zero():
            continue
        for tau in faces:
            if tau & jmask != tau:
                continue
            y = outside
            for j in bits_of(jmask):
                y = y * (cs[j] if tau >> j & 1 else bs[j])
                if y.is_zero():
                    break
            if y.is_zero():
                continue
            link = L.link_mask(tau, full & ~jmask)
            e_part = e_part + y * suspended_series(link, field)

    if mode == MODE_SMASH:
        b_part = b_part + 1
    return PairDecomposition(_dims_of(b_part), _dims_of(c_part), _dims_of(e_part))


def pair_from_empty(L: SimplicialComplex, ps, field: str = F2,
                    mode: str = MODE_FULL) -> PairDecomposition:
    """Pair of (Z_L(X,A), ∏A) for a ghost-free block L with pair data.

    B is the single all-B product, E collects the mixed products with at
    least one E factor, and C collects every suspended link term except the
    one that reproduces B. Smash mode works with unit-free B factors and
    re-adds the unit to the derived B, as in pair_from_csc.
    """
    field = normalize_field(field)
    check_mode(mode)
    ghosts = L.ghost_vertices()
    if ghosts:
        raise ValueError(f"block complex has ghost vertices {list(ghosts)!r}")
    pairs = assignment_for(L.labels, ps)
    bs, cs, es = _mode_series(pairs, mode)
    full = L.full_mask

    b_part = UniPoly.one()
    for j in range(L.n):
        b_part = b_part * bs[j]

    e_part = UniPoly.zero()
    for imask in submasks(full):
        if imask == full:
            continue
        y = UniPoly.one()
        for j in range(L.n):
            y = y * (bs[j] if imask >> j & 1 else es[j])
            if y.is_zero():
                break
        e_part = e_part + y

    c_part = UniPoly.zero()
    for sigma in L.face_masks():
        for rmask in submasks(full & ~sigma):
            if sigma == 0 and rmask == 0:
                continue
            y = UniPoly.one()
            for j in range(L.n):
                if rmask >> j & 1:
                    y = y * es[j]
                elif sigma >> j & 1:
                    y = y * cs[j]
                else:
                    y = y * bs[j]
                if y.is_zero():
                    break
            if y.is_zero():
                continue
            c_part = c_part + y * suspended_series(L.link_mask(sigma, rmask), field)

    if mode == MODE_SMASH:
        b_part = b_part + 1
    return PairDecomposition(_dims_of(b_part), _dims_of(c_part), _dims_of(e_part))


# -- per-vertex graded dimensions (the A data of cone-type pairs) -------------

def dims_assignment(labels, dims_spec) -> list[dict[int, int]]:
    """Resolve per-vertex graded dimensions, one table per label.

    A mapping with integer keys (or an empty one) is used for every vertex;
    a mapping with string keys assigns per label, with an optional
    "default" entry as fallback.
    """
    if not isinstance(dims_spec, Mapping):
        raise ValueError(f"cannot interpret {type(dims_spec).__name__} as graded dimensions")
    if not dims_spec or all(isinstance(k, int) for k in dims_spec):
        table = validate_graded_dims(dims_spec)
        return [dict(table) for _ in labels]
    default = dims_spec.get("default")
    out = []
    for lbl in labels:
        entry = dims_spec.get(lbl, default)
        if entry is None:
            raise ValueError(f"no dimensions assigned to vertex {lbl!r}")
        out.append(validate_graded_dims(entry))
    return out


def cone_pairs_for(labels, dims_spec) -> dict[str, PairDecomposition]:
    """Cone pairs (one per label) over the given reduced dimensions."""
    return {lbl: preset_pair("cone", dims)
            for lbl, dims in zip(labels, dims_assignment(labels, dims_spec))}


# -- JSON ----------------------------------------------------------------------

def _degree_table_from_json(raw) -> dict[int, int]:
    if not isinstance(raw, Mapping):
        raise ValueError("a degree table must be a JSON object")
    return validate_graded_dims({int(k): int(v) for k, v in raw.items()})


def pair_from_json_dict(raw) -> PairDecomposition:
    """One pair: either {"B": .., "C": .., "E": ..} or a preset shorthand."""
    if not isinstance(raw, Mapping):
        raise ValueError("a pair must be a JSON object")
    if "preset" in raw:
        preset = raw["preset"]
        if isinstance(preset, str):
            return preset_pair(preset)
        if isinstance(preset, Mapping) and set(preset) == {"cone"}:
            return preset_pair("cone", _degree_table_from_json(preset["cone"]))
        raise ValueError(f"unknown pair preset {preset!r}")
    return PairDecomposition(
        _degree_table_from_json(raw.get("B", {})),
        _degree_table_from_json(raw.get("C", {})),
        _degree_table_from_json(raw.get("E", {})),
    )


def pairs_from_json_dict(data) -> PairAssignment | PairDecomposition:
    """Parse {"pairs": {label: pair}, "default": pair} or one preset/pair."""
    if not isinstance(data, Mapping):
        raise ValueError("pair document must be a JSON object")
    if "pairs" not in data and "default" not in data:
        return pair_from_json_dict(data)
    by_label = {str(k): pair_from_json_dict(v)
                for k, v in (data.get("pairs") or {}).items()}
    default = pair_from_json_dict(data["default"]) if "default" in data else None
    return PairAssignment(by_label, default)


def dims_from_json_dict(data) -> dict:
    """Parse {"dims": {label: table}, "default": table} or one table."""
    if not isinstance(data, Mapping):
        raise ValueError("dimension document must be a JSON object")
    if "dims" not in data and "default" not in data:
        return _degree_table_from_json(data)
    out: dict = {str(k): _degree_table_from_json(v)
                 for k, v in (data.get("dims") or {}).items()}
    if "default" in data:
        out["default"] = _degree_table_from_json(data["default"])
    return out
