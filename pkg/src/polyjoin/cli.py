"""Command-line front end: one subcommand per operation family.

Exit codes: 0 success, 1 a verification reported a mismatch, 2 usage or
input errors. Output is deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .betti import beta_compose, beta_polynomial, hochster_betti, multigraded_betti
from .complexes import (SimplicialComplex, all_complexes, empty_complex,
                        submasks)
from .joins import compose, join_spec_from_json_dict, link_decompose, polyhedral_join
from .oracle import random_complex, rmac_betti_poly, verify_formula
from .pairs import (MODE_FULL, PairDecomposition, dims_from_json_dict,
                    pair_from_csc, pair_from_empty, pairs_from_json_dict,
                    preset_pair)
from .poly import MultiPoly, UniPoly
from .series import (bbcg_series, caa_series, csc_series, empty_series,
                     remark_series, splitting_check)
from .srings import minimal_nonfaces, sr_compose_generators, sr_ideal_member
from .topology import (F2, betti_numbers, normalize_field,
                       simplicial_chain_complex, suspended_series)


@dataclass(frozen=True)
class RunConfig:
    field: str = F2
    mode: str = MODE_FULL
    fmt: str = "text"
    seed: int = 0


def _config(args) -> RunConfig:
    return RunConfig(
        field=normalize_field(getattr(args, "field", F2)),
        mode=getattr(args, "mode", MODE_FULL),
        fmt=getattr(args, "format", "text"),
        seed=getattr(args, "seed", 0),
    )


# -- input plumbing ------------------------------------------------------------

def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_complex(path: str) -> SimplicialComplex:
    return SimplicialComplex.from_json_dict(_load_json(path))


def _face_arg(raw: str | None) -> tuple[str, ...]:
    if not raw:
        return ()
    return tuple(piece.strip() for piece in raw.split(",") if piece.strip())


def _split_inputs(paths, tail: int):
    """First path is the base complex, last `tail` are data files."""
    if len(paths) < tail + 1:
        raise ValueError(f"expected at least {tail + 1} input files, got {len(paths)}")
    return paths[0], paths[1:len(paths) - tail], paths[len(paths) - tail:]


# -- output plumbing -----------------------------------------------------------

def _print_complex(K: SimplicialComplex, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(K.to_json_dict(), sort_keys=True))
        return
    print("vertices: " + ",".join(K.labels))
    for face in K.maximal_faces():
        print("maximal: " + ",".join(face))
    ghosts = K.ghost_vertices()
    if ghosts:
        print("ghosts: " + ",".join(ghosts))


def _print_series(poly: UniPoly, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"series": {str(e): poly.c[e] for e in sorted(poly.c)}}))
    else:
        print(str(poly))


def _print_multipoly(poly: MultiPoly, fmt: str) -> None:
    if fmt == "json":
        terms = [{"s": s, "t": list(tsup), "coeff": poly.c[(s, tsup)]}
                 for s, tsup in sorted(poly.c)]
        print(json.dumps({"terms": terms}))
    else:
        print(str(poly))


def _report(name: str, ok: bool) -> bool:
    print(("PASS: " if ok else "FAIL: ") + name)
    return ok


# -- subcommand handlers ---------------------------------------------------------

def _cmd_complex(args) -> int:
    cfg = _config(args)
    _print_complex(_load_complex(args.complex), cfg.fmt)
    return 0


def _cmd_link(args) -> int:
    cfg = _config(args)
    K = _load_complex(args.complex)
    face = _face_arg(args.face)
    if args.restrict is None:
        rest = tuple(l for l in K.labels if l not in set(face))
    else:
        rest = _face_arg(args.restrict)
    _print_complex(K.link(face, rest), cfg.fmt)
    return 0


def _cmd_subcomplex(args) -> int:
    cfg = _config(args)
    K = _load_complex(args.complex)
    _print_complex(K.full_subcomplex(_face_arg(args.restrict)), cfg.fmt)
    return 0


def _cmd_join(args) -> int:
    cfg = _config(args)
    spec = join_spec_from_json_dict(_load_json(args.spec))
    _print_complex(polyhedral_join(spec), cfg.fmt)
    return 0


def _cmd_compose(args) -> int:
    cfg = _config(args)
    K = _load_complex(args.inputs[0])
    blocks = [_load_complex(p) for p in args.inputs[1:]]
    _print_complex(compose(K, *blocks), cfg.fmt)
    return 0


def _cmd_homology(args) -> int:
    cfg = _config(args)
    K = _load_complex(args.complex)
    bs = betti_numbers(simplicial_chain_complex(K, cfg.field))
    poly = UniPoly({d: b for d, b in enumerate(bs) if b})
    if cfg.fmt == "json":
        print(json.dumps({"betti": bs,
                          "poincare": {str(e): poly.c[e] for e in sorted(poly.c)}}))
    else:
        print(" ".join(str(b) for b in bs))
        print(str(poly))
    return 0


def _cmd_series(args) -> int:
    cfg = _config(args)
    engine = args.engine
    if engine == "bbcg":
        base, mids, data = _split_inputs(args.inputs, 1)
        if mids:
            raise ValueError("series bbcg takes a complex and a pair file")
        K = _load_complex(base)
        ps = pairs_from_json_dict(_load_json(data[0]))
        poly = bbcg_series(K, ps, cfg.mode, cfg.field)
    elif engine in ("csc", "empty"):
        base, mids, data = _split_inputs(args.inputs, 1)
        if not mids:
            raise ValueError(f"series {engine} needs block complexes")
        K = _load_complex(base)
        blocks = [_load_complex(p) for p in mids]
        ps = pairs_from_json_dict(_load_json(data[0]))
        if engine == "csc":
            poly = csc_series(K, blocks, ps, cfg.mode, cfg.field)
        else:
            poly = empty_series(K, blocks, ps, cfg.mode, cfg.field, args.route)
    elif engine in ("caa", "remark"):
        base, mids, data = _split_inputs(args.inputs, 1)
        if not mids:
            raise ValueError(f"series {engine} needs block complexes")
        K = _load_complex(base)
        blocks = [_load_complex(p) for p in mids]
        dims = dims_from_json_dict(_load_json(data[0]))
        if engine == "caa":
            poly = caa_series(K, blocks, dims, cfg.field, reduced=args.reduced)
        else:
            poly = remark_series(K, blocks, dims, cfg.field)
    else:
        raise ValueError(f"unknown series engine {engine!r}")
    _print_series(poly, cfg.fmt)
    return 0


def _cmd_betti(args) -> int:
    cfg = _config(args)
    what = args.what
    if what == "poly":
        base, mids, data = _split_inputs(args.inputs, 1)
        if mids:
            raise ValueError("betti poly takes a complex and a dimension file")
        K = _load_complex(base)
        dims = dims_from_json_dict(_load_json(data[0]))
        _print_multipoly(beta_polynomial(K, dims, cfg.field, reduced=args.reduced),
                         cfg.fmt)
        return 0
    if what == "compose":
        base, mids, data = _split_inputs(args.inputs, 1)
        if not mids:
            raise ValueError("betti compose needs block complexes")
        K = _load_complex(base)
        blocks = [_load_complex(p) for p in mids]
        dims = dims_from_json_dict(_load_json(data[0]))
        _print_multipoly(beta_compose(K, blocks, dims, cfg.field), cfg.fmt)
        return 0
    if what == "multigraded":
        base, mids, data = _split_inputs(args.inputs, 1)
        if mids:
            raise ValueError("betti multigraded takes a complex and a dimension file")
        K = _load_complex(base)
        dims = dims_from_json_dict(_load_json(data[0]))
        value = multigraded_betti(K, dims, args.i, _face_arg(args.J), cfg.field)
    elif what == "hochster":
        K = _load_complex(args.inputs[0])
        if len(args.inputs) != 1:
            raise ValueError("betti hochster takes one complex file")
        value = hochster_betti(K, args.i, _face_arg(args.J), cfg.field)
    else:
        raise ValueError(f"unknown betti command {what!r}")
    if cfg.fmt == "json":
        print(json.dumps({"betti": value}))
    else:
        print(value)
    return 0


def _cmd_sr(args) -> int:
    cfg = _config(args)
    what = args.what
    if what == "nonfaces":
        K = _load_complex(args.inputs[0])
        gens = minimal_nonfaces(K)
    elif what == "compose":
        K = _load_complex(args.inputs[0])
        blocks = [_load_complex(p) for p in args.inputs[1:]]
        gens = sr_compose_generators(K, blocks)
    elif what == "member":
        K = _load_complex(args.inputs[0])
        member = sr_ideal_member(K, _face_arg(args.face))
        if cfg.fmt == "json":
            print(json.dumps({"member": member}))
        else:
            print("true" if member else "false")
        return 0
    else:
        raise ValueError(f"unknown sr command {what!r}")
    if cfg.fmt == "json":
        print(json.dumps({"generators": [list(g) for g in gens]}))
    else:
        for g in gens:
            print(",".join(g))
    return 0


def _cmd_oracle(args) -> int:
    cfg = _config(args)
    what = args.what
    if what in ("rmac", "verify") and not args.complex:
        raise ValueError(f"oracle {what} needs a complex file")
    if what == "rmac":
        K = _load_complex(args.complex)
        _print_series(rmac_betti_poly(K, cfg.field), cfg.fmt)
        return 0
    if what == "verify":
        K = _load_complex(args.complex)
        ok = _report("series-matches-cubical-model", verify_formula(K, cfg.field))
        return 0 if ok else 1
    if what == "sweep":
        rng = random.Random(cfg.seed)
        failures = 0
        for case in range(args.count):
            K = random_complex(args.vertices, rng)
            if not _report(f"case-{case:03d}", verify_formula(K, cfg.field)):
                failures += 1
        print(f"passed {args.count - failures}/{args.count}")
        return 0 if failures == 0 else 1
    raise ValueError(f"unknown oracle command {what!r}")


# -- bundled verification suites -------------------------------------------------

def _fixture_poincare() -> bool:
    K = empty_complex(2)
    L1 = SimplicialComplex(("11",), (("11",),))
    L2 = SimplicialComplex(("21", "22"), (("21",), ("22",)))
    pair = PairDecomposition({0: 1, 4: 1}, {6: 1}, {2: 1})
    expected = UniPoly({9: 1, 11: 1, 12: 3, 14: 5, 16: 2})
    via_blocks = csc_series(K, (L1, L2), pair, "smash", F2)
    via_complex = bbcg_series(compose(K, L1, L2), pair, "smash", F2)
    return via_blocks == expected and via_complex == expected


def _fixture_composed_example():
    K = SimplicialComplex(("1", "2", "3"), (("1",), ("2", "3")))
    L1 = empty_complex(1, ("11",))
    L2 = SimplicialComplex(("21",), (("21",),))
    L3 = SimplicialComplex(("31", "32"), (("31",), ("32",)))
    return K, (L1, L2, L3)


def _fixture_composition() -> bool:
    K, blocks = _fixture_composed_example()
    composed = compose(K, *blocks)
    got = {frozenset(composed.labels_of(m)) for m in composed.maximal}
    want = {frozenset({"21", "31", "32"}), frozenset({"11", "21", "31"}),
            frozenset({"11", "21", "32"})}
    return got == want


def _fixture_beta() -> bool:
    K, blocks = _fixture_composed_example()
    dims = {2: 1}
    expected = MultiPoly({(0, ()): 1, (8, ("11", "31", "32")): 1})
    direct = beta_polynomial(compose(K, *blocks), dims, F2)
    composed = beta_compose(K, blocks, dims, F2)
    return direct == expected and composed == expected


def _random_pair(rng) -> PairDecomposition:
    b = {0: 1}
    if rng.random() < 0.7:
        b[rng.randint(1, 4)] = rng.randint(1, 2)
    c = {rng.randint(1, 5): rng.randint(1, 2)} if rng.random() < 0.8 else {}
    e = {rng.randint(1, 4): rng.randint(1, 2)} if rng.random() < 0.8 else {}
    return PairDecomposition(b, c, e)


def _random_ghostfree(n: int, rng) -> SimplicialComplex:
    while True:
        K = random_complex(n, rng)
        if not K.ghost_vertices():
            return K


def _random_setup(rng, ghostfree_blocks=False):
    K = random_complex(rng.randint(1, 3), rng)
    make = _random_ghostfree if ghostfree_blocks else random_complex
    blocks = []
    for k in range(K.n):
        size = rng.randint(1, 2)
        L = make(size, rng)
        blocks.append(L.relabeled(tuple(f"b{k}v{j}" for j in range(size))))
    pair_table = {}
    for L in blocks:
        for lbl in L.labels:
            pair_table[lbl] = _random_pair(rng)
    return K, blocks, pair_table


def _prop_oracle() -> bool:
    for n in (1, 2, 3):
        for K in all_complexes(n):
            if not verify_formula(K, F2):
                return False
    return True


def _prop_hochster() -> bool:
    s0 = preset_pair("interval_s0")
    for n in (1, 2, 3):
        for K in all_complexes(n):
            total = UniPoly.zero()
            for jmask in submasks(K.full_mask):
                total = total + suspended_series(K.full_subcomplex_mask(jmask), F2)
            if bbcg_series(K, s0, "full", F2) != total:
                return False
    return True


def _prop_mac() -> bool:
    d2 = preset_pair("disk2_circle")
    for n in (1, 2, 3):
        for K in all_complexes(n):
            total = UniPoly.zero()
            for jmask in submasks(K.full_mask):
                sub = K.full_subcomplex_mask(jmask)
                total = total + suspended_series(sub, F2).shifted(jmask.bit_count())
            if bbcg_series(K, d2, "full", F2) != total:
                return False
    return True


def _prop_composition_paths(seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(12):
        K, blocks, ps = _random_setup(rng)
        composed = compose(K, *blocks)
        for mode in ("full", "smash"):
            direct = csc_series(K, blocks, ps, mode, F2)
            nested = bbcg_series(
                K, {K.labels[k]: pair_from_csc(L, ps, F2, mode)
                    for k, L in enumerate(blocks)}, mode, F2)
            whole = bbcg_series(composed, ps, mode, F2)
            if not (direct == nested == whole):
                return False
    return True


def _prop_empty_paths(seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(12):
        K, blocks, ps = _random_setup(rng, ghostfree_blocks=True)
        for mode in ("full", "smash"):
            a = empty_series(K, blocks, ps, mode, F2, "pairs")
            b = empty_series(K, blocks, ps, mode, F2, "expanded")
            c = empty_series(K, blocks, ps, mode, F2, "join")
            if not (a == b == c):
                return False
    return True


def _prop_caa_remark(seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(12):
        K, blocks, _ = _random_setup(rng)
        dims = {}
        for L in blocks:
            for lbl in L.labels:
                dims[lbl] = {rng.randint(1, 3): rng.randint(1, 2)}
        if caa_series(K, blocks, dims, F2, reduced=True) != \
                remark_series(K, blocks, dims, F2):
            return False
    return True


def _prop_splitting(seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(12):
        K = random_complex(rng.randint(1, 4), rng)
        ps = {lbl: _random_pair(rng) for lbl in K.labels}
        if not splitting_check(K, ps, F2):
            return False
    return True


def _prop_balance(seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(12):
        n = rng.randint(1, 3)
        L = _random_ghostfree(n, rng)
        ps = {lbl: _random_pair(rng) for lbl in L.labels}
        resolved = [ps[lbl] for lbl in L.labels]
        whole = UniPoly.one()
        for p in resolved:
            whole = whole * (p.b_series() + p.c_series())
        derived = pair_from_csc(L, ps, F2, "full")
        if derived.b_series() + derived.c_series() != whole:
            return False
        bottom = UniPoly.one()
        for p in resolved:
            bottom = bottom * (p.b_series() + p.e_series())
        derived = pair_from_empty(L, ps, F2, "full")
        if derived.b_series() + derived.e_series() != bottom:
            return False
    return True


def _prop_sr(seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(10):
        K, blocks, _ = _random_setup(rng)
        direct = set(map(frozenset, minimal_nonfaces(compose(K, *blocks))))
        predicted = set(map(frozenset, sr_compose_generators(K, blocks)))
        if direct != predicted:
            return False
    return True


def _prop_links(seed: int) -> bool:
    rng = random.Random(seed)
    for _ in range(10):
        K, blocks, _ = _random_setup(rng)
        composed = compose(K, *blocks)
        full = composed.full_mask
        for smask in composed.face_masks():
            for rmask in submasks(full & ~smask):
                face = composed.labels_of(smask)
                rest = composed.labels_of(rmask)
                dec = link_decompose(K, blocks, face, rest)
                direct = suspended_series(composed.link_mask(smask, rmask), F2)
                if dec.series(F2) != direct:
                    return False
    return True


def _cmd_verify(args) -> int:
    cfg = _config(args)
    if args.what == "paper":
        checks = [
            ("poincare-example", _fixture_poincare),
            ("composition-example", _fixture_composition),
            ("beta-example", _fixture_beta),
        ]
        ok = True
        for name, fn in checks:
            ok = _report(name, fn()) and ok
        return 0 if ok else 1
    if args.what == "properties":
        seed = cfg.seed
        checks = [
            ("oracle-small-complexes", _prop_oracle),
            ("single-pair-specialization", _prop_hochster),
            ("moment-angle-specialization", _prop_mac),
            ("composition-three-paths", lambda: _prop_composition_paths(seed)),
            ("empty-bottom-three-paths", lambda: _prop_empty_paths(seed + 1)),
            ("cone-pair-agreement", lambda: _prop_caa_remark(seed + 2)),
            ("stable-splitting", lambda: _prop_splitting(seed + 3)),
            ("derived-pair-balance", lambda: _prop_balance(seed + 4)),
            ("ideal-composition", lambda: _prop_sr(seed + 5)),
            ("link-factorization", lambda: _prop_links(seed + 6)),
        ]
        ok = True
        for name, fn in checks:
            ok = _report(name, fn()) and ok
        return 0 if ok else 1
    raise ValueError(f"unknown verify suite {args.what!r}")


# -- parser ----------------------------------------------------------------------

def _add_common(p, mode=False, fmt=True, field=True, seed=False):
    if field:
        p.add_argument("--field", default="f2", choices=("f2", "q"))
    if mode:
        p.add_argument("--mode", default="full", choices=("full", "smash"))
    if fmt:
        p.add_argument("--format", default="text", choices=("text", "json"))
    if seed:
        p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyjoin",
        description="Simplicial complex composition and polyhedral product series")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complex", help="normalize and print a complex")
    p.add_argument("complex")
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_complex)

    p = sub.add_parser("link", help="restricted link of a face")
    p.add_argument("complex")
    p.add_argument("--face", default="")
    p.add_argument("--restrict", default=None)
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_link)

    p = sub.add_parser("subcomplex", help="full subcomplex on chosen vertices")
    p.add_argument("complex")
    p.add_argument("--restrict", required=True)
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_subcomplex)

    p = sub.add_parser("join", help="polyhedral join from a spec file")
    p.add_argument("spec")
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_join)

    p = sub.add_parser("compose", help="substitute blocks into a base complex")
    p.add_argument("inputs", nargs="+", metavar="FILE")
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("homology", help="Betti numbers of a complex")
    p.add_argument("complex")
    _add_common(p)
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("series", help="Hilbert-Poincare series engines")
    p.add_argument("engine", choices=("bbcg", "csc", "empty", "caa", "remark"))
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.add_argument("--route", default="pairs", choices=("pairs", "expanded", "join"))
    p.add_argument("--reduced", action="store_true")
    _add_common(p, mode=True)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("betti", help="multigraded Betti numbers")
    p.add_argument("what", choices=("poly", "compose", "multigraded", "hochster"))
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.add_argument("-i", type=int, default=0)
    p.add_argument("-J", default="")
    p.add_argument("--reduced", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("sr", help="Stanley-Reisner ideal generators")
    p.add_argument("what", choices=("nonfaces", "compose", "member"))
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.add_argument("--face", default="")
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_sr)

    p = sub.add_parser("oracle", help="brute-force cubical model checks")
    p.add_argument("what", choices=("rmac", "verify", "sweep"))
    p.add_argument("complex", nargs="?")
    p.add_argument("--vertices", type=int, default=4)
    p.add_argument("--count", type=int, default=20)
    _add_common(p, seed=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="bundled verification suites")
    p.add_argument("what", choices=("paper", "properties"))
    _add_common(p, seed=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    console_main()
