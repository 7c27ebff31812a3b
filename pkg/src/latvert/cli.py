"""Command-line front end: ``latvert <command> --matrix A.txt ...``.

Exit status is 0 on success, 1 on invalid input (or a failed check or
reproduction), and 2 when a budget is exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import BudgetExceeded, LatvertError
from .exact import parse_matrix
from .graver import DEFAULT_ELEMENT_BUDGET, graver_basis
from .groebner import (
    DEFAULT_CONE_BUDGET,
    enumerate_fan,
    groebner_cone,
    parse_weight,
    reduced_gb,
)
from .lattice import Lattice, is_pointed
from .monomial import (
    MonomialIdeal,
    associated_primes,
    format_ideal,
    hilbert_vertex_counts,
    irreducible_decomposition,
    is_subset,
    minimalize,
    prime_str,
    radical,
    standard_pairs,
    top,
)
from .vertex_ideal import (
    dimension_bounds_report,
    embedded_face_violations,
    matroid_radical,
    product_ideal,
    standard_in_box,
    vertex_ideal_circuits,
    vertex_ideal_intersection,
    vertex_ideal_oracle,
)

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2


def _read_matrix(value: str):
    if os.path.exists(value):
        with open(value) as fh:
            return parse_matrix(fh.read())
    return parse_matrix(value)


def load_lattice(args) -> Lattice:
    if bool(args.matrix) == bool(args.lattice_basis):
        raise ValueError("give exactly one of --matrix and --lattice-basis")
    if args.matrix:
        return Lattice.from_matrix(_read_matrix(args.matrix))
    return Lattice(_read_matrix(args.lattice_basis))


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)


def _ideal_payload(M: MonomialIdeal) -> dict:
    return {"n": M.n, "generators": [list(g) for g in M.generators]}


def _emit_ideal(args, M: MonomialIdeal) -> None:
    if args.json:
        print(json.dumps(_ideal_payload(M), sort_keys=True))
    elif args.pretty:
        print(str(M))
    else:
        text = format_ideal(M)
        if text:
            print(text)


def _graver(args, L):
    return graver_basis(L, budget=args.budget or DEFAULT_ELEMENT_BUDGET)


def _vertex_ideal(args, L) -> MonomialIdeal:
    return vertex_ideal_circuits(L, _graver(args, L))


def cmd_graver(args) -> int:
    G = _graver(args, load_lattice(args))
    _emit(args, "\n".join(" ".join(map(str, g)) for g in G), [list(g) for g in G])
    return EXIT_OK


def cmd_vertex_ideal(args) -> int:
    L = load_lattice(args)
    if args.method == "circuits":
        M = _vertex_ideal(args, L)
    elif args.method == "intersection":
        M = vertex_ideal_intersection(L, _graver(args, L), budget=args.budget or DEFAULT_CONE_BUDGET)
    else:
        box = args.box if args.box is not None else 6
        verts = vertex_ideal_oracle(L, box)
        grid = standard_in_box(MonomialIdeal(L.n, ()), box)
        M = minimalize(grid - verts, L.n)
        print(f"# generators with all exponents <= {box}", file=sys.stderr)
    _emit_ideal(args, M)
    return EXIT_OK


def cmd_product_ideal(args) -> int:
    L = load_lattice(args)
    _emit_ideal(args, product_ideal(L, _graver(args, L)))
    return EXIT_OK


def cmd_radical(args) -> int:
    L = load_lattice(args)
    M = matroid_radical(L) if args.via == "matroid" else radical(_vertex_ideal(args, L))
    _emit_ideal(args, M)
    return EXIT_OK


def _ideal_for(args) -> MonomialIdeal:
    L = load_lattice(args)
    return product_ideal(L, _graver(args, L)) if args.ideal == "product" else _vertex_ideal(args, L)


def cmd_std_pairs(args) -> int:
    M = _ideal_for(args)
    pairs = standard_pairs(M)
    lines = [" ".join(map(str, p.root)) + " | " + " ".join(str(i) for i in sorted(p.free)) for p in pairs]
    payload = [{"root": list(p.root), "free": sorted(p.free)} for p in pairs]
    if args.pretty and not args.json:
        lines = [str(p) for p in pairs]
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_irr_decomp(args) -> int:
    M = _ideal_for(args)
    comps = irreducible_decomposition(M)
    lines = [str(c) if args.pretty else " ".join(f"{i}:{a}" for i, a in c.exponents) for c in comps]
    _emit(args, "\n".join(lines), [[list(e) for e in c.exponents] for c in comps])
    return EXIT_OK


def cmd_assoc_primes(args) -> int:
    M = _ideal_for(args)
    primes = sorted(associated_primes(M), key=lambda P: (len(P), sorted(P)))
    lines = [prime_str(P, M.n) if args.pretty else " ".join(map(str, sorted(P))) for P in primes]
    _emit(args, "\n".join(lines), [sorted(P) for P in primes])
    return EXIT_OK


def cmd_top(args) -> int:
    _emit_ideal(args, top(_ideal_for(args)))
    return EXIT_OK


def _weight(args, n: int):
    if not args.weight:
        raise ValueError("--weight is required")
    w = parse_weight(args.weight)
    if len(w) != n:
        raise ValueError(f"weight needs {n} entries")
    return w


def cmd_initial(args) -> int:
    L = load_lattice(args)
    gb = reduced_gb(L, _weight(args, L.n), _graver(args, L))
    if not gb.generic:
        print("# weight is not generic; ties broken by degree then lex", file=sys.stderr)
    if args.json:
        payload = _ideal_payload(gb.initial_ideal())
        payload["generic"] = gb.generic
        payload["basis"] = [[list(e.lead), list(e.trail)] for e in gb.elements]
        print(json.dumps(payload, sort_keys=True))
    else:
        _emit_ideal(args, gb.initial_ideal())
    return EXIT_OK


def cmd_cone(args) -> int:
    L = load_lattice(args)
    cone = groebner_cone(reduced_gb(L, _weight(args, L.n), _graver(args, L)))
    if args.json:
        print(json.dumps({"facets": [list(f) for f in cone.facets], "count": cone.facet_count,
                          "generic": cone.generic}, sort_keys=True))
    elif args.count_facets:
        print(f"facets: {cone.facet_count}")
    else:
        print("\n".join(" ".join(map(str, f)) + " <= 0" for f in cone.facets))
    return EXIT_OK


def cmd_fan(args) -> int:
    L = load_lattice(args)
    cones = enumerate_fan(L, budget=args.max_cones, graver=_graver(args, L))
    if args.json:
        print(json.dumps([_ideal_payload(c.ideal) for c in cones], sort_keys=True))
    else:
        print(f"cones: {len(cones)}")
        for c in cones:
            print(str(c.ideal) if args.pretty else " ; ".join(" ".join(map(str, g)) for g in c.ideal.generators))
    return EXIT_OK


def _parse_degrees(text: str) -> list:
    out = []
    for part in text.split(";" if ";" in text else ","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(tuple(int(x) for x in part.split()) if " " in part else int(part))
    return out


def cmd_hilbert_counts(args) -> int:
    if not args.matrix:
        raise ValueError("hilbert-counts needs --matrix (the grading)")
    A = _read_matrix(args.matrix)
    L = Lattice.from_matrix(A)
    V = _vertex_ideal(args, L)
    counts = hilbert_vertex_counts(V, A.entries, _parse_degrees(args.degrees))
    lines = [" ".join(map(str, c.degree)) + f" {c.count}" + ("" if c.in_semigroup else " not-in-semigroup")
             for c in counts]
    payload = [{"degree": list(c.degree), "count": c.count, "in_semigroup": c.in_semigroup} for c in counts]
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _check(args, L) -> tuple[bool, str]:
    prop = args.property
    G = _graver(args, L)
    if prop == "pl-subset-vl":
        return is_subset(product_ideal(L, G), vertex_ideal_circuits(L, G)), ""
    if prop == "rad-equal":
        P, V, R = radical(product_ideal(L, G)), radical(vertex_ideal_circuits(L, G)), matroid_radical(L)
        return P == V == R, f"rad P_L {P}, rad V_L {V}, matroid {R}"
    if prop == "top-equal":
        return top(product_ideal(L, G)) == top(vertex_ideal_circuits(L, G)), ""
    if prop == "dim2-equal":
        if L.m != 2 or L.n != 2:
            raise ValueError("dim2-equal needs a rank-2 lattice in Z^2")
        return product_ideal(L, G) == vertex_ideal_circuits(L, G), ""
    if prop == "unimodular-equal":
        P, V, R = product_ideal(L, G), vertex_ideal_circuits(L, G), matroid_radical(L)
        return P == V == R, ""
    if prop == "codim2-embedded":
        if not is_pointed(L):
            raise ValueError("codim2-embedded needs a pointed lattice")
        V = vertex_ideal_circuits(L, G)
        bad = embedded_face_violations(L, V)
        full = frozenset(range(L.n)) in associated_primes(V)
        return not bad and not full, f"violations {[sorted(P) for P in bad]}"
    if prop == "dimension-bounds":
        bad = dimension_bounds_report(vertex_ideal_circuits(L, G), L.m)
        return not bad, "; ".join(bad)
    raise ValueError(f"unknown property {prop}")


def cmd_check(args) -> int:
    ok, detail = _check(args, load_lattice(args))
    _emit(args, f"{args.property}: {'pass' if ok else 'fail'}" + (f" ({detail})" if detail and not ok else ""),
          {"property": args.property, "pass": ok, "detail": detail})
    return EXIT_OK if ok else EXIT_INPUT


def cmd_reproduce(args) -> int:
    from .reproduce import REGISTRY, run

    if args.name not in REGISTRY:
        print(f"unknown example {args.name!r}; known: {', '.join(REGISTRY)}", file=sys.stderr)
        return EXIT_INPUT
    checks = run(args.name)
    if args.json:
        print(json.dumps([{"name": c.name, "pass": c.passed, "detail": c.detail} for c in checks]))
    else:
        for c in checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_INPUT


COMMANDS = {
    "graver": (cmd_graver, "Graver basis, canonically ordered"),
    "vertex-ideal": (cmd_vertex_ideal, "vertex ideal V_L"),
    "product-ideal": (cmd_product_ideal, "product ideal P_L"),
    "radical": (cmd_radical, "radical of V_L"),
    "std-pairs": (cmd_std_pairs, "standard pairs"),
    "irr-decomp": (cmd_irr_decomp, "irreducible decomposition"),
    "assoc-primes": (cmd_assoc_primes, "associated primes"),
    "top": (cmd_top, "top-dimensional part"),
    "initial": (cmd_initial, "initial ideal for a weight"),
    "cone": (cmd_cone, "Gröbner cone for a weight"),
    "fan": (cmd_fan, "all initial ideals (Gröbner fan traversal)"),
    "hilbert-counts": (cmd_hilbert_counts, "number of fiber vertices per degree"),
    "check": (cmd_check, "check a structural property"),
    "reproduce": (cmd_reproduce, "rerun a worked example against stored values"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latvert", description="Vertex ideals of lattices.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if name == "reproduce":
            p.add_argument("name")
            p.add_argument("--json", action="store_true")
            continue
        p.add_argument("--matrix", help="A (file or inline like \"[1 2 3]\"); L = ker(A) cap Z^n")
        p.add_argument("--lattice-basis", help="n x m basis matrix B whose columns span L")
        p.add_argument("--json", action="store_true")
        p.add_argument("--pretty", action="store_true", help="print monomials in a, b, c, ...")
        p.add_argument("--budget", type=int, default=None, help="enumeration cap for the main computation")
        p.add_argument("--box", type=int, default=None)
        if name == "vertex-ideal":
            p.add_argument("--method", choices=["circuits", "intersection", "oracle"], default="circuits")
        if name == "radical":
            p.add_argument("--via", choices=["matroid", "supports"], default="supports")
        if name in ("std-pairs", "irr-decomp", "assoc-primes", "top"):
            p.add_argument("--ideal", choices=["vertex", "product"], default="vertex")
        if name in ("initial", "cone"):
            p.add_argument("--weight", required=True)
        if name == "cone":
            p.add_argument("--count-facets", action="store_true")
        if name == "fan":
            p.add_argument("--max-cones", type=int, default=DEFAULT_CONE_BUDGET)
        if name == "hilbert-counts":
            p.add_argument("--degrees", required=True, help='e.g. "0..60" or "3 4; 5 6"')
        if name == "check":
            p.add_argument("--property", required=True, choices=[
                "pl-subset-vl", "rad-equal", "top-equal", "dim2-equal", "unimodular-equal",
                "codim2-embedded", "dimension-bounds",
            ])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"latvert: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LatvertError, ValueError, KeyError, OSError) as exc:
        print(f"latvert: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
