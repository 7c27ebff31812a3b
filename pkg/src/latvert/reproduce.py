"""Worked examples with their expected values, runnable as pass/fail reports.

Each entry recomputes its quantities from scratch and compares them with
the values stored here.  ``run(name)`` returns a list of Check records.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graver import graver_basis
from .groebner import enumerate_initial_ideals, groebner_cone, reduced_gb
from .lattice import Lattice, is_critical, origin_is_hull_vertex, r_polyhedron
from .monomial import (
    associated_primes,
    eventual_period,
    hilbert_vertex_counts,
    intersect,
    irreducible_decomposition,
    is_subset,
    parse_ideal_names,
    parse_monomial,
    radical,
    top,
)
from .vertex_ideal import (
    matroid_facets,
    matroid_radical,
    product_ideal,
    vertex_ideal_circuits,
    vertex_ideal_intersection,
    verify_standard_pair,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _eq(name: str, got, want) -> Check:
    ok = got == want
    return Check(name, ok, "" if ok else f"got {got}, expected {want}")


def _primes(text: str, n: int) -> set[frozenset[int]]:
    """"ab, ac" -> {{0,1},{0,2}}."""
    return {frozenset(i for i, e in enumerate(parse_monomial(t, n)) if e) for t in text.split(",")}


def ex_123() -> list[Check]:
    L = Lattice.from_matrix([[1, 2, 3]])
    V_expected = parse_ideal_names("abc, a^2b, a^3c, b^3c^2", 3)
    Vc = vertex_ideal_circuits(L)
    Vi = vertex_ideal_intersection(L)
    comps = [c.as_ideal() for c in irreducible_decomposition(Vc)]
    primary = [parse_ideal_names(s, 3) for s in ("a^3, ab, b^3", "a^2, ac, c^2", "b, c")]
    init = reduced_gb(L, (100, 10, 1)).initial_ideal()
    return [
        _eq("V_L via circuits", Vc, V_expected),
        _eq("V_L via initial ideals", Vi, V_expected),
        _eq("Ass(V_L)", associated_primes(Vc), _primes("ab, ac, bc", 3)),
        _eq("components re-intersect to primary decomposition", intersect(*comps), intersect(*primary)),
        _eq("in_w(I_L), w=(100,10,1)", init, parse_ideal_names("a^2, ab, ac, b^3", 3)),
        _eq("Ass(in_w(I_L))", associated_primes(init), _primes("ab, abc", 3)),
    ]


def ex_345() -> list[Check]:
    L = Lattice.from_matrix([[3, 4, 5]])
    P = product_ideal(L)
    V = vertex_ideal_circuits(L)
    return [
        _eq("P_L", P, parse_ideal_names("ab^2c, a^2bc^2, a^3bc, a^4b^3, a^5c^3, b^5c^4", 3)),
        _eq("V_L", V, parse_ideal_names("ab^2c, a^2bc, a^4b^3, a^5c^3, b^5c^4", 3)),
        Check("P_L strictly inside V_L", is_subset(P, V) and P != V),
    ]


RANK3_BASIS = [[1, 4, 3], [-2, 0, 5], [-1, 1, -9]]
RANK3_P = (
    "ab^2c, a^4c, a^5b^2, b^8c^5, abc^12, b^3c^11, b^19c, ab^21, a^4b^19, ac^26, "
    "a^3c^25, b^2c^27, bc^38, a^49b, c^103, b^103, a^103"
)
RANK3_V = "c^3, ab^2c, a^4c, a^5b^2, b^19c, ab^21, a^4b^19, a^49b, b^103, a^103"


def rank3_lattice() -> list[Check]:
    L = Lattice.from_basis(RANK3_BASIS)
    G = graver_basis(L)
    P = product_ideal(L, G)
    V = vertex_ideal_circuits(L, G)
    return [
        _eq("P_L", P, parse_ideal_names(RANK3_P, 3)),
        _eq("V_L", V, parse_ideal_names(RANK3_V, 3)),
        Check("P_L strictly inside V_L", is_subset(P, V) and P != V),
        Check("Top(P_L) = P_L", top(P) == P),
        Check("Top(V_L) = V_L", top(V) == V),
        Check("Top(P_L) != Top(V_L)", top(P) != top(V)),
    ]


CRITICAL_BASIS = [[-4, -3, -3], [-6, 9, -2], [9, -6, -2], [-2, -2, 3]]
CRITICAL_U = (9, 7, 7, 1)
CRITICAL_VERTICES = {(0, 0, 0), (0, 0, -3), (1, 0, 1), (0, 1, 1), (3, 3, 1), (23, 23, 31)}


def critical_tetrahedron() -> list[Check]:
    L = Lattice.from_basis(CRITICAL_BASIS)
    R = r_polyhedron(L, CRITICAL_U)
    checks = [_eq("vertices of R_u", set(R.hull_vertices), CRITICAL_VERTICES)]
    for i in range(4):
        keep = [j for j in range(4) if j != i]
        checks.append(
            Check(f"origin not a vertex after dropping row {i + 1}", not origin_is_hull_vertex(L, CRITICAL_U, keep))
        )
    checks.append(Check("Q_u critical", is_critical(L, CRITICAL_U)))
    checks.append(Check("(x^u, {}) standard pair", verify_standard_pair(L, CRITICAL_U, [])))
    return checks


FOUR_VAR_A = [[15, 247, 248, 345]]
FOUR_VAR_W = (111, 0, 342, 1)
FOUR_VAR_GB = [
    "a^{23}-d", "da^{10}-bc", "d^{12}a^4-b^{16}c", "d^{55}a^3-b^{76}c", "d^{161}a^2-b^{225}",
    "d^{204}a-b^{285}", "d^{247}-b^{345}", "cd^9a^7-b^{14}", "cd^{20}a-b^{29}", "cd^{63}-b^{89}",
    "c^2d^8-b^{13}a^3", "c^4d^5-b^{11}", "c^5d^4-b^{10}a^{10}", "c^6d^2a^3-b^9", "c^7a^{16}-b^8",
    "c^7d-b^8a^7", "c^8-b^7a^{17}", "bca^{13}-d^2", "b^2c^2a^3-d^3", "b^3c^3-d^4a^7",
    "b^9a^{20}-c^6d^3", "b^{12}a^{13}-c^3d^7", "b^{15}a^6-d^{11}", "b^{31}ca^2-d^{23}", "b^{44}a^5-cd^{31}",
    "b^{47}c^2-d^{35}a^2", "b^{60}a-d^{43}", "b^{136}c-d^{98}a^2",
]
# each row h means h.w <= 0
FOUR_VAR_FACETS = [(0, 345, 0, -247), (-20, -9, 6, 3), (2, -136, -1, 98), (-3, 76, 1, -55), (7, -3, -3, 4)]


def parse_binomial(text: str, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lead, trail = text.split("-")
    return parse_monomial(lead, n), parse_monomial(trail, n)


def four_var_cone() -> list[Check]:
    L = Lattice.from_matrix(FOUR_VAR_A)
    gb = reduced_gb(L, FOUR_VAR_W)
    got = {(e.lead, e.trail) for e in gb.elements}
    want = {parse_binomial(t, 4) for t in FOUR_VAR_GB}
    cone = groebner_cone(gb)
    return [
        _eq("reduced Gröbner basis size", len(gb), 28),
        _eq("reduced Gröbner basis", got, want),
        _eq("facet count", cone.facet_count, 5),
        _eq("facets", set(cone.facets), set(FOUR_VAR_FACETS)),
    ]


SIX_FACET_A = [
    [1, 1, 1, 1, 1, 1, 1],
    [2, 8, 9, 7, 10, 6, 5],
    [8, 7, 4, 8, 7, 2, 2],
    [5, 9, 4, 2, 9, 8, 3],
]
SIX_FACET_W = (252, 197, 0, 0, 153, 0, 0)


def ex_6facet() -> list[Check]:
    L = Lattice.from_matrix(SIX_FACET_A)
    cone = groebner_cone(reduced_gb(L, SIX_FACET_W))
    return [_eq("facet count", cone.facet_count, 6)]


SEGRE_A = [
    [1, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1],
    [1, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 1],
]


def segre_3() -> list[Check]:
    L = Lattice.from_matrix(SEGRE_A)
    G = graver_basis(L)
    P, V, R = product_ideal(L, G), vertex_ideal_circuits(L, G), matroid_radical(L)
    inits = enumerate_initial_ideals(L, graver=G)
    return [
        Check("P_L = V_L = matroid ideal", P == V == R),
        Check("all initial ideals squarefree", all(radical(I) == I for I in inits)),
        _eq("matroid complex facets", len(matroid_facets(L)), 12),
        Check("at least 3! initial ideals", len(inits) >= 6, f"found {len(inits)}"),
    ]


def periodicity_123() -> list[Check]:
    L = Lattice.from_matrix([[1, 2, 3]])
    V = vertex_ideal_circuits(L)
    counts = [c.count for c in hilbert_vertex_counts(V, [[1, 2, 3]], range(61))]
    tail = counts[20:]
    p = eventual_period(tail)
    return [Check("vertex counts eventually periodic, period | 6", p is not None and 6 % p == 0, f"period {p}")]


REGISTRY: dict[str, Callable[[], list[Check]]] = {
    "ex-123": ex_123,
    "ex-345": ex_345,
    "ex-4.3": rank3_lattice,
    "ex-3.12": critical_tetrahedron,
    "thm-3.13": four_var_cone,
    "ex-6facet": ex_6facet,
    "segre-3": segre_3,
    "periodicity-123": periodicity_123,
}


def run(name: str) -> list[Check]:
    if name not in REGISTRY:
        raise KeyError(name)
    return REGISTRY[name]()
