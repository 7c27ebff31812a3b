"""The vertex ideal V_L and the product ideal P_L.

V_L is the monomial ideal whose standard monomials are exactly the vertices
of the fibers of L.  It is computed three independent ways:

* from positive circuits of the Graver basis: minimal sets of Graver
  elements with a strictly positive vanishing combination, each giving the
  lcm of the members' positive parts;
* as the intersection of all monomial initial ideals of I_L;
* by brute force, deciding for every monomial in a box whether it is a
  vertex of its fiber.

P_L is generated by x^{g+} x^{g-} over Graver elements g and sits inside V_L.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded
from .exact import det, linprog, lp_feasible, rank
from .geometry import DEFAULT_POINT_BUDGET
from .graver import GraverBasis, graver_basis
from .groebner import DEFAULT_CONE_BUDGET, enumerate_initial_ideals
from .lattice import Lattice, fiber, origin_is_hull_vertex
from .monomial import (
    MonomialIdeal,
    associated_primes,
    intersect,
    minimalize,
    prime_ideal,
    unit_ideal,
)

Vector = tuple[int, ...]

DEFAULT_SUBSET_BUDGET = 10**8


@dataclass(frozen=True)
class PositiveCircuit:
    """Graver members (indices) with sum_i c_i g_i = 0, all c_i >= 1."""

    members: tuple[int, ...]
    coefficients: tuple[int, ...]
    generator: Vector


def _small_det(M: Sequence[Sequence[int]]) -> int:
    k = len(M)
    if k == 0:
        return 1
    if k == 1:
        return M[0][0]
    if k == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    return det(M)


def _pivot_rows(rows: Sequence[Sequence[int]], k: int) -> tuple[list[int], int]:
    """First k rows (in combination order) with a nonzero k x k minor, and that minor."""
    for sub in combinations(range(len(rows)), k):
        d = _small_det([rows[i] for i in sub])
        if d:
            return list(sub), d
    raise AssertionError("columns are dependent")


def _adjugate(M: Sequence[Sequence[int]]) -> np.ndarray:
    k = len(M)
    if k == 1:
        return np.array([[1]], dtype=np.int64)
    from .exact import adjugate

    return np.array(adjugate([list(r) for r in M]), dtype=np.int64)


def _coords(L: Lattice, G: GraverBasis) -> np.ndarray:
    """Graver elements written in lattice coordinates (rows, m columns)."""
    if not len(G):
        return np.zeros((0, L.m), dtype=np.int64)
    rows, d = _pivot_rows([r for r in L.rows], L.m) if L.m else ([], 1)
    M = [L.rows[i] for i in rows]
    adj = np.array(_adjugate(M), dtype=object)
    V = G.as_array()[:, rows].astype(object)
    Z = V @ adj.T
    if any(x % d for x in Z.ravel()):
        raise AssertionError("Graver element outside the lattice")
    Z = Z // d
    if np.abs(Z).max() > 2**20:
        raise BudgetExceeded("lattice-coordinate size for circuit search", 2**20)
    return Z.astype(np.int64)


class _CircuitSearch:
    """Depth-first search over index-increasing independent subsets of Graver elements.

    With ``ideal`` given, a partial set is abandoned as soon as the lcm of its
    positive parts lies in the ideal; found generators are added on the fly.
    """

    def __init__(self, L: Lattice, G: GraverBasis, ideal: MonomialIdeal | None, budget: int,
                 members: Sequence[int] | None = None):
        self.m = L.m
        self.index = np.arange(len(G)) if members is None else np.array(sorted(members), dtype=np.int64)
        self.Z = _coords(L, G)[self.index]
        self.P = np.maximum(G.as_array(), 0)[self.index]
        self.N = len(self.index)
        bound = int(np.abs(self.Z).max(initial=0)) + 1
        if self.m and (bound ** self.m) * 24 * self.m > 2**62:
            raise BudgetExceeded("int64-safe circuit arithmetic", 2**62)
        self.ideal_gens = [] if ideal is None else [tuple(g) for g in ideal.generators]
        self._gm = None
        self.prune = ideal is not None
        self.found: dict[tuple[int, ...], PositiveCircuit] = {}
        self.budget = budget
        self.spent = 0

    def _in_ideal(self, U: np.ndarray) -> np.ndarray:
        if not self.ideal_gens:
            return np.zeros(len(U), dtype=bool)
        if self._gm is None:
            self._gm = np.array(self.ideal_gens, dtype=np.int64)
        return np.any(np.all(self._gm[None] <= U[:, None, :], axis=2), axis=1)

    def run(self) -> list[PositiveCircuit]:
        if self.m == 0:
            return []
        for i in range(self.N):
            if self.prune and self._in_ideal(self.P[i][None])[0]:
                continue
            self._extend((i,), self.P[i])
        return sorted(self.found.values(), key=lambda c: (len(c.members), c.members))

    def _extend(self, S: tuple[int, ...], lcm_vec: np.ndarray) -> None:
        k = len(S)
        cand = np.arange(S[-1] + 1, self.N)
        if not len(cand):
            return
        self.spent += len(cand)
        if self.spent > self.budget:
            raise BudgetExceeded("positive-circuit subset search", self.budget)
        lcms = np.maximum(self.P[cand], lcm_vec)
        if self.prune:
            alive = ~self._in_ideal(lcms)
            cand, lcms = cand[alive], lcms[alive]
            if not len(cand):
                return
        Sm = self.Z[list(S)].T  # m x k
        rows, d = _pivot_rows(Sm.tolist(), k)
        adj = _adjugate(Sm[rows].tolist())
        rhs = -self.Z[cand]
        C = rhs[:, rows] @ adj.T  # each row: d * coefficients
        in_span = np.all(C @ Sm.T == d * rhs, axis=1)
        sd = 1 if d > 0 else -1
        positive = in_span & np.all(C * sd > 0, axis=1)
        for idx in np.flatnonzero(positive):
            if self.prune and self._in_ideal(lcms[idx][None])[0]:
                continue
            coeffs = [int(x) * sd for x in C[idx]] + [abs(d)]
            g = 0
            for c in coeffs:
                g = gcd(g, c)
            gen = tuple(int(x) for x in lcms[idx])
            members = tuple(int(self.index[t]) for t in S + (int(cand[idx]),))
            self.found[members] = PositiveCircuit(members, tuple(c // g for c in coeffs), gen)
            if self.prune:
                self.ideal_gens.append(gen)
                self._gm = None
        if k + 1 > self.m:
            return
        for idx in np.flatnonzero(~in_span):
            lv = lcms[idx]
            if self.prune and self._in_ideal(lv[None])[0]:
                continue
            self._extend(S + (int(cand[idx]),), lv)


def positive_circuits(L: Lattice, graver: GraverBasis | None = None, budget: int = DEFAULT_SUBSET_BUDGET) -> list[PositiveCircuit]:
    """Every positive circuit of the Graver basis (no pruning)."""
    G = graver_basis(L) if graver is None else graver
    return _CircuitSearch(L, G, None, budget).run()


def has_nonnegative_dependency(vectors: np.ndarray) -> bool:
    """Is there c >= 0, c != 0 with sum_j c_j v_j = 0?  (Exact LP.)"""
    if not len(vectors):
        return False
    k, n = vectors.shape
    A_eq = [[int(vectors[j][i]) for j in range(k)] for i in range(n)] + [[1] * k]
    res = linprog([0] * k, A_eq=A_eq, b_eq=[0] * n + [1], nonneg=True)
    return res.status != "infeasible"


def product_ideal(L: Lattice, graver: GraverBasis | None = None) -> MonomialIdeal:
    """P_L = <x^{g+} x^{g-} : g in the Graver basis>."""
    G = graver_basis(L) if graver is None else graver
    if not len(G):
        return MonomialIdeal(L.n, ())
    return minimalize((tuple(abs(x) for x in g) for g in G), L.n)


def vertex_ideal_circuits(
    L: Lattice, graver: GraverBasis | None = None, budget: int = DEFAULT_SUBSET_BUDGET
) -> MonomialIdeal:
    """V_L, generated by the lcms of positive parts over positive circuits of the Graver basis.

    Starts from P_L (the two-element circuits {g, -g}) and only searches where
    a new generator can appear.  Every standard monomial of the current ideal
    lies in the box of one of its irreducible components; a circuit whose lcm
    is new has all its members' positive parts inside such a box, and the
    members then carry a nonnegative dependency.  Boxes whose Graver elements
    admit none (an exact LP) are skipped; the rest are searched for circuits,
    and the loop repeats until every box is certified empty.
    """
    from .monomial import irreducible_decomposition

    G = graver_basis(L) if graver is None else graver
    if not len(G):
        return MonomialIdeal(L.n, ())
    I = product_ideal(L, G)
    P = np.maximum(G.as_array(), 0)
    cap = P.max(axis=0)
    searched: set[tuple[int, ...]] = set()
    while True:
        changed = False
        for comp in irreducible_decomposition(I):
            w = cap.copy()
            for i, a in comp.exponents:
                w[i] = min(w[i], a - 1)
            members = np.flatnonzero(np.all(P <= w, axis=1))
            key = tuple(int(x) for x in members)
            if key in searched or len(members) < 2:
                continue
            searched.add(key)
            if not has_nonnegative_dependency(G.as_array()[members]):
                continue
            search = _CircuitSearch(L, G, I, budget, members)
            search.run()
            new = minimalize(search.ideal_gens, L.n)
            if new != I:
                I = new
                changed = True
                break
        if not changed:
            return I


def vertex_ideal_intersection(
    L: Lattice, graver: GraverBasis | None = None, budget: int = DEFAULT_CONE_BUDGET
) -> MonomialIdeal:
    """V_L as the intersection of all monomial initial ideals of I_L."""
    if L.m == 0:
        return MonomialIdeal(L.n, ())
    ideals = enumerate_initial_ideals(L, budget, graver)
    return intersect(*ideals)


def vertex_ideal_oracle(L: Lattice, box: int, budget: int = DEFAULT_POINT_BUDGET) -> set[Vector]:
    """Monomials of [0, box]^n that are vertices of their fibers.

    Fibers are enumerated once each and reused for every box point they contain.
    """
    n = L.n
    decided: dict[Vector, bool] = {}
    grid = np.stack(
        [g.ravel() for g in np.meshgrid(*[np.arange(box + 1)] * n, indexing="ij")], axis=1
    )
    for u in grid:
        u = tuple(int(x) for x in u)
        if u in decided:
            continue
        F = fiber(L, u, budget)
        verts = set(F.vertices)
        for p in F.points:
            if max(p) <= box:
                decided[p] = p in verts
    return {u for u, isv in decided.items() if isv}


def standard_in_box(M: MonomialIdeal, box: int) -> set[Vector]:
    """Monomials of [0, box]^n outside M."""
    n = M.n
    grid = np.stack(
        [g.ravel() for g in np.meshgrid(*[np.arange(box + 1)] * n, indexing="ij")], axis=1
    )
    if M.generators:
        Gm = np.array(M.generators, dtype=np.int64)
        inside = np.any(np.all(Gm[None] <= grid[:, None, :], axis=2), axis=1)
    else:
        inside = np.zeros(len(grid), dtype=bool)
    return {tuple(int(x) for x in u) for u in grid[~inside]}


def row_bases(L: Lattice) -> list[tuple[int, ...]]:
    """Size-m sets of rows of B that are linearly independent."""
    return [s for s in combinations(range(L.n), L.m) if rank([L.rows[i] for i in s]) == L.m]


def matroid_facets(L: Lattice) -> list[frozenset[int]]:
    """Facets of the independence complex: complements of row bases."""
    return sorted(
        (frozenset(set(range(L.n)) - set(s)) for s in row_bases(L)), key=lambda f: sorted(f)
    )


def matroid_radical(L: Lattice) -> MonomialIdeal:
    """Intersection of <x_i : i in s> over all row bases s of B."""
    bases = row_bases(L)
    if not bases:
        return unit_ideal(L.n)
    return intersect(*[prime_ideal(L.n, s) for s in bases])


def verify_standard_pair(
    L: Lattice, u: Sequence[int], tau: Iterable[int], budget: int = DEFAULT_POINT_BUDGET
) -> bool:
    """Geometric test for (x^u, tau) being a standard pair of V_L.

    The origin must be a vertex of the integer hull with the rows outside tau,
    and stop being one whenever any single one of those rows is dropped.
    """
    u = tuple(int(x) for x in u)
    tau = set(tau)
    if any(u[i] for i in tau):
        return False
    keep = [i for i in range(L.n) if i not in tau]
    if not origin_is_hull_vertex(L, u, keep, budget):
        return False
    for i in keep:
        if origin_is_hull_vertex(L, u, [j for j in keep if j != i], budget):
            return False
    return True


def dimension_bounds_report(M: MonomialIdeal, m: int) -> list[str]:
    """Associated primes violating codim <= min(n, 2^m - 1); expected empty."""
    n = M.n
    cap = min(n, 2**m - 1)
    out = []
    for P in sorted(associated_primes(M), key=sorted):
        if len(P) > cap:
            out.append(f"prime on {sorted(P)} has codimension {len(P)} > {cap}")
        if n - len(P) < max(0, n - (2**m - 1)):
            out.append(f"prime on {sorted(P)} has dimension {n - len(P)} below bound")
    return out


def spans_face(L: Lattice, tau: Iterable[int]) -> bool:
    """Is cone{a_i : i in tau} a face of cone(A) containing no other a_j?

    Dually: some strictly positive combination of the rows b_i, i outside tau,
    vanishes.  Only needs the lattice basis.
    """
    tau = set(tau)
    out = [i for i in range(L.n) if i not in tau]
    if not out:
        return True
    # lambda_i >= 1 on the rows outside tau, sum lambda_i b_i = 0
    system = []
    for j in range(L.m):
        row = [0] * L.n
        for i in out:
            row[i] = L.rows[i][j]
        system.append((row, "=", 0))
    for i in range(L.n):
        e = [0] * L.n
        e[i] = 1
        system.append((e, ">=", 1) if i in out else (e, "=", 0))
    return bool(lp_feasible(system, nvars=L.n))


def embedded_face_violations(L: Lattice, V: MonomialIdeal) -> list[frozenset[int]]:
    """Embedded primes of V whose free set tau spans a face of cone(A).

    Each prime is returned by its variable support (the complement of tau).
    """
    primes = associated_primes(V)
    minimal = {P for P in primes if not any(Q < P for Q in primes)}
    bad = []
    for P in primes - minimal:
        tau = set(range(L.n)) - P
        if spans_face(L, tau):
            bad.append(P)
    return sorted(bad, key=sorted)
