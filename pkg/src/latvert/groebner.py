"""Reduced Gröbner bases of lattice ideals, Gröbner cones, and the Gröbner fan.

A binomial x^a - x^b of I_L is stored as the lattice vector a - b.  Terms
are compared by the weight first, then by total degree, then
lexicographically (first differing variable).  The Graver basis contains
every reduced Gröbner basis, so a reduced basis is read off by taking the
minimal leading terms among the oriented Graver elements and reducing each
one's trailing term to normal form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm as int_lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, NonPositiveWeight, UnboundedFiber
from .exact import irredundant_inequalities, lp_feasible, primitive_rational
from .graver import GraverBasis, graver_basis
from .lattice import Lattice, is_pointed
from .monomial import MonomialIdeal, grlex_key, minimalize

Vector = tuple[int, ...]

DEFAULT_CONE_BUDGET = 10**5


def parse_weight(text: str | Sequence) -> tuple[Fraction, ...]:
    """Weights as rationals, from "1,2/3,4" or a sequence."""
    if isinstance(text, str):
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    return tuple(Fraction(p) for p in parts)


def _integral(w: Sequence) -> tuple[int, ...]:
    w = [Fraction(x) for x in w]
    den = 1
    for x in w:
        den = int_lcm(den, x.denominator)
    return tuple(int(x * den) for x in w)


def _sign(x) -> int:
    return int(x > 0) - int(x < 0)


def compare_key(w: Sequence[int], g: Sequence[int]) -> int:
    """Sign of x^{g+} versus x^{g-} in the refined order (w, degree, lex)."""
    s = _sign(sum(a * b for a, b in zip(w, g)))
    if s:
        return s
    s = _sign(sum(g))
    if s:
        return s
    for x in g:
        if x:
            return _sign(x)
    return 0


@dataclass(frozen=True, order=True)
class MarkedVector:
    """Binomial x^lead - x^trail with lead the larger term."""

    lead: Vector
    trail: Vector

    @property
    def vector(self) -> Vector:
        return tuple(a - b for a, b in zip(self.lead, self.trail))

    def __str__(self) -> str:
        from .monomial import monomial_str

        return f"{monomial_str(self.lead)} - {monomial_str(self.trail)}"


def marked(g: Sequence[int]) -> MarkedVector:
    """Mark g with its positive part leading."""
    return MarkedVector(tuple(max(x, 0) for x in g), tuple(max(-x, 0) for x in g))


@dataclass(frozen=True)
class ReducedGB:
    weight: tuple[Fraction, ...]
    elements: tuple[MarkedVector, ...]
    generic: bool  # False when the tie-break decided some element

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def initial_ideal(self) -> MonomialIdeal:
        n = len(self.weight)
        return minimalize((e.lead for e in self.elements), n)


def check_weight(L: Lattice, w: Sequence) -> None:
    """Raise NonPositiveWeight unless w.u > 0 for every nonzero u in L cap N^n."""
    if L.m == 0:
        return
    wi = _integral(w)
    wB = [sum(a * row[j] for a, row in zip(wi, L.rows)) for j in range(L.m)]
    system = [(row, ">=", 0) for row in L.rows]
    system.append(([sum(row[j] for row in L.rows) for j in range(L.m)], ">=", 1))
    system.append((wB, "<=", 0))
    if lp_feasible(system, nvars=L.m):
        raise NonPositiveWeight("weight is not positive on the nonnegative part of the lattice")


def _oriented(G: np.ndarray, w: Sequence[int]) -> np.ndarray:
    """Flip every row of G so that its positive part is the leading term."""
    if not len(G):
        return G
    wv = np.array(w, dtype=object)
    key = (G.astype(object) @ wv)
    sgn = np.array([_sign(k) for k in key], dtype=np.int64)
    tie = sgn == 0
    if tie.any():
        deg = G[tie].sum(axis=1)
        s2 = np.sign(deg)
        first = np.array([_sign(next((x for x in g if x), 0)) for g in G[tie]], dtype=np.int64)
        sgn[tie] = np.where(s2 != 0, s2, first)
    return G * sgn[:, None]


def _normal_form(beta: np.ndarray, leads: np.ndarray, H: np.ndarray) -> np.ndarray:
    while True:
        hit = np.flatnonzero(np.all(leads <= beta, axis=1))
        if not len(hit):
            return beta
        beta = beta - H[hit[0]]


def reduced_gb(
    L: Lattice, w: Sequence, graver: GraverBasis | None = None, check: bool = True
) -> ReducedGB:
    """Reduced Gröbner basis of I_L for the weight w refined by degree and lex."""
    w = tuple(Fraction(x) for x in w)
    if len(w) != L.n:
        raise ValueError("weight length must equal n")
    if check:
        check_weight(L, w)
    wi = _integral(w)
    if graver is None:
        graver = graver_basis(L)
    G = graver.as_array()
    if not len(G):
        return ReducedGB(w, (), True)
    H = _oriented(G, wi)
    H = np.unique(H, axis=0)
    leads = np.maximum(H, 0)
    init = minimalize((tuple(int(x) for x in r) for r in leads), L.n)
    elements = []
    generic = True
    for alpha in init.generators:
        a = np.array(alpha, dtype=np.int64)
        row = np.flatnonzero(np.all(leads == a, axis=1))[0]
        beta = _normal_form(a - H[row], leads, H)
        mv = MarkedVector(alpha, tuple(int(x) for x in beta))
        if sum(x * y for x, y in zip(wi, mv.vector)) == 0:
            generic = False
        elements.append(mv)
    elements.sort(key=lambda e: grlex_key(e.lead))
    return ReducedGB(w, tuple(elements), generic)


def initial_ideal(L: Lattice, w: Sequence, graver: GraverBasis | None = None) -> MonomialIdeal:
    """Initial ideal of I_L; monomial because ties are broken by degree then lex.

    Use ``reduced_gb(...).generic`` to learn whether w alone was enough.
    """
    return reduced_gb(L, w, graver).initial_ideal()


@dataclass(frozen=True)
class GroebnerCone:
    """Closed cone {w' : h.w' <= 0 for h in facets}."""

    weight: tuple[Fraction, ...]
    facets: tuple[Vector, ...]
    generic: bool

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    def contains(self, w: Sequence, strict: bool = False) -> bool:
        vals = [sum(Fraction(a) * b for a, b in zip(w, h)) for h in self.facets]
        return all(v < 0 for v in vals) if strict else all(v <= 0 for v in vals)


def cone_inequalities(gb: ReducedGB) -> list[Vector]:
    """One halfspace trail - lead (meaning (trail - lead).w <= 0) per basis element."""
    return [tuple(t - l for l, t in zip(e.lead, e.trail)) for e in gb.elements]


def groebner_cone(gb: ReducedGB) -> GroebnerCone:
    facets = irredundant_inequalities(cone_inequalities(gb)) if gb.elements else []
    return GroebnerCone(gb.weight, tuple(facets), gb.generic)


def _moment_direction(f: Sequence[int], others: np.ndarray) -> tuple[Fraction, ...]:
    """A direction in the hyperplane f^perp not orthogonal to any projected row of ``others``."""
    n = len(f)
    ff = sum(x * x for x in f)
    for t in range(2, 10**6):
        v = [t**k for k in range(n)]
        vf = sum(a * b for a, b in zip(v, f))
        d = [Fraction(a * ff - vf * b, ff) for a, b in zip(v, f)]
        if all(sum(a * b for a, b in zip(d, g)) != 0 for g in others):
            return tuple(d)
    raise AssertionError("no generic direction found")


def _parallel(g: Sequence[int], f: Sequence[int]) -> bool:
    return primitive_rational(g) in (tuple(f), tuple(-x for x in f))


def flip_weight(cone: GroebnerCone, facet: Sequence[int], hyperplanes: np.ndarray) -> tuple[Fraction, ...]:
    """A generic weight just across ``facet`` from ``cone``.

    Picks a point strictly inside the facet, moves it inside the facet hyperplane
    off every other hyperplane g.w = 0, then steps outward by half of the exact
    distance at which any of those signs could change.
    """
    f = tuple(facet)
    n = len(f)
    rest = [h for h in cone.facets if tuple(h) != f]
    res = lp_feasible([(f, "=", 0)] + [(h, "<=", -1) for h in rest], nvars=n)
    if not res:
        raise AssertionError("facet has empty relative interior")
    p = list(res.witness)
    others = np.array([g for g in hyperplanes if not _parallel(g, f)], dtype=object).reshape(-1, n)
    d = _moment_direction(f, others)
    # stay strictly inside the other facets
    limit = None
    for h in rest:
        hd = sum(a * b for a, b in zip(h, d))
        if hd > 0:
            q = -sum(a * b for a, b in zip(h, p)) / hd
            limit = q if limit is None or q < limit else limit
    delta = Fraction(1) if limit is None else limit / 2
    hits = set()
    for g in others:
        gd = sum(a * b for a, b in zip(g, d))
        hits.add(-sum(a * b for a, b in zip(g, p)) / gd)
    while delta in hits:
        delta /= 2
    wf = [a + delta * b for a, b in zip(p, d)]
    eps = None
    for g in others:
        gf = sum(a * b for a, b in zip(g, f))
        if gf:
            q = abs(sum(a * b for a, b in zip(g, wf))) / abs(gf)
            eps = q if eps is None or q < eps else eps
    eps = Fraction(1) if eps is None else eps / 2
    return tuple(a + eps * b for a, b in zip(wf, f))


@dataclass(frozen=True)
class FanCone:
    ideal: MonomialIdeal
    gb: ReducedGB
    cone: GroebnerCone


def enumerate_fan(
    L: Lattice, budget: int = DEFAULT_CONE_BUDGET, graver: GraverBasis | None = None,
    start: Sequence | None = None,
) -> list[FanCone]:
    """All maximal cones of the Gröbner fan of I_L by breadth-first facet flips.

    Requires a pointed lattice.  Raises BudgetExceeded after ``budget`` cones.
    """
    if not is_pointed(L):
        raise UnboundedFiber("fan traversal needs a pointed lattice")
    if graver is None:
        graver = graver_basis(L)
    hyper = [tuple(g) for g in graver if canonical_half(g)]
    hyper_arr = np.array(hyper, dtype=object).reshape(len(hyper), L.n)
    w0 = tuple(Fraction(1) for _ in range(L.n)) if start is None else tuple(Fraction(x) for x in start)
    gb = reduced_gb(L, w0, graver, check=False)
    first = FanCone(gb.initial_ideal(), gb, groebner_cone(gb))
    seen = {first.ideal.generators: first}
    queue = deque([first])
    while queue:
        fc = queue.popleft()
        for f in fc.cone.facets:
            w = flip_weight(fc.cone, f, hyper_arr)
            gb = reduced_gb(L, w, graver, check=False)
            key = gb.initial_ideal().generators
            if key in seen:
                continue
            if len(seen) >= budget:
                raise BudgetExceeded("Gröbner fan traversal", budget)
            nc = FanCone(gb.initial_ideal(), gb, groebner_cone(gb))
            seen[key] = nc
            queue.append(nc)
    return sorted(seen.values(), key=lambda c: [grlex_key(g) for g in c.ideal.generators])


def canonical_half(g: Sequence[int]) -> bool:
    """True for the representative of {g, -g} whose first nonzero entry is positive."""
    return next(x for x in g if x) > 0


def enumerate_initial_ideals(L: Lattice, budget: int = DEFAULT_CONE_BUDGET, graver: GraverBasis | None = None) -> list[MonomialIdeal]:
    """Distinct monomial initial ideals of I_L, canonically ordered."""
    return [c.ideal for c in enumerate_fan(L, budget, graver)]


def weight_from_cone(cone: GroebnerCone) -> tuple[Fraction, ...]:
    """A rational point strictly inside the cone."""
    n = len(cone.weight)
    res = lp_feasible([(h, "<=", -1) for h in cone.facets], nvars=n)
    return tuple(res.witness)


def minimizes_on_fiber(w: Sequence, points: Iterable[Sequence[int]]) -> list[Vector]:
    """The points of a fiber minimizing w (ties kept)."""
    pts = [tuple(p) for p in points]
    vals = [sum(Fraction(a) * b for a, b in zip(w, p)) for p in pts]
    best = min(vals)
    return [p for p, v in zip(pts, vals) if v == best]
