"""Monomial ideals: minimal generators, intersections, standard pairs, decompositions.

Monomials are exponent vectors in N^n.  An ideal is stored by its unique
minimal generating set, sorted graded-lexicographically.  Variables print as
a, b, c, ... when n <= 26.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, UnitIdeal

Exps = tuple[int, ...]

DEFAULT_PAIR_BUDGET = 10**7


def grlex_key(u: Sequence[int]):
    return (sum(u), tuple(u))


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: Exps

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("monomial exponents must be nonnegative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial | Sequence[int]") -> bool:
        return divides(self.exponents, _exps(other))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return monomial_str(self.exponents)


def _exps(u) -> Exps:
    if isinstance(u, Monomial):
        return u.exponents
    return tuple(int(x) for x in u)


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Sequence[int], v: Sequence[int]) -> Exps:
    return tuple(max(a, b) for a, b in zip(u, v))


def variable_names(n: int) -> list[str]:
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"x{i + 1}" for i in range(n)]


def monomial_str(u: Sequence[int]) -> str:
    names = variable_names(len(u))
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of k[x_1..x_n] given by its minimal monomial generators."""

    n: int
    generators: tuple[Exps, ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, u) -> bool:
        return contains(self, u)

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def monomials(self) -> list[Monomial]:
        return [Monomial(g) for g in self.generators]

    def __str__(self) -> str:
        return "<" + ", ".join(monomial_str(g) for g in self.generators) + ">"


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Unique minimal generating set of the ideal generated by ``gens``."""
    gs = sorted({_exps(g) for g in gens}, key=grlex_key)
    if n is None:
        if not gs:
            raise ValueError("ambient dimension needed for the zero ideal")
        n = len(gs[0])
    if any(len(g) != n for g in gs):
        raise ValueError("generators have inconsistent length")
    if not gs:
        return MonomialIdeal(n, ())
    arr = np.array(gs, dtype=np.int64).reshape(len(gs), n)
    keep: list[int] = []
    for i in range(len(gs)):
        # a divisor has total degree <= ours, so it appears earlier in grlex order
        if keep and np.any(np.all(arr[keep] <= arr[i], axis=1)):
            continue
        keep.append(i)
    return MonomialIdeal(n, tuple(gs[i] for i in keep))


def ideal(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    return minimalize(gens, n)


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def contains(M: MonomialIdeal, u) -> bool:
    u = _exps(u)
    return any(divides(g, u) for g in M.generators)


def _contains_rows(M: MonomialIdeal, U: np.ndarray, free: Sequence[int] = ()) -> np.ndarray:
    """Vectorized membership of rows of U in M with the variables in ``free`` set to 1."""
    if not M.generators:
        return np.zeros(len(U), dtype=bool)
    G = np.array(M.generators, dtype=np.int64)
    if free:
        G = G.copy()
        G[:, list(free)] = 0
    out = np.zeros(len(U), dtype=bool)
    step = max(1, 4_000_000 // max(1, len(G) * M.n))
    for a in range(0, len(U), step):
        out[a:a + step] = np.any(np.all(G[None] <= U[a:a + step, None, :], axis=2), axis=1)
    return out


def _same_n(*ideals: MonomialIdeal) -> int:
    ns = {M.n for M in ideals}
    if len(ns) != 1:
        raise ValueError("ideals live in different polynomial rings")
    return ns.pop()


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection; the empty intersection is not defined."""
    if not ideals:
        raise ValueError("need at least one ideal")
    n = _same_n(*ideals)
    acc = ideals[0]
    for M in ideals[1:]:
        acc = minimalize((lcm(g, h) for g in acc.generators for h in M.generators), n)
    return acc


def add(*ideals: MonomialIdeal) -> MonomialIdeal:
    n = _same_n(*ideals)
    return minimalize((g for M in ideals for g in M.generators), n)


def product_of(M1: MonomialIdeal, M2: MonomialIdeal) -> MonomialIdeal:
    n = _same_n(M1, M2)
    return minimalize((tuple(a + b for a, b in zip(g, h)) for g in M1 for h in M2), n)


def is_subset(M1: MonomialIdeal, M2: MonomialIdeal) -> bool:
    """M1 contained in M2."""
    return all(contains(M2, g) for g in M1.generators)


def radical(M: MonomialIdeal) -> MonomialIdeal:
    return minimalize((tuple(int(e > 0) for e in g) for g in M.generators), M.n)


def localize(M: MonomialIdeal, sigma: Iterable[int]) -> MonomialIdeal:
    """Set the variables in ``sigma`` to 1; the result lives in the remaining variables."""
    sigma = set(sigma)
    rest = [i for i in range(M.n) if i not in sigma]
    return minimalize((tuple(g[i] for i in rest) for g in M.generators), len(rest))


def prime_ideal(n: int, support: Iterable[int]) -> MonomialIdeal:
    """The prime <x_i : i in support>."""
    return minimalize((tuple(int(j == i) for j in range(n)) for i in support), n)


@dataclass(frozen=True, order=True)
class StandardPair:
    """The monomial set x^root * k[x_i : i in free]."""

    root: Exps
    free: frozenset[int]

    def __post_init__(self):
        if any(self.root[i] for i in self.free):
            raise ValueError("root must not involve free variables")

    def covers(self, w: Sequence[int]) -> bool:
        return all(w[i] == r for i, r in enumerate(self.root) if i not in self.free) and all(
            w[i] >= 0 for i in self.free
        )

    def __str__(self) -> str:
        names = variable_names(len(self.root))
        return f"({monomial_str(self.root)}, {{{','.join(names[i] for i in sorted(self.free))}}})"


def _require_proper(M: MonomialIdeal) -> None:
    if M.is_unit:
        raise UnitIdeal("the unit ideal has no standard monomials")


def _pair_sort_key(p: StandardPair):
    return (-len(p.free), sorted(p.free), grlex_key(p.root))


def _staircase(M: MonomialIdeal, tau, comp, D, budget: int) -> np.ndarray:
    """Points u supported on ``comp`` with u_i < D_i and x^u outside M localized at tau.

    Built one coordinate at a time; a prefix already in the ideal is dropped,
    since every extension of it is in the ideal too.
    """
    U = np.zeros((1, M.n), dtype=np.int64)
    if _contains_rows(M, U, tau)[0]:
        return U[:0]
    for i in comp:
        reps = np.repeat(U, D[i], axis=0)
        reps[:, i] = np.tile(np.arange(D[i], dtype=np.int64), len(U))
        if len(reps) > budget:
            raise BudgetExceeded("standard-pair candidate enumeration", budget)
        U = reps[~_contains_rows(M, reps, tau)]
    return U


def standard_pairs(M: MonomialIdeal, budget: int = DEFAULT_PAIR_BUDGET) -> list[StandardPair]:
    """All standard pairs of M.

    (u, tau) is standard iff x^u is outside M with the tau-variables set to 1,
    and for each i outside tau, x^u with x_i set to 1 lies in M with tau and i
    set to 1.  Roots satisfy u_i < max exponent of x_i among the generators.
    """
    _require_proper(M)
    n = M.n
    gens = M.generators
    D = [max((g[i] for g in gens), default=0) for i in range(n)]
    out: list[StandardPair] = []
    spent = 0
    for k in range(n, -1, -1):
        for tau in combinations(range(n), k):
            tset = set(tau)
            if any(all(g[i] == 0 for i in range(n) if i not in tset) for g in gens):
                continue  # M localized at tau is the unit ideal
            comp = [i for i in range(n) if i not in tset]
            if any(D[i] == 0 for i in comp):
                continue  # a free x_i could join tau, so nothing here is maximal
            U = _staircase(M, tau, comp, D, budget - spent)
            spent += len(U)
            ok = np.ones(len(U), dtype=bool)
            for i in comp:
                if not ok.any():
                    break
                V = U.copy()
                V[:, i] = 0
                ok &= _contains_rows(M, V, tau + (i,))
            for row in U[ok]:
                out.append(StandardPair(tuple(int(x) for x in row), frozenset(tau)))
    return sorted(out, key=_pair_sort_key)


def standard_monomials(M: MonomialIdeal, max_degree: int) -> list[Exps]:
    """Monomials of total degree <= max_degree outside M (brute force)."""
    out = []
    for u in product(range(max_degree + 1), repeat=M.n):
        if sum(u) <= max_degree and not contains(M, u):
            out.append(u)
    return out


def associated_primes(M: MonomialIdeal) -> set[frozenset[int]]:
    """Associated primes, each given by the variables it contains."""
    _require_proper(M)
    if M.is_zero:
        return {frozenset()}
    return {c.support for c in irreducible_decomposition(M)}


def prime_str(support: Iterable[int], n: int) -> str:
    names = variable_names(n)
    return "<" + ",".join(names[i] for i in sorted(support)) + ">"


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal <x_i^{a_i} : i in support>."""

    n: int
    exponents: tuple[tuple[int, int], ...]  # sorted (variable, power) pairs

    def __post_init__(self):
        if any(a < 1 for _, a in self.exponents):
            raise ValueError("component exponents must be positive")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.exponents)

    def as_ideal(self) -> MonomialIdeal:
        return minimalize(
            (tuple(a if j == i else 0 for j in range(self.n)) for i, a in self.exponents), self.n
        )

    def __str__(self) -> str:
        names = variable_names(self.n)
        return "<" + ",".join(names[i] if a == 1 else f"{names[i]}^{a}" for i, a in self.exponents) + ">"


def _component_key(c: IrreducibleComponent):
    return (len(c.exponents), c.exponents)


def _contains_component(c: dict[int, int], d: dict[int, int]) -> bool:
    """Is the pure-power ideal d inside the pure-power ideal c?"""
    return all(i in c and c[i] <= a for i, a in d.items())


def irreducible_decomposition(M: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant irreducible decomposition, verified by re-intersection.

    Generators are added one at a time to a list of pure-power components,
    starting from the zero ideal: a component missing x^g is replaced by its
    sums with x_i^{g_i} over the support of g, and components containing
    another one are discarded.
    """
    _require_proper(M)
    n = M.n
    comps: list[dict[int, int]] = [{}]
    for g in sorted(M.generators, key=grlex_key):
        support = [i for i in range(n) if g[i]]
        kept, split = [], []
        for c in comps:
            if any(i in c and c[i] <= g[i] for i in support):
                kept.append(c)
            else:
                for i in support:
                    d = dict(c)
                    d[i] = g[i]
                    split.append(d)
        split = [dict(t) for t in {tuple(sorted(d.items())) for d in split}]
        fresh = [
            d for d in split
            if not any(_contains_component(d, c) for c in kept)
            and not any(e != d and _contains_component(d, e) for e in split)
        ]
        comps = kept + fresh
    out = sorted(
        {IrreducibleComponent(n, tuple(sorted(c.items()))) for c in comps if c}, key=_component_key
    )
    if out and intersect(*(c.as_ideal() for c in out)) != M:
        raise AssertionError("irreducible components do not re-intersect to the ideal")
    return out


def top(M: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the components whose primes have the largest dimension."""
    comps = irreducible_decomposition(M)
    if not comps:
        return M
    k = min(len(c.exponents) for c in comps)
    return intersect(*[c.as_ideal() for c in comps if len(c.exponents) == k])


def chain_gaps(primes: Iterable[frozenset[int]]) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Pairs P < Q of the given primes with no saturated chain between them inside the set.

    Reported only; the primes of a vertex ideal are not known to form saturated chains.
    """
    ps = set(primes)
    gaps = []
    for P in ps:
        for Q in ps:
            if P < Q:
                level = {P}
                for _ in range(len(Q) - len(P)):
                    level = {R | {i} for R in level for i in Q - R if (R | {i}) in ps}
                if Q not in level:
                    gaps.append((P, Q))
    return sorted(gaps, key=lambda pq: (sorted(pq[0]), sorted(pq[1])))


@dataclass(frozen=True)
class HilbertCount:
    degree: tuple[int, ...]
    count: int
    in_semigroup: bool


def _fiber_box(A: np.ndarray, b: np.ndarray, budget: int) -> np.ndarray:
    n = A.shape[1]
    hi = []
    for i in range(n):
        col = A[:, i]
        bounds = [b[k] // col[k] for k in range(len(b)) if col[k] > 0]
        if not bounds:
            raise ValueError("every column of A must have a positive entry")
        hi.append(min(bounds))
    total = 1
    for h in hi:
        total *= max(h + 1, 0)
    if total > budget:
        raise BudgetExceeded("degree-fiber enumeration", budget)
    if any(h < 0 for h in hi):
        return np.zeros((0, n), dtype=np.int64)
    grid = np.meshgrid(*[np.arange(h + 1, dtype=np.int64) for h in hi], indexing="ij")
    U = np.stack([g.ravel() for g in grid], axis=1)
    return U[np.all(U @ A.T == b, axis=1)]


def hilbert_vertex_counts(
    M: MonomialIdeal, A: Sequence[Sequence[int]], degrees: Iterable[Sequence[int] | int], budget: int = DEFAULT_PAIR_BUDGET
) -> list[HilbertCount]:
    """Number of standard monomials of M in each multidegree b (Au = b).

    A must be nonnegative with no zero column so that degree fibers are finite.
    """
    An = np.array(A, dtype=np.int64)
    if An.ndim != 2 or An.shape[1] != M.n:
        raise ValueError("A must have one column per variable")
    if (An < 0).any():
        raise ValueError("A must be nonnegative")
    out = []
    for b in degrees:
        bt = (int(b),) if isinstance(b, (int, np.integer)) else tuple(int(x) for x in b)
        U = _fiber_box(An, np.array(bt, dtype=np.int64), budget)
        count = int((~_contains_rows(M, U)).sum()) if len(U) else 0
        out.append(HilbertCount(bt, count, bool(len(U))))
    return out


def eventual_period(values: Sequence[int], max_period: int | None = None) -> int | None:
    """Smallest p such that values[i] == values[i+p] for all valid i, if any."""
    N = len(values)
    for p in range(1, (max_period or N - 1) + 1):
        if p >= N:
            break
        if all(values[i] == values[i + p] for i in range(N - p)):
            return p
    return None


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Read an ideal: one exponent vector per line, or JSON with "generators"."""
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        data = json.loads(s)
        gens = data["generators"] if isinstance(data, dict) else data
        if isinstance(data, dict) and n is None:
            n = data.get("n")
        return minimalize(gens, n)
    gens = []
    for line in s.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            gens.append(tuple(int(x) for x in line.replace(",", " ").split()))
    return minimalize(gens, n)


def format_ideal(M: MonomialIdeal, as_json: bool = False) -> str:
    if as_json:
        return json.dumps({"n": M.n, "generators": [list(g) for g in M.generators]})
    return "\n".join(" ".join(str(e) for e in g) for g in M.generators)


_TERM = re.compile(r"([a-z])(?:\^\{?(\d+)\}?)?")


def parse_monomial(text: str, n: int) -> Exps:
    """Read a monomial such as "a^2*b", "d a^{10}" or "1" in variables a, b, c, ..."""
    s = text.replace("*", "").replace(" ", "")
    if s == "1":
        return (0,) * n
    exps = [0] * n
    pos = 0
    names = variable_names(n)
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt:
            raise ValueError(f"cannot parse monomial {text!r}")
        i = names.index(mt.group(1)) if mt.group(1) in names else -1
        if i < 0:
            raise ValueError(f"unknown variable {mt.group(1)!r}")
        exps[i] += int(mt.group(2) or 1)
        pos = mt.end()
    return tuple(exps)


def parse_ideal_names(text: str, n: int) -> MonomialIdeal:
    """Read "<ab, a^2, c^3>" (angle brackets optional) as a monomial ideal."""
    body = text.strip().strip("<>⟨⟩")
    return minimalize((parse_monomial(t, n) for t in body.split(",") if t.strip()), n)
