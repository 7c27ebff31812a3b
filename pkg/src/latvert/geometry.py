"""Exact polyhedral helpers: vertices, recession rays, lattice points, hulls.

Polyhedra are given as ``{x in R^m : C x <= d}`` with integer C and d.
Lattice points are returned as integer tuples; every decision is made with
exact arithmetic (numpy int64 is only used for enumeration, behind explicit
magnitude guards).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, Unbounded
from .exact import linprog, nullspace, primitive_rational, rank, solve

Point = tuple[int, ...]

DEFAULT_POINT_BUDGET = 10**7
_INT64_SAFE = 2**62


def polyhedron_vertices(C: Sequence[Sequence[int]], d: Sequence[int]) -> list[tuple[Fraction, ...]]:
    """Vertices of {Cx <= d}, found by solving every m-subset of constraints."""
    m = len(C[0]) if C else 0
    verts = set()
    for rows in combinations(range(len(C)), m):
        sub = [C[i] for i in rows]
        if rank(sub) < m:
            continue
        x = solve(sub, [d[i] for i in rows])
        if x is None:
            continue
        if all(sum(c * xi for c, xi in zip(C[i], x)) <= d[i] for i in range(len(C))):
            verts.add(x)
    return sorted(verts)


def recession_rays(C: Sequence[Sequence[int]], m: int) -> list[Point] | None:
    """Extreme rays of {Cx <= 0} as primitive integer vectors.

    Returns None when the cone contains a line (rank(C) < m).
    """
    if m == 0:
        return []
    if not C or rank(C) < m:
        return None
    rays = set()
    for rows in combinations(range(len(C)), m - 1):
        sub = [C[i] for i in rows]
        if m > 1 and rank(sub) < m - 1:
            continue
        ker = nullspace(sub, m) if sub else [tuple(Fraction(int(i == j)) for j in range(m)) for i in range(m)]
        if len(ker) != 1:
            continue
        r = primitive_rational(ker[0])
        for s in (1, -1):
            cand = tuple(s * x for x in r)
            if all(sum(a * b for a, b in zip(row, cand)) <= 0 for row in C):
                rays.add(cand)
    return sorted(rays)


def is_bounded(C: Sequence[Sequence[int]], m: int) -> bool:
    rays = recession_rays(C, m)
    return rays is not None and not rays


def _box_points(lo: Sequence[int], hi: Sequence[int], budget: int) -> np.ndarray:
    sizes = [h - l + 1 for l, h in zip(lo, hi)]
    if any(s <= 0 for s in sizes):
        return np.zeros((0, len(lo)), dtype=np.int64)
    total = 1
    for s in sizes:
        total *= s
    if total > budget:
        raise BudgetExceeded("lattice-point enumeration", budget)
    if max(max(abs(l), abs(h)) for l, h in zip(lo, hi)) > 2**31:
        raise BudgetExceeded("lattice-point coordinate size", 2**31)
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    grid = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def _filter_points(pts: np.ndarray, C: Sequence[Sequence[int]], d: Sequence[int]) -> np.ndarray:
    if not len(C) or not len(pts):
        return pts
    Cn = np.array(C, dtype=np.int64)
    bound = int(np.abs(Cn).sum(axis=1).max()) * int(np.abs(pts).max(initial=0))
    if bound >= _INT64_SAFE:
        raise BudgetExceeded("int64-safe coordinate range", _INT64_SAFE)
    mask = np.all(pts @ Cn.T <= np.array(d, dtype=np.int64), axis=1)
    return pts[mask]


def lattice_points(
    C: Sequence[Sequence[int]], d: Sequence[int], m: int, budget: int = DEFAULT_POINT_BUDGET
) -> list[Point]:
    """All integer points of the bounded polyhedron {Cx <= d}, sorted."""
    if m == 0:
        return [()] if all(x >= 0 for x in d) else []
    if not is_bounded(C, m):
        raise Unbounded("polyhedron has a nontrivial recession cone")
    verts = polyhedron_vertices(C, d)
    if not verts:
        return []
    lo = [ceil(min(v[j] for v in verts)) for j in range(m)]
    hi = [floor(max(v[j] for v in verts)) for j in range(m)]
    pts = _filter_points(_box_points(lo, hi, budget), C, d)
    return sorted(tuple(int(x) for x in p) for p in pts)


def _in_hull_lp(p: Sequence[int], others: Sequence[Sequence[int]], rays: Sequence[Sequence[int]] = ()) -> bool:
    """True iff p lies in conv(others) + cone(rays)."""
    if not others:
        return False
    dim = len(p)
    cols = [tuple(q) for q in others] + [tuple(r) for r in rays]
    A_eq = [[q[j] for q in cols] for j in range(dim)]
    A_eq.append([1] * len(others) + [0] * len(rays))
    b_eq = list(p) + [1]
    res = linprog([0] * len(cols), A_eq=A_eq, b_eq=b_eq, nonneg=True)
    return res.status != "infeasible"


def _directions(dim: int) -> list[Point]:
    dirs = []
    for v in product((-1, 0, 1), repeat=dim):
        if any(v) and next(x for x in v if x) > 0:
            dirs.append(v)
    return dirs


def _midpoint_filter(pts: list[Point]) -> list[Point]:
    """Drop points that are midpoints of two other points along a small direction."""
    S = set(pts)
    dim = len(pts[0])
    dirs = _directions(dim) if dim <= 4 else [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    out = []
    for p in pts:
        interior = False
        for v in dirs:
            if tuple(a + b for a, b in zip(p, v)) in S and tuple(a - b for a, b in zip(p, v)) in S:
                interior = True
                break
        if not interior:
            out.append(p)
    return out


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(pts: list[Point]) -> list[Point]:
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return sorted(set(lower[:-1] + upper[:-1]))


def hull_vertices(points: Sequence[Sequence[int]]) -> list[Point]:
    """Vertices of the convex hull of a finite integer point set, sorted."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if len(pts) <= 2:
        return pts
    dim = len(pts[0])
    if dim == 0:
        return pts
    if dim == 1:
        return [pts[0], pts[-1]]
    if dim == 2:
        return _hull_2d(pts)
    cands = _midpoint_filter(pts)
    return [p for i, p in enumerate(cands) if not _in_hull_lp(p, cands[:i] + cands[i + 1:])]


def is_hull_vertex(p: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    """True iff p is a vertex of conv(points); p must belong to points."""
    p = tuple(p)
    S = {tuple(q) for q in points}
    if p not in S:
        raise ValueError("point is not a member of the set")
    others = [q for q in S if q != p]
    if not others:
        return True
    for q in others:
        if tuple(2 * a - b for a, b in zip(p, q)) in S:
            return False
    if len(p) <= 2:
        return p in hull_vertices(list(S))
    cands = [q for q in _midpoint_filter(sorted(S)) if q != p]
    return not _in_hull_lp(p, cands)


def origin_is_vertex(C: Sequence[Sequence[int]], d: Sequence[int], m: int, budget: int = DEFAULT_POINT_BUDGET) -> bool:
    """Is the origin a vertex of conv({Cx <= d} cap Z^m)?  Requires d >= 0.

    Works for unbounded polyhedra too: with Q = P + cone(rays), the integer
    hull equals conv(lattice points of Q within P + parallelepiped) + cone(rays),
    and the origin is a vertex iff it is not in conv(other points) + cone(rays).
    """
    if any(x < 0 for x in d):
        raise ValueError("origin must satisfy the system")
    if m == 0:
        return True
    origin = (0,) * m
    rays = recession_rays(C, m)
    if rays is None:
        return False
    if not rays:
        pts = lattice_points(C, d, m, budget)
        return is_hull_vertex(origin, pts)
    verts = polyhedron_vertices(C, d)
    lo = [floor(min(v[j] for v in verts)) + sum(min(0, r[j]) for r in rays) for j in range(m)]
    hi = [ceil(max(v[j] for v in verts)) + sum(max(0, r[j]) for r in rays) for j in range(m)]
    pts = sorted(tuple(int(x) for x in p) for p in _filter_points(_box_points(lo, hi, budget), C, d))
    S = set(pts)
    if any(tuple(-x for x in p) in S for p in pts if p != origin):
        return False
    others = [p for p in _midpoint_filter(pts) if p != origin]
    return not _in_hull_lp(origin, others, rays)
