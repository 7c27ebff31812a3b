"""Sublattices of Z^n, their fibers, and the polyhedra Q_u / R_u.

A fiber of u is the set of v in N^n with u - v in L.  Writing v = u - Bz
identifies it with the lattice points of Q_u = {z : Bz <= u}; dropping rows
of that system gives the polyhedra used for standard-pair certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionDrop, UnboundedFiber
from .exact import IntMatrix, kernel_basis, lp_feasible, rank, solve
from .geometry import (
    DEFAULT_POINT_BUDGET,
    hull_vertices,
    is_bounded,
    lattice_points,
    origin_is_vertex,
)

Point = tuple[int, ...]


@dataclass(frozen=True)
class Lattice:
    """An m-dimensional lattice in Z^n given by an n x m basis matrix.

    ``matrix`` is an optional A with L = ker(A) cap Z^n.
    """

    basis: IntMatrix
    matrix: IntMatrix | None = None

    def __post_init__(self):
        if self.basis.cols and rank(self.basis) != self.basis.cols:
            raise ValueError("basis columns are linearly dependent")
        if self.matrix is not None:
            A = self.matrix
            if A.cols != self.n:
                raise ValueError("matrix and basis have different ambient dimension")
            if self.basis.cols and not (A @ self.basis).is_zero():
                raise ValueError("basis is not contained in ker(A)")
            if self.m != self.n - rank(A):
                raise ValueError("basis rank does not match n - rank(A)")

    @classmethod
    def from_matrix(cls, A: IntMatrix | Sequence[Sequence[int]]) -> "Lattice":
        """The saturated lattice ker(A) cap Z^n."""
        if not isinstance(A, IntMatrix):
            A = IntMatrix.from_rows(A)
        return cls(kernel_basis(A), A)

    @classmethod
    def from_basis(cls, B: IntMatrix | Sequence[Sequence[int]], A=None) -> "Lattice":
        """Lattice spanned by the columns of B (given row by row, n x m)."""
        if not isinstance(B, IntMatrix):
            B = IntMatrix.from_rows(B)
        if A is not None and not isinstance(A, IntMatrix):
            A = IntMatrix.from_rows(A)
        return cls(B, A)

    @classmethod
    def from_generators(cls, vectors: Iterable[Sequence[int]], n: int) -> "Lattice":
        """Lattice spanned by the given (independent) vectors of Z^n."""
        return cls(IntMatrix.from_columns(vectors, n))

    @property
    def n(self) -> int:
        return self.basis.rows

    @property
    def m(self) -> int:
        return self.basis.cols

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Rows b_1..b_n of the basis matrix."""
        return self.basis.entries

    def generators(self) -> list[Point]:
        return self.basis.columns()

    def contains(self, v: Sequence[int]) -> bool:
        if self.m == 0:
            return not any(v)
        z = solve(self.rows, v)
        return z is not None and all(x.denominator == 1 for x in z)

    def coordinates(self, v: Sequence[int]) -> Point:
        """The unique z with Bz = v, for v in L."""
        if self.m == 0:
            return ()
        z = solve(self.rows, v)
        if z is None or any(x.denominator != 1 for x in z):
            raise ValueError("vector is not in the lattice")
        return tuple(int(x) for x in z)

    def embed(self, z: Sequence[int]) -> Point:
        return tuple(sum(b * x for b, x in zip(row, z)) for row in self.rows)


def is_pointed(L: Lattice) -> bool:
    """True iff L cap N^n = {0}.

    Decided by n exact LPs: for each coordinate i, is there lambda with
    B lambda >= 0 and (B lambda)_i >= 1?
    """
    if L.m == 0:
        return True
    base = [(row, ">=", 0) for row in L.rows]
    for row in L.rows:
        if lp_feasible(base + [(row, ">=", 1)], nvars=L.m):
            return False
    return True


@dataclass(frozen=True)
class Fiber:
    """Lattice points of the fiber of ``base`` and the vertices of their hull.

    Equality ignores ``base``: any member of the fiber yields an equal object.
    """

    base: Point = field(compare=False)
    points: tuple[Point, ...]
    vertices: tuple[Point, ...]


def _require_bounded(L: Lattice) -> None:
    if L.m and not is_bounded(L.rows, L.m):
        raise UnboundedFiber("lattice is not pointed; fibers are infinite")


def fiber(L: Lattice, u: Sequence[int], budget: int = DEFAULT_POINT_BUDGET) -> Fiber:
    """Enumerate {v in N^n : u - v in L} and the vertices of its convex hull."""
    u = tuple(int(x) for x in u)
    if len(u) != L.n or any(x < 0 for x in u):
        raise ValueError("u must be a point of N^n")
    _require_bounded(L)
    zs = lattice_points(L.rows, u, L.m, budget)
    to_v = lambda z: tuple(a - b for a, b in zip(u, L.embed(z)))
    points = tuple(sorted(to_v(z) for z in zs))
    verts = tuple(sorted(to_v(z) for z in hull_vertices(zs)))
    return Fiber(u, points, verts)


def is_fiber_vertex(L: Lattice, u: Sequence[int], budget: int = DEFAULT_POINT_BUDGET) -> bool:
    """True iff u is a vertex of its own fiber P_u."""
    u = tuple(int(x) for x in u)
    _require_bounded(L)
    return origin_is_vertex(L.rows, u, L.m, budget)


@dataclass(frozen=True)
class QPolyhedronSample:
    """Lattice points of {z : B_keep z <= u_keep} and the vertices of their hull."""

    u: Point
    keep: tuple[int, ...]
    lattice_points: tuple[Point, ...]
    hull_vertices: tuple[Point, ...]


def _keep_rows(L: Lattice, u: Sequence[int], keep: Iterable[int] | None):
    keep = tuple(range(L.n)) if keep is None else tuple(sorted(set(keep)))
    if any(i < 0 or i >= L.n for i in keep):
        raise ValueError("row index out of range")
    return keep, [L.rows[i] for i in keep], [int(u[i]) for i in keep]


def r_polyhedron(
    L: Lattice, u: Sequence[int], keep: Iterable[int] | None = None, budget: int = DEFAULT_POINT_BUDGET
) -> QPolyhedronSample:
    """Lattice points and hull vertices of Q_u restricted to the rows in ``keep``.

    Raises Unbounded when the restricted polyhedron is unbounded.
    """
    keep, C, d = _keep_rows(L, u, keep)
    pts = lattice_points(C, d, L.m, budget)
    return QPolyhedronSample(tuple(int(x) for x in u), keep, tuple(pts), tuple(hull_vertices(pts)))


def origin_is_hull_vertex(
    L: Lattice, u: Sequence[int], keep: Iterable[int] | None = None, budget: int = DEFAULT_POINT_BUDGET
) -> bool:
    """Is the origin a vertex of R_u restricted to ``keep``?  Unbounded cases allowed."""
    keep, C, d = _keep_rows(L, u, keep)
    return origin_is_vertex(C, d, L.m, budget)


def is_critical(
    L: Lattice, u: Sequence[int], keep: Iterable[int] | None = None, budget: int = DEFAULT_POINT_BUDGET
) -> bool:
    """Origin is a vertex for u but for no u + e_i with i in ``keep``."""
    keep = tuple(range(L.n)) if keep is None else tuple(sorted(set(keep)))
    if not origin_is_hull_vertex(L, u, keep, budget):
        return False
    for i in keep:
        w = list(u)
        w[i] += 1
        if origin_is_hull_vertex(L, w, keep, budget):
            return False
    return True


def saturation(L: Lattice) -> Lattice:
    """(L tensor Q) cap Z^n, with A taken as a basis of the orthogonal lattice."""
    if L.m == 0:
        return Lattice(IntMatrix(L.n, 0, tuple(() for _ in range(L.n))), IntMatrix.from_rows([[int(i == j) for j in range(L.n)] for i in range(L.n)]))
    perp = kernel_basis(L.basis.T)  # n x (n-m), columns orthogonal to L
    if perp.cols == 0:
        ident = IntMatrix.from_rows([[int(i == j) for j in range(L.n)] for i in range(L.n)])
        return Lattice(ident)
    A = perp.T
    return Lattice(kernel_basis(A), A)


def project(L: Lattice, sigma: Iterable[int], saturate: bool = False) -> Lattice:
    """Image of L under the coordinate projection deleting ``sigma``.

    The image lattice is returned as is; pass ``saturate=True`` for its
    saturation in Z^{n - |sigma|}.  Raises DimensionDrop if the rank falls.
    """
    sigma = set(sigma)
    rows = [r for i, r in enumerate(L.rows) if i not in sigma]
    B = IntMatrix.from_rows(rows, cols=L.m)
    if L.m and rank(B) < L.m:
        raise DimensionDrop(f"projection away from {sorted(sigma)} lowers the lattice rank")
    P = Lattice(B)
    return saturation(P) if saturate else P
