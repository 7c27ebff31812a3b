"""Exact integer/rational linear algebra and a small rational LP solver.

Everything here works on Python ints and ``fractions.Fraction``; no
floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major.

    ``rows`` and ``cols`` are kept explicitly so that ``n x 0`` and
    ``0 x n`` matrices are representable.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]], rows: int) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in columns]
        entries = tuple(tuple(c[i] for c in cols) for i in range(rows))
        return cls(rows, len(cols), entries)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.entries, self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.columns()
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(dot(r, c) for c in cols) for r in self.entries),
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries."""
    g = reduce(gcd, v, 0)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def primitive_rational(v: Sequence[Fraction]) -> Vector:
    """Scale a rational vector to the primitive integer vector with the same direction."""
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in v), 1)
    return primitive([int(Fraction(x) * den) for x in v])


# ---------------------------------------------------------------------------
# matrix text format

def parse_matrix(text: str) -> IntMatrix:
    """Parse the shared matrix format: ``R C`` then R lines of C integers.

    A bracketed one-liner such as ``[1 2 3]`` or ``[[1,2],[3,4]]`` is also
    accepted for convenience.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        body = stripped.replace(",", " ")
        if body.startswith("[["):
            rows = [r.strip(" []") for r in body[1:-1].split("]")]
            rows = [r for r in rows if r.strip(" [")]
            data = [[int(x) for x in r.replace("[", " ").split()] for r in rows]
        else:
            data = [[int(x) for x in body.strip("[]").split()]]
        return IntMatrix.from_rows(data)
    lines = [ln.split() for ln in stripped.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("matrix header must be 'R C'")
    r, c = int(lines[0][0]), int(lines[0][1])
    body = lines[1:]
    if c == 0 and not body:
        body = [[] for _ in range(r)]
    if len(body) != r or any(len(row) != c for row in body):
        raise ValueError(f"expected {r} rows of {c} integers")
    return IntMatrix.from_rows(([int(x) for x in row] for row in body), cols=c)


def format_matrix(M: IntMatrix) -> str:
    lines = [f"{M.rows} {M.cols}"]
    lines += [" ".join(str(x) for x in row) for row in M.entries]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# rational elimination

def _row_echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(M: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals."""
    entries = M.entries if isinstance(M, IntMatrix) else M
    rows = [[Fraction(x) for x in r] for r in entries]
    if not rows or not rows[0]:
        return 0
    return len(_row_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[Fraction, ...]]:
    """Rational basis of {x : rows . x = 0}."""
    red, pivots = _row_echelon([[Fraction(x) for x in r] for r in rows]) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -red[i][f]
        basis.append(tuple(x))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One rational solution of rows . x = rhs, or None if inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = _row_echelon(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = red[i][n]
    return tuple(x)


def det(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def adjugate(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(rows)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            adj[j][i] = (-1) ** (i + j) * det([list(r) for r in minor])
    return adj


# ---------------------------------------------------------------------------
# integer lattices

def _column_hnf_kernel(A: IntMatrix) -> list[list[int]]:
    """Unimodular column reduction of A; returns a Z-basis of ker(A) cap Z^n."""
    n = A.cols
    M = [list(r) for r in A.entries]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in U:
            r[i], r[j] = r[j], r[i]

    def sub(i, j, q):  # col_i -= q * col_j
        for r in M:
            r[i] -= q * r[j]
        for r in U:
            r[i] -= q * r[j]

    piv = 0
    for row in range(A.rows):
        if piv >= n:
            break
        while True:
            nz = [c for c in range(piv, n) if M[row][c] != 0]
            if not nz:
                break
            c = min(nz, key=lambda c: (abs(M[row][c]), c))
            swap(piv, c)
            for c in range(piv + 1, n):
                if M[row][c]:
                    sub(c, piv, M[row][c] // M[row][piv])
            if all(M[row][c] == 0 for c in range(piv + 1, n)):
                break
        if piv < n and M[row][piv] != 0:
            piv += 1
    return [[U[r][c] for r in range(n)] for c in range(piv, n)]


def hermite_normal_form(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Zero rows are dropped; pivots are positive and entries above each pivot
    are reduced into ``[0, pivot)``.  The result depends only on the lattice.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    out: list[list[int]] = []
    r0 = 0
    for c in range(ncols):
        active = [i for i in range(r0, len(rows)) if rows[i][c] != 0]
        while len(active) > 1:
            p = min(active, key=lambda i: abs(rows[i][c]))
            for i in active:
                if i != p:
                    q = rows[i][c] // rows[p][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[p])]
            active = [i for i in range(r0, len(rows)) if rows[i][c] != 0]
        if not active:
            continue
        p = active[0]
        rows[r0], rows[p] = rows[p], rows[r0]
        if rows[r0][c] < 0:
            rows[r0] = [-x for x in rows[r0]]
        for i in range(r0):
            q = rows[i][c] // rows[r0][c]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r0])]
        r0 += 1
    out = [r for r in rows[:r0]]
    return out


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """n x m matrix whose columns form a Z-basis of ker(A) cap Z^n.

    The basis is returned in Hermite normal form (as rows of its transpose),
    so the output is canonical for the lattice.
    """
    kernel = _column_hnf_kernel(A)
    canon = hermite_normal_form(kernel)
    return IntMatrix.from_columns(canon, A.cols)


def lll_reduce(vectors: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """LLL-reduce a list of linearly independent integer vectors (exact arithmetic)."""
    b = [list(v) for v in vectors]
    k = len(b)
    if k <= 1:
        return b

    def gso(b):
        bstar: list[list[Fraction]] = []
        mu = [[Fraction(0)] * k for _ in range(k)]
        norms = []
        for i in range(k):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = dot(b[i], bstar[j]) / norms[j]
                v = [a - mu[i][j] * c for a, c in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(dot(v, v))
        return mu, norms

    mu, norms = gso(b)
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
                mu, norms = gso(b)
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            mu, norms = gso(b)
            i = max(i - 1, 1)
    return b


# ---------------------------------------------------------------------------
# linear programming

@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


def _pivot(T: list[list[Fraction]], r: int, c: int) -> None:
    inv = 1 / T[r][c]
    T[r] = [x * inv for x in T[r]]
    pr = T[r]
    for i, row in enumerate(T):
        f = row[c]
        if i != r and f != 0:
            T[i] = [a - f * b for a, b in zip(row, pr)]


def _run_simplex(T, basis, cost_row: int, allowed: int) -> str:
    """Bland's-rule simplex on tableau T (last column is rhs).

    Row ``cost_row`` holds reduced costs; only the first ``allowed`` columns
    may enter the basis.  Minimizes.
    """
    m = len(T)
    while True:
        obj = T[cost_row]
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(m):
            if i == cost_row or i >= len(basis):
                continue
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, best[1], enter)
        basis[best[1]] = enter


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    nonneg: Sequence[bool] | bool = False,
) -> LPResult:
    """Minimize c.x subject to A_ub x <= b_ub and A_eq x = b_eq, exactly.

    Variables are free unless flagged in ``nonneg``.  Deterministic: the same
    input always gives the same basic optimal solution.
    """
    nv = len(c)
    for row in list(A_ub) + list(A_eq):
        if len(row) != nv:
            raise ValueError("constraint length does not match number of variables")
    if isinstance(nonneg, bool):
        nonneg = [nonneg] * nv
    # column map: original var -> list of (column, sign)
    colmap: list[list[tuple[int, int]]] = []
    ncol = 0
    for j in range(nv):
        if nonneg[j]:
            colmap.append([(ncol, 1)])
            ncol += 1
        else:
            colmap.append([(ncol, 1), (ncol + 1, -1)])
            ncol += 2
    nub = len(A_ub)
    nrows = nub + len(A_eq)
    nstd = ncol + nub  # structural + slack columns
    rows: list[list[Fraction]] = []
    for i, (a, b) in enumerate(list(zip(A_ub, b_ub)) + list(zip(A_eq, b_eq))):
        row = [Fraction(0)] * (nstd + nrows + 1)
        for j, coef in enumerate(a):
            if coef:
                for col, s in colmap[j]:
                    row[col] = Fraction(coef) * s
        if i < nub:
            row[ncol + i] = Fraction(1)
        row[-1] = Fraction(b)
        if row[-1] < 0:
            row = [-x for x in row]
        row[nstd + i] = Fraction(1)
        rows.append(row)
    # phase I objective: sum of artificials, expressed in reduced form
    phase1 = [Fraction(0)] * (nstd + nrows + 1)
    for row in rows:
        phase1 = [p - x for p, x in zip(phase1, row)]
    for i in range(nrows):
        phase1[nstd + i] = Fraction(0)
    T = rows + [phase1]
    basis = [nstd + i for i in range(nrows)]
    _run_simplex(T, basis, cost_row=nrows, allowed=nstd)
    if T[nrows][-1] != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis
    keep = []
    for i in range(nrows):
        if basis[i] >= nstd:
            col = next((j for j in range(nstd) if T[i][j] != 0), None)
            if col is None:
                continue  # redundant equality
            _pivot(T, i, col)
            basis[i] = col
        keep.append(i)
    T = [T[i][:nstd] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    # phase II
    cost = [Fraction(0)] * (nstd + 1)
    for j in range(nv):
        for col, s in colmap[j]:
            cost[col] = Fraction(c[j]) * s
    for i, bv in enumerate(basis):
        f = cost[bv]
        if f != 0:
            cost = [a - f * b for a, b in zip(cost, T[i])]
    T.append(cost)
    status = _run_simplex(T, basis, cost_row=len(basis), allowed=nstd)
    values = [Fraction(0)] * nstd
    for i, bv in enumerate(basis):
        values[bv] = T[i][-1]
    x = tuple(sum((values[col] * s for col, s in colmap[j]), Fraction(0)) for j in range(nv))
    if status == "unbounded":
        return LPResult("unbounded", x)
    return LPResult("optimal", x, -T[-1][-1])


_RELATIONS = {"<=", ">=", "=", "==", "<", ">"}


@dataclass(frozen=True)
class Feasibility:
    """Outcome of :func:`lp_feasible`; truthy iff the system is feasible."""

    feasible: bool
    witness: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.feasible


def lp_feasible(system: Sequence[tuple[Sequence, str, object]], nvars: int | None = None) -> Feasibility:
    """Decide feasibility of a finite system of rational (in)equalities.

    Each entry is ``(coefficients, relation, rhs)`` with relation one of
    ``<=, >=, =, <, >``.  Strict relations are handled by maximizing a slack
    variable.  A feasible answer carries an exact rational witness.
    """
    if nvars is None:
        if not system:
            raise ValueError("empty system needs an explicit nvars")
        nvars = len(system[0][0])
    strict = any(rel in ("<", ">") for _, rel, _ in system)
    nv = nvars + (1 if strict else 0)
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for coeffs, rel, rhs in system:
        if len(coeffs) != nvars:
            raise ValueError("mismatched dimensions in linear system")
        if rel not in _RELATIONS:
            raise ValueError(f"unknown relation {rel!r}")
        a = [Fraction(x) for x in coeffs] + ([Fraction(0)] if strict else [])
        b = Fraction(rhs)
        if rel in ("=", "=="):
            A_eq.append(a)
            b_eq.append(b)
            continue
        sign = 1 if rel in ("<=", "<") else -1
        a = [sign * x for x in a]
        if rel in ("<", ">"):
            a[-1] = Fraction(1)
        A_ub.append(a)
        b_ub.append(sign * b)
    if strict:
        A_ub.append([Fraction(0)] * nvars + [Fraction(1)])
        b_ub.append(Fraction(1))
        cost = [0] * nvars + [-1]
    else:
        cost = [0] * nv
    res = linprog(cost, A_ub, b_ub, A_eq, b_eq)
    if res.status == "infeasible":
        return Feasibility(False)
    if strict and res.x[-1] <= 0:
        return Feasibility(False)
    return Feasibility(True, res.x[:nvars])


def irredundant_inequalities(system: Iterable[Sequence]) -> list[Vector]:
    """Facet-defining subsystem of the cone {w : h.w <= 0 for h in system}.

    Scalar multiples collapse to one primitive integer representative.  The
    result is sorted, so it does not depend on the input order.  Raises
    NotFullDimensional if the cone has empty interior.
    """
    from .errors import NotFullDimensional

    hs = sorted({primitive_rational(h) for h in system if any(h)})
    if not hs:
        return []
    n = len(hs[0])
    interior = lp_feasible([(h, "<=", -1) for h in hs], nvars=n)
    if not interior:
        raise NotFullDimensional("cone has no interior point")
    facets = []
    for k, hk in enumerate(hs):
        rest = [(h, "<=", 0) for i, h in enumerate(hs) if i != k]
        if lp_feasible(rest + [(hk, ">=", 1)], nvars=n):
            facets.append(hk)
    return facets


def interior_point(halfspaces: Sequence[Sequence], nvars: int) -> tuple[Fraction, ...]:
    """A point with h.w <= -1 for every h (strictly inside the cone)."""
    from .errors import NotFullDimensional

    res = lp_feasible([(h, "<=", -1) for h in halfspaces], nvars=nvars)
    if not res:
        raise NotFullDimensional("cone has no interior point")
    return res.witness
