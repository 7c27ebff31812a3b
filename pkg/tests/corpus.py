"""Seeded random lattices shared by the property and acceptance tests."""

from __future__ import annotations

import random

from latvert.exact import rank
from latvert.lattice import Lattice, is_pointed


def random_pointed_lattices(count: int, seed: int, n_max: int = 4, entry: int = 6) -> list[Lattice]:
    """Pointed lattices spanned by random n x m integer bases (1 <= m < n <= n_max)."""
    rng = random.Random(seed)
    out: list[Lattice] = []
    seen = set()
    while len(out) < count:
        n = rng.randint(2, n_max)
        m = rng.randint(1, n - 1)
        B = [[rng.randint(-entry, entry) for _ in range(m)] for _ in range(n)]
        if rank(B) != m or B and any(not any(r) for r in B):
            continue
        L = Lattice.from_basis(B)
        if not is_pointed(L):
            continue
        key = tuple(map(tuple, B))
        if key in seen:
            continue
        seen.add(key)
        out.append(L)
    return out


def random_codim2_matrices(count: int, seed: int, n_max: int = 5, entry: int = 8) -> list[list[list[int]]]:
    """Matrices A of rank n - 2 with ker(A) pointed: one row for n = 3, n - 2 rows otherwise."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, n_max)
        rows = n - 2
        A = [[rng.randint(1, entry) for _ in range(n)]]
        A += [[rng.randint(0, entry) for _ in range(n)] for _ in range(rows - 1)]
        if rank(A) != rows:
            continue
        L = Lattice.from_matrix(A)
        if L.m != 2 or not is_pointed(L):
            continue
        out.append(A)
    return out


def random_plane_lattices(count: int, seed: int, entry: int = 12) -> list[Lattice]:
    """Full-rank sublattices of Z^2."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        B = [[rng.randint(-entry, entry) for _ in range(2)] for _ in range(2)]
        if rank(B) == 2:
            out.append(Lattice.from_basis(B))
    return out
