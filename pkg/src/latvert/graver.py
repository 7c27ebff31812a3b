"""Graver bases of lattices.

The Graver basis is the union over all 2^n orthants of the Hilbert basis of
L intersected with that orthant, i.e. the conformally minimal nonzero
vectors of L.  It is computed by a normal-form completion: starting from a
symmetric generating set, sums of pairs are reduced by conformal subtraction
and every nonzero remainder is added, until all pair sums reduce to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded
from .exact import lll_reduce
from .geometry import lattice_points
from .lattice import Lattice

Vector = tuple[int, ...]

DEFAULT_ELEMENT_BUDGET = 10**6
_CHUNK_CELLS = 2_000_000


def canonical_key(v: Sequence[int]):
    return (sum(abs(x) for x in v), tuple(v))


@dataclass(frozen=True)
class GraverBasis:
    """Graver basis in canonical order: by 1-norm, then lexicographically."""

    n: int
    vectors: tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.vectors)

    def __contains__(self, v) -> bool:
        return tuple(v) in set(self.vectors)

    def as_array(self) -> np.ndarray:
        return np.array(self.vectors, dtype=np.int64).reshape(len(self.vectors), self.n)

    def positive_parts(self) -> list[Vector]:
        return [tuple(max(x, 0) for x in v) for v in self.vectors]


def _first_reducers(S: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Index of the first g in G with g conformally below s, per row of S (-1 if none)."""
    out = np.full(len(S), -1, dtype=np.int64)
    if not len(G) or not len(S):
        return out
    n = S.shape[1]
    step = max(1, _CHUNK_CELLS // max(1, len(G) * n))
    for a in range(0, len(S), step):
        blk = S[a:a + step]
        lo = np.minimum(blk, 0)[:, None, :]
        hi = np.maximum(blk, 0)[:, None, :]
        ok = np.all((G[None] >= lo) & (G[None] <= hi), axis=2)
        has = ok.any(axis=1)
        idx = ok.argmax(axis=1)
        out[a:a + step] = np.where(has, idx, -1)
    return out


def _normal_forms(S: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Reduce every row of S by conformal subtraction of elements of G."""
    S = S.copy()
    active = np.flatnonzero(S.any(axis=1))
    while len(active):
        red = _first_reducers(S[active], G)
        hit = red >= 0
        if not hit.any():
            break
        rows = active[hit]
        H = G[red[hit]]
        with np.errstate(divide="ignore", invalid="ignore"):
            q = np.where(H != 0, S[rows] // np.where(H != 0, H, 1), np.iinfo(np.int64).max)
        t = q.min(axis=1)
        S[rows] -= t[:, None] * H
        active = rows[S[rows].any(axis=1)]
    return S


def _minimal_elements(G: np.ndarray) -> np.ndarray:
    """Drop rows that have another row conformally below them."""
    keep = np.ones(len(G), dtype=bool)
    n = G.shape[1]
    step = max(1, _CHUNK_CELLS // max(1, len(G) * n))
    for a in range(0, len(G), step):
        blk = G[a:a + step]
        lo = np.minimum(blk, 0)[:, None, :]
        hi = np.maximum(blk, 0)[:, None, :]
        ok = np.all((G[None] >= lo) & (G[None] <= hi), axis=2)
        ok[np.arange(len(blk)), np.arange(a, a + len(blk))] = False
        keep[a:a + step] = ~ok.any(axis=1)
    return G[keep]


def graver_basis(L: Lattice, budget: int = DEFAULT_ELEMENT_BUDGET) -> GraverBasis:
    """Graver basis of L by normal-form completion.

    Raises BudgetExceeded once more than ``budget`` elements accumulate.
    """
    if L.m == 0:
        return GraverBasis(L.n, ())
    n = L.n
    start = [tuple(v) for v in lll_reduce(L.generators())]
    reps: list[np.ndarray] = []  # one representative per +/- pair
    seen: set[Vector] = set()

    def full_array() -> np.ndarray:
        R = np.array(reps, dtype=np.int64).reshape(len(reps), n)
        return np.concatenate([R, -R]) if len(R) else R

    G = full_array()
    for v in start:
        r = _normal_forms(np.array([v], dtype=np.int64), G)[0]
        if r.any() and tuple(r) not in seen:
            reps.append(r)
            seen.update({tuple(r), tuple(-r)})
            G = full_array()
    i = 0
    while i < len(reps):
        f = reps[i]
        if len(reps) * 2 > budget:
            raise BudgetExceeded("Graver completion", budget)
        if i:
            prev = np.array(reps[:i], dtype=np.int64)
            sums = np.concatenate([f + prev, f - prev])
            sgn = np.concatenate([prev, -prev])
            cancel = np.any(f[None] * sgn < 0, axis=1)
            sums = sums[cancel]
            if len(sums):
                if np.abs(sums).max() > 2**40:
                    raise BudgetExceeded("Graver entry size", 2**40)
                rem = _normal_forms(sums, G)
                rem = rem[rem.any(axis=1)]
                if len(rem):
                    order = np.lexsort(rem.T[::-1])
                    rem = rem[order][np.argsort(np.abs(rem[order]).sum(axis=1), kind="stable")]
                    for r in rem:
                        r = _normal_forms(r[None], G)[0]
                        if r.any() and tuple(r) not in seen:
                            reps.append(r)
                            seen.update({tuple(r), tuple(-r)})
                            G = full_array()
        i += 1
    G = _minimal_elements(full_array())
    vecs = sorted((tuple(int(x) for x in g) for g in G), key=canonical_key)
    return GraverBasis(n, tuple(vecs))


def _sign_tuple(rho) -> tuple[int, ...]:
    out = []
    for s in rho:
        if s in ("+", 1, "1", "+1"):
            out.append(1)
        elif s in ("-", -1, "-1"):
            out.append(-1)
        else:
            raise ValueError(f"bad sign {s!r}")
    return tuple(out)


def orthant_hilbert_basis_oracle(L: Lattice, rho, box: int) -> set[Vector]:
    """Brute-force minimal elements of L in orthant ``rho`` with entries bounded by ``box``.

    Enumerates every lattice vector of the orthant inside the box and keeps
    those that are not the sum of two nonzero enumerated vectors.  Exact only
    when the box is large enough; callers grow it until the answer is stable.
    """
    signs = _sign_tuple(rho)
    if len(signs) != L.n:
        raise ValueError("sign pattern length must equal n")
    if L.m == 0:
        return set()
    C, d = [], []
    for s, row in zip(signs, L.rows):
        C.append(tuple(-s * x for x in row))
        d.append(0)
        C.append(tuple(s * x for x in row))
        d.append(box)
    zs = lattice_points(C, d, L.m)
    vecs = [L.embed(z) for z in zs]
    vecs = [v for v in vecs if any(v)]
    if not vecs:
        return set()
    pool = set(vecs)
    out = set()
    for v in vecs:
        if not any(w != v and tuple(a - b for a, b in zip(v, w)) in pool for w in vecs):
            out.add(v)
    return out
