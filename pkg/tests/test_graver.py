import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latvert.errors import BudgetExceeded
from latvert.exact import rank
from latvert.graver import graver_basis, orthant_hilbert_basis_oracle
from latvert.lattice import Lattice, project


def sample_lattices(count, seed, entry=10):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, 4)
        m = rng.randint(1, min(2, n - 1))
        B = [[rng.randint(-entry, entry) for _ in range(m)] for _ in range(n)]
        if rank(B) == m:
            out.append(Lattice.from_basis(B))
    return out


def union_over_orthants(L, box):
    out = set()
    for rho in itertools.product([1, -1], repeat=L.n):
        out |= orthant_hilbert_basis_oracle(L, rho, box)
    return out


@pytest.mark.parametrize("L", sample_lattices(12, 5), ids=lambda L: str(L.rows))
def test_graver_equals_orthant_union(L):
    G = graver_basis(L)
    box = max(max(abs(x) for x in g) for g in G)
    # the union is stable once the box exceeds the largest element
    assert union_over_orthants(L, box + 2) == set(G)
    assert union_over_orthants(L, box + 4) == set(G)


def test_small_examples():
    assert set(graver_basis(Lattice.from_basis([[1], [-1]]))) == {(1, -1), (-1, 1)}
    L = Lattice.from_matrix([[3, 4, 5]])
    # the closed orthant also holds the boundary elements on supports {a,b} and {b,c}
    assert orthant_hilbert_basis_oracle(L, "+-+", 10) == {(1, -2, 1), (4, -3, 0), (0, -5, 4)}
    assert orthant_hilbert_basis_oracle(Lattice.from_matrix([[1, 1]]), "++", 10) == set()
    assert orthant_hilbert_basis_oracle(Lattice.from_basis([[1], [-1]]), "+-", 5) == {(1, -1)}
    assert len(graver_basis(Lattice.from_matrix([[1, 0], [0, 1]]))) == 0


def test_canonical_order_and_budget():
    G = graver_basis(Lattice.from_matrix([[1, 2, 3]]))
    keys = [(sum(map(abs, g)), g) for g in G]
    assert keys == sorted(keys)
    with pytest.raises(BudgetExceeded):
        graver_basis(Lattice.from_matrix([[15, 247, 248, 345]]), budget=50)


@given(st.lists(st.integers(1, 7), min_size=3, max_size=4))
def test_negation_closure_and_primitivity(a):
    G = set(graver_basis(Lattice.from_matrix([a])))
    for g in G:
        assert tuple(-x for x in g) in G
        for k in range(2, 4):
            assert tuple(k * x for x in g) not in G
    # no element is conformally above another
    for g, h in itertools.permutations(G, 2):
        assert not all(x * y >= 0 and abs(x) <= abs(y) for x, y in zip(h, g))


@given(st.lists(st.integers(1, 6), min_size=3, max_size=4), st.data())
def test_projection_property(a, data):
    L = Lattice.from_matrix([a])
    sigma = data.draw(st.sets(st.integers(0, L.n - 1), max_size=L.n - L.m))
    rest = [r for i, r in enumerate(L.rows) if i not in sigma]
    if rank(rest) < L.m:
        return
    image = {tuple(x for i, x in enumerate(g) if i not in sigma) for g in graver_basis(L)}
    assert set(graver_basis(project(L, sigma))) <= image
