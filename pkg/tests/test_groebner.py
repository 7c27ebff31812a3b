import itertools
import random
from fractions import Fraction

import pytest
from scipy.optimize import linprog as scipy_linprog

from corpus import random_pointed_lattices
from latvert.errors import NonPositiveWeight, UnboundedFiber
from latvert.graver import graver_basis
from latvert.groebner import (
    enumerate_fan,
    enumerate_initial_ideals,
    groebner_cone,
    initial_ideal,
    minimizes_on_fiber,
    reduced_gb,
    weight_from_cone,
)
from latvert.lattice import Lattice, fiber
from latvert.monomial import contains, divides, intersect, minimalize, parse_ideal_names, radical
from latvert.vertex_ideal import standard_in_box


def random_weights(n, count, seed):
    rng = random.Random(seed)
    return [tuple(rng.randint(1, 1000) for _ in range(n)) for _ in range(count)]


def test_examples():
    L = Lattice.from_matrix([[1, 2, 3]])
    assert initial_ideal(L, (100, 10, 1)) == parse_ideal_names("a^2, ab, ac, b^3", 3)
    T = Lattice.from_basis([[1], [-1]])
    gb = reduced_gb(T, (2, 1))
    assert [(e.lead, e.trail) for e in gb.elements] == [((1, 0), (0, 1))]
    assert initial_ideal(T, (2, 1)) == parse_ideal_names("a", 2)
    assert groebner_cone(gb).facet_count == 1
    assert set(enumerate_initial_ideals(T)) == {parse_ideal_names("a", 2), parse_ideal_names("b", 2)}


def test_weight_checks():
    with pytest.raises(NonPositiveWeight):
        reduced_gb(Lattice.from_basis([[1], [1]]), (1, -1))
    with pytest.raises(UnboundedFiber):
        enumerate_fan(Lattice.from_basis([[1], [1], [0]]))


def _check_minimizers(L, w, box):
    """Standard monomials of in_w in the box are the unique w-minimal points of their fibers."""
    M = initial_ideal(L, w)
    std = standard_in_box(M, box)
    for u in itertools.product(range(box + 1), repeat=L.n):
        F = fiber(L, u)
        best = minimizes_on_fiber(w, F.points)
        assert (u in std) == (best == [u])


def test_reverse_weight_minimizes_fibers():
    _check_minimizers(Lattice.from_matrix([[1, 2, 3]]), (1, 10, 100), 4)


@pytest.mark.parametrize("k", range(12))
def test_reduced_gb_properties(k):
    L = random_pointed_lattices(12, 21)[k]
    G = graver_basis(L)
    for w in random_weights(L.n, 3, k):
        gb = reduced_gb(L, w, G)
        if not gb.generic:
            continue
        leads = [e.lead for e in gb.elements]
        for e in gb.elements:
            assert e.vector in G
            assert sum(a * b for a, b in zip(w, e.vector)) > 0
            assert not any(divides(l, e.trail) for l in leads)
        for a, b in itertools.permutations(leads, 2):
            assert not divides(a, b)
        cone = groebner_cone(gb)
        assert cone.contains(w, strict=True)
        w2 = weight_from_cone(cone)
        assert reduced_gb(L, w2, G).initial_ideal() == gb.initial_ideal()
        _check_minimizers(L, w, 3 if L.n == 4 else 4)


def test_fan_covers_positive_weights():
    L = Lattice.from_matrix([[2, 3, 4, 5]])
    fan = enumerate_fan(L)
    for w in random_weights(4, 60, 3):
        hits = [c for c in fan if c.cone.contains(w)]
        assert hits
        gb = reduced_gb(L, w)
        if gb.generic:
            assert gb.initial_ideal() in [c.ideal for c in hits]


def test_fan_intersection_example_123():
    L = Lattice.from_matrix([[1, 2, 3]])
    assert intersect(*enumerate_initial_ideals(L)) == parse_ideal_names("abc, a^2b, a^3c, b^3c^2", 3)


def regular_triangulation_ideal(A, w):
    """Stanley-Reisner ideal of the regular triangulation of the columns of A lifted by w.

    A set s is a face iff some c has c.a_i = w_i on s and c.a_i < w_i off s.
    """
    d, n = len(A), len(A[0])
    cols = [[A[r][i] for r in range(d)] for i in range(n)]

    def is_face(s):
        # maximize t subject to c.a_i = w_i (i in s), c.a_i + t <= w_i (i not in s)
        A_eq = [cols[i] + [0] for i in s]
        b_eq = [w[i] for i in s]
        A_ub = [cols[i] + [1] for i in range(n) if i not in s]
        b_ub = [w[i] for i in range(n) if i not in s]
        res = scipy_linprog(
            [0] * d + [-1], A_ub=A_ub or None, b_ub=b_ub or None, A_eq=A_eq or None, b_eq=b_eq or None,
            bounds=[(None, None)] * d + [(None, 1)], method="highs",
        )
        return res.status == 0 and (not A_ub or -res.fun > 1e-9)

    nonfaces = [s for k in range(n + 1) for s in itertools.combinations(range(n), k) if not is_face(s)]
    return minimalize([tuple(int(i in s) for i in range(n)) for s in nonfaces], n)


def test_radical_of_initial_ideal_is_triangulation_ideal():
    A = [[1, 2, 3]]
    L = Lattice.from_matrix(A)
    for w in [(100, 10, 1), (1, 10, 100), (3, 1, 7), (5, 9, 2)] + random_weights(3, 10, 8):
        gb = reduced_gb(L, w)
        if not gb.generic:
            continue
        assert radical(gb.initial_ideal()) == regular_triangulation_ideal(A, w)
