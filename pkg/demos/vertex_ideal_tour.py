"""A walk through the vertex ideal of ker[1 2 3].

Run with ``python3 demos/vertex_ideal_tour.py``.
"""

from latvert import Lattice, graver_basis, product_ideal, vertex_ideal_circuits, vertex_ideal_intersection
from latvert.lattice import fiber
from latvert.monomial import associated_primes, irreducible_decomposition, prime_str, radical, standard_pairs
from latvert.vertex_ideal import matroid_radical, positive_circuits

L = Lattice.from_matrix([[1, 2, 3]])
print("lattice basis (rows b_i):", L.rows)

G = graver_basis(L)
print(f"\nGraver basis: {len(G)} vectors")
for g in G:
    print("  ", g)

# A fiber is every nonnegative u with the same degree; its vertices are the standard monomials.
F = fiber(L, (0, 0, 2))
print("\nfiber of c^2:", F.points)
print("its vertices:", F.vertices)

P = product_ideal(L, G)
V = vertex_ideal_circuits(L, G)
print("\nP_L =", P)
print("V_L =", V, " (from positive circuits)")
print("V_L =", vertex_ideal_intersection(L, G), " (from all initial ideals)")

print("\npositive circuits with more than two members:")
for c in positive_circuits(L, G):
    if len(c.members) > 2:
        vecs = [G.vectors[i] for i in c.members]
        print(f"   {c.coefficients} . {vecs} = 0  ->  generator {c.generator}")

print("\nstandard pairs of V_L:")
for p in standard_pairs(V):
    print("  ", p)
print("irreducible components:", ", ".join(str(c) for c in irreducible_decomposition(V)))
print("associated primes:", ", ".join(prime_str(P_, 3) for P_ in sorted(associated_primes(V), key=sorted)))
print("\nrad(P_L) =", radical(P), " rad(V_L) =", radical(V), " matroid ideal =", matroid_radical(L))
