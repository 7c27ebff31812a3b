"""Counting fiber vertices degree by degree.

The number of vertices of the fiber in degree b settles into a periodic
pattern; for weights (1, 2, 3) the period divides 6.

Run with ``python3 demos/fiber_counts.py``.
"""

from latvert import Lattice, vertex_ideal_circuits
from latvert.monomial import eventual_period, hilbert_vertex_counts

A = [[1, 2, 3]]
V = vertex_ideal_circuits(Lattice.from_matrix(A))
counts = [c.count for c in hilbert_vertex_counts(V, A, range(61))]
for start in range(0, 61, 12):
    print(" ".join(f"{b:2d}:{n:<2d}" for b, n in zip(range(start, start + 12), counts[start:start + 12])))
print("period from degree 20 on:", eventual_period(counts[20:]))
