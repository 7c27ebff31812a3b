"""Reduced Gröbner bases, their cones, and a full fan traversal.

Run with ``python3 demos/groebner_cones.py``.
"""

from latvert import Lattice
from latvert.groebner import enumerate_fan, groebner_cone, reduced_gb
from latvert.monomial import intersect

L = Lattice.from_matrix([[15, 247, 248, 345]])
gb = reduced_gb(L, (111, 0, 342, 1))
print(f"reduced Gröbner basis for w = (111, 0, 342, 1): {len(gb)} binomials")
for e in gb.elements[:6]:
    print("  ", e)
print("   ...")
cone = groebner_cone(gb)
print(f"its cone has {cone.facet_count} facets:")
for f in cone.facets:
    print("  ", f, ". w <= 0")

small = Lattice.from_matrix([[2, 3, 4, 5]])
fan = enumerate_fan(small)
print(f"\nker[2 3 4 5] has {len(fan)} monomial initial ideals")
for c in fan[:5]:
    print(f"   {c.ideal}  ({c.cone.facet_count} facets)")
print("   ...")
print("their intersection:", intersect(*(c.ideal for c in fan)))
