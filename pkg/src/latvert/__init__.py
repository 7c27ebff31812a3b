"""Vertex ideals, product ideals and Gröbner fans of integer lattices."""

from .errors import (
    BudgetExceeded,
    DimensionDrop,
    LatvertError,
    NonPositiveWeight,
    NotFullDimensional,
    Unbounded,
    UnboundedFiber,
    UnitIdeal,
)
from .graver import GraverBasis, graver_basis, orthant_hilbert_basis_oracle
from .groebner import (
    GroebnerCone,
    MarkedVector,
    ReducedGB,
    enumerate_fan,
    enumerate_initial_ideals,
    groebner_cone,
    initial_ideal,
    reduced_gb,
)
from .lattice import (
    Fiber,
    Lattice,
    fiber,
    is_critical,
    is_fiber_vertex,
    is_pointed,
    origin_is_hull_vertex,
    project,
    r_polyhedron,
)
from .monomial import (
    IrreducibleComponent,
    Monomial,
    MonomialIdeal,
    StandardPair,
    associated_primes,
    contains,
    hilbert_vertex_counts,
    intersect,
    irreducible_decomposition,
    localize,
    minimalize,
    radical,
    standard_pairs,
    top,
)
from .vertex_ideal import (
    PositiveCircuit,
    dimension_bounds_report,
    matroid_radical,
    positive_circuits,
    product_ideal,
    verify_standard_pair,
    vertex_ideal_circuits,
    vertex_ideal_intersection,
    vertex_ideal_oracle,
)

__version__ = "0.1.0"
