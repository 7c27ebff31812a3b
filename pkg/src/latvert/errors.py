"""Exception hierarchy shared by every latvert module."""


class LatvertError(Exception):
    """Base class for all errors raised by latvert."""


class BudgetExceeded(LatvertError):
    """A configured enumeration or completion cap was hit.

    The cap is echoed in the message and kept on ``budget`` so callers
    can retry with a larger value.
    """

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what} exceeded budget of {budget}")
        self.what = what
        self.budget = budget


class Unbounded(LatvertError):
    """A polyhedron that must be bounded has a nontrivial recession cone."""


class UnboundedFiber(Unbounded):
    """Fiber enumeration requested for a lattice that is not pointed."""


class DimensionDrop(LatvertError):
    """A coordinate projection lowered the rank of the lattice."""


class NonPositiveWeight(LatvertError):
    """Weight is not positive on the nonzero vectors of L intersected with N^n."""


class NotFullDimensional(LatvertError):
    """A cone expected to have interior points has none."""


class UnitIdeal(LatvertError):
    """An operation that needs a proper monomial ideal received <1>."""
