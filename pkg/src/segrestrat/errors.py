"""Exception hierarchy. Every domain error maps to CLI exit code 3."""


class SegreError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionError(SegreError, ValueError):
    """Lattice vectors of mismatched length were combined."""


class DomainError(SegreError, ValueError):
    """A parameter lies outside the range an operation is defined on."""


class DegenerateParabolicError(DomainError):
    """The parabolic is the whole group, so G/P is a point."""


class UnsupportedFamilyError(SegreError):
    """No stratum formula is available for this (group, parabolic) family."""


class ConsistencyError(SegreError, AssertionError):
    """Two classification rules that are provably disjoint both fired."""
