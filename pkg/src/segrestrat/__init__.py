"""Segre-invariant stratification data for moduli of principal bundles on curves."""

from segrestrat.errors import (
    ConsistencyError,
    DegenerateParabolicError,
    DimensionError,
    DomainError,
    SegreError,
    UnsupportedFamilyError,
)
from segrestrat.lattice import Character, Cocharacter, pairing
from segrestrat.rootdata import (
    FundamentalGroup,
    GroupDescriptor,
    RootSystem,
    TopologicalType,
    moduli_dimension,
    parse_group,
    root_system_of,
)
from segrestrat.parabolic import (
    LeviBlock,
    NumericalType,
    ParabolicType,
    degree_pushforward,
    isotropy_det_char,
    levi_blocks,
    quotient_roots,
)
from segrestrat.segre import expand_to_torus, segre_value

__version__ = "0.1.0"

__all__ = [
    "Character",
    "Cocharacter",
    "ConsistencyError",
    "DegenerateParabolicError",
    "DimensionError",
    "DomainError",
    "FundamentalGroup",
    "GroupDescriptor",
    "LeviBlock",
    "NumericalType",
    "ParabolicType",
    "RootSystem",
    "SegreError",
    "TopologicalType",
    "UnsupportedFamilyError",
    "degree_pushforward",
    "expand_to_torus",
    "isotropy_det_char",
    "levi_blocks",
    "moduli_dimension",
    "pairing",
    "parse_group",
    "quotient_roots",
    "root_system_of",
    "segre_value",
]
