"""
Geometry package: exact rational configurations and convex-hull feasibility
"""

from .rational import (
    RationalPoint,
    parse_rational,
    format_rational,
    make_point,
    format_point,
    determinant,
)
from .configuration import (
    ColoredConfiguration,
    general_position_check,
    random_configuration,
    scale_configuration,
)
from .feasibility import (
    TverbergWitness,
    PhaseOneTableau,
    common_point_feasible,
    verify_witness,
)


__all__ = [
    'RationalPoint',
    'parse_rational',
    'format_rational',
    'make_point',
    'format_point',
    'determinant',
    'ColoredConfiguration',
    'general_position_check',
    'random_configuration',
    'scale_configuration',
    'TverbergWitness',
    'PhaseOneTableau',
    'common_point_feasible',
    'verify_witness',
]
