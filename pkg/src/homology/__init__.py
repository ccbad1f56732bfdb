"""
Homology package
"""

from .coefficients import Coefficients, parse_coefficients
from .boundary import ChainBoundary, boundary_matrix
from .reduction import (
    to_domain_matrix,
    rank_mod_p,
    rank_rational,
    rank_over,
    smith_diagonal,
    invariant_factors,
)
from .betti import (
    ALL_VANISHING,
    HomologyProfile,
    ConnectivityEstimate,
    betti_numbers,
    reduced_homology_nonzero,
    default_coefficient_list,
    homological_connectivity,
    euler_characteristic,
)


__all__ = [
    'Coefficients',
    'parse_coefficients',
    'ChainBoundary',
    'boundary_matrix',
    'to_domain_matrix',
    'rank_mod_p',
    'rank_rational',
    'rank_over',
    'smith_diagonal',
    'invariant_factors',
    'ALL_VANISHING',
    'HomologyProfile',
    'ConnectivityEstimate',
    'betti_numbers',
    'reduced_homology_nonzero',
    'default_coefficient_list',
    'homological_connectivity',
    'euler_characteristic',
]
