"""
Criterion package: arithmetic guarantee for rainbow Tverberg partitions
"""

from .index_criterion import (
    TheoremTag,
    parse_theorem_tag,
    CriterionInput,
    CriterionReport,
    is_prime_power,
    tverberg_number,
    sphere_index,
    chessboard_connectivity_formula,
    factor_connectivity,
    join_connectivity_lower_bound,
    flexible_x_vector,
    guarantee_criterion,
    optimal_colored_hypotheses,
    barany_larman_hypotheses,
    tverberg_hypotheses,
    check_hypotheses,
)


__all__ = [
    'TheoremTag',
    'parse_theorem_tag',
    'CriterionInput',
    'CriterionReport',
    'is_prime_power',
    'tverberg_number',
    'sphere_index',
    'chessboard_connectivity_formula',
    'factor_connectivity',
    'join_connectivity_lower_bound',
    'flexible_x_vector',
    'guarantee_criterion',
    'optimal_colored_hypotheses',
    'barany_larman_hypotheses',
    'tverberg_hypotheses',
    'check_hypotheses',
]
