"""
Reduced homology and homological connectivity of finite simplicial complexes.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.complexes import SimplicialComplex
from src.utils.config import HOMOLOGY_CONFIG, get_logger, get_snf_column_budget
from src.utils.errors import FaceBudgetExceeded

from .boundary import boundary_matrix
from .coefficients import Coefficients, INTEGERS, parse_coefficients
from .reduction import invariant_factors, rank_over, smith_diagonal


logger = get_logger(__name__)

ALL_VANISHING = 'all-vanishing'


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers b~_0..b~_dim, plus torsion per degree over Z."""
    coefficients: Coefficients
    reduced_betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    def is_zero(self, k: int) -> bool:
        if k < 0 or k >= len(self.reduced_betti):
            return True
        return self.reduced_betti[k] == 0 and not self.torsion[k]

    def to_dict(self):
        out = {
            'coefficients': str(self.coefficients),
            'reduced_betti': list(self.reduced_betti),
        }
        if self.coefficients.kind == INTEGERS:
            out['torsion'] = [list(t) for t in self.torsion]
        return out


@dataclass(frozen=True)
class ConnectivityEstimate:
    """
    hconn is the largest h with vanishing reduced homology in all degrees <= h,
    or ALL_VANISHING when nothing up to dim is nonzero.
    """
    hconn: Union[int, str]
    witness_degree: Optional[int]
    coefficients_tried: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def all_vanishing(self) -> bool:
        return self.hconn == ALL_VANISHING

    def to_dict(self):
        return {
            'hconn': self.hconn,
            'witness_degree': self.witness_degree,
            'coefficients_tried': list(self.coefficients_tried),
        }


class _BoundaryRanks:
    """Lazily computed ranks (and Smith diagonals over Z) of one complex's boundaries."""

    def __init__(self, K: SimplicialComplex, coefficients: Coefficients, snf_column_budget: Optional[int] = None):
        self.K = K
        self.coefficients = coefficients
        self.budget = get_snf_column_budget() if snf_column_budget is None else snf_column_budget
        self._ranks: Dict[int, int] = {}
        self._diagonals: Dict[int, List[int]] = {}

    def _compute(self, k: int):
        columns = boundary_matrix(self.K, k).columns()
        if self.coefficients.kind == INTEGERS:
            if len(columns) > self.budget:
                raise FaceBudgetExceeded(f"integral SNF of boundary degree {k}", len(columns), self.budget)
            diag = smith_diagonal(columns)
            self._diagonals[k] = diag
            self._ranks[k] = len(diag)
        else:
            self._ranks[k] = rank_over(columns, self.coefficients)
        logger.debug("rank d_%d over %s = %d", k, self.coefficients, self._ranks[k])

    def rank(self, k: int) -> int:
        if k < 0 or k > self.K.dim:
            return 0
        if k not in self._ranks:
            self._compute(k)
        return self._ranks[k]

    def torsion(self, k: int) -> Tuple[int, ...]:
        """Invariant factors of the torsion of H~_k over Z."""
        if self.coefficients.kind != INTEGERS or k + 1 > self.K.dim:
            return ()
        self.rank(k + 1)
        return tuple(invariant_factors(self._diagonals[k + 1]))

    def betti(self, k: int) -> int:
        return len(self.K.faces_of_dim(k)) - self.rank(k) - self.rank(k + 1)

    def nonzero(self, k: int) -> bool:
        return self.betti(k) > 0 or bool(self.torsion(k))


def betti_numbers(K: SimplicialComplex, coefficients='Q', snf_column_budget: Optional[int] = None) -> HomologyProfile:
    """
    Reduced Betti numbers by rank-nullity over a field, or by Smith
    diagonalization over the integers (which also yields torsion).
    """
    coeffs = parse_coefficients(coefficients)
    if K.is_empty():
        raise ValueError("betti_numbers needs a nonempty complex")
    ranks = _BoundaryRanks(K, coeffs, snf_column_budget)
    betti = tuple(ranks.betti(k) for k in range(K.dim + 1))
    torsion = tuple(ranks.torsion(k) for k in range(K.dim + 1))
    return HomologyProfile(coefficients=coeffs, reduced_betti=betti, torsion=torsion)


def reduced_homology_nonzero(K: SimplicialComplex, k: int, coefficients='Q', snf_column_budget: Optional[int] = None) -> bool:
    """Whether H~_k(K) is nonzero; only the two boundaries around degree k are reduced."""
    coeffs = parse_coefficients(coefficients)
    if K.is_empty():
        return k == -1
    if k < 0 or k > K.dim:
        return False
    return _BoundaryRanks(K, coeffs, snf_column_budget).nonzero(k)


def default_coefficient_list(K: SimplicialComplex, snf_column_budget: Optional[int] = None) -> List[str]:
    budget = get_snf_column_budget() if snf_column_budget is None else snf_column_budget
    widest = max((len(K.faces_of_dim(k)) for k in range(K.dim + 1)), default=0)
    if widest <= budget:
        return list(HOMOLOGY_CONFIG['default_coefficients'])
    return list(HOMOLOGY_CONFIG['fallback_coefficients'])


def homological_connectivity(
    K: SimplicialComplex,
    coefficient_list: Optional[Sequence] = None,
    snf_column_budget: Optional[int] = None,
) -> ConnectivityEstimate:
    """
    Largest h such that reduced homology vanishes in every degree <= h over
    every listed coefficient system. The empty complex gives -2.
    """
    if coefficient_list is None:
        coefficient_list = default_coefficient_list(K, snf_column_budget)
    if not coefficient_list:
        raise ValueError("coefficient_list must be nonempty")
    coeffs = [parse_coefficients(c) for c in coefficient_list]
    tried = tuple(str(c) for c in coeffs)

    if K.is_empty():
        return ConnectivityEstimate(hconn=-2, witness_degree=-1, coefficients_tried=tried)

    witness = None
    for c in coeffs:
        ranks = _BoundaryRanks(K, c, snf_column_budget)
        upper = K.dim if witness is None else witness - 1
        for k in range(upper + 1):
            if ranks.nonzero(k):
                witness = k
                break

    if witness is None:
        return ConnectivityEstimate(hconn=ALL_VANISHING, witness_degree=None, coefficients_tried=tried)
    return ConnectivityEstimate(hconn=witness - 1, witness_degree=witness, coefficients_tried=tried)


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** k * len(K.faces_of_dim(k)) for k in range(K.dim + 1))
