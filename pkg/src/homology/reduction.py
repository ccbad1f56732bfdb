"""
Exact sparse reduction kernels.

Matrices are given as lists of columns, each a {row: int} dict. Nothing here
touches floating point: field ranks go through sympy's sparse DomainMatrix
over GF(p) or QQ, and the integers use a sparse Smith diagonalization.
"""

from collections import defaultdict
from typing import Dict, List, Optional, Sequence

from sympy import GF, QQ, ZZ, factorint
from sympy.polys.matrices import DomainMatrix

from .coefficients import Coefficients, INTEGERS, PRIME_FIELD


Column = Dict[int, int]


def to_domain_matrix(columns: Sequence[Column], n_rows: Optional[int] = None) -> DomainMatrix:
    """Sparse integer DomainMatrix (dict of rows) from a list of columns."""
    rows: Dict[int, Dict[int, int]] = defaultdict(dict)
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                rows[i][j] = ZZ(v)
    if n_rows is None:
        n_rows = max(rows, default=-1) + 1
    return DomainMatrix(dict(rows), (n_rows, len(columns)), ZZ)


def rank_mod_p(columns: Sequence[Column], p: int) -> int:
    """Rank over Z_p."""
    if not any(v % p for col in columns for v in col.values()):
        return 0
    return to_domain_matrix(columns).convert_to(GF(p)).rank()


def rank_rational(columns: Sequence[Column]) -> int:
    """Rank over Q."""
    if not any(any(col.values()) for col in columns):
        return 0
    return to_domain_matrix(columns).convert_to(QQ).rank()


class _SparseIntMatrix:
    """Integer matrix with mirrored row and column dicts."""

    def __init__(self, columns: Sequence[Column]):
        self.cols: Dict[int, Column] = {}
        self.rows: Dict[int, Column] = defaultdict(dict)
        for j, col in enumerate(columns):
            entries = {i: v for i, v in col.items() if v}
            if entries:
                self.cols[j] = entries
                for i, v in entries.items():
                    self.rows[i][j] = v

    def _set(self, i: int, j: int, v: int):
        if v:
            self.rows[i][j] = v
            self.cols.setdefault(j, {})[i] = v
            return
        row = self.rows.get(i)
        if row is not None:
            row.pop(j, None)
            if not row:
                del self.rows[i]
        col = self.cols.get(j)
        if col is not None:
            col.pop(i, None)
            if not col:
                del self.cols[j]

    def add_row_multiple(self, target: int, source: int, q: int):
        """row_target += q * row_source"""
        for j, v in list(self.rows[source].items()):
            self._set(target, j, self.rows.get(target, {}).get(j, 0) + q * v)

    def add_col_multiple(self, target: int, source: int, q: int):
        """col_target += q * col_source"""
        for i, v in list(self.cols[source].items()):
            self._set(i, target, self.cols.get(target, {}).get(i, 0) + q * v)

    def drop(self, i: int, j: int):
        """Remove row i and column j entirely."""
        for jj in list(self.rows.get(i, {})):
            self._set(i, jj, 0)
        for ii in list(self.cols.get(j, {})):
            self._set(ii, j, 0)


def smith_diagonal(columns: Sequence[Column]) -> List[int]:
    """
    Nonzero diagonal entries (absolute values) of a diagonalization of the
    matrix by unimodular row and column operations.

    The entries need not form a divisibility chain; pass them through
    invariant_factors for that. Their count is the rank.
    """
    M = _SparseIntMatrix(columns)
    diagonal = []
    # columns are never created, so the first surviving one in this order is the minimum
    order = sorted(M.cols)
    cursor = 0
    while M.cols:
        while order[cursor] not in M.cols:
            cursor += 1
        c = order[cursor]
        r = min(M.cols[c], key=lambda i: (abs(M.cols[c][i]), i))
        while True:
            p = M.rows[r][c]
            for i, a in list(M.cols[c].items()):
                if i != r:
                    M.add_row_multiple(i, r, -(a // p))
            rest = [i for i in M.cols[c] if i != r]
            if rest:
                r = min(rest, key=lambda i: (abs(M.cols[c][i]), i))
                continue

            # column c is clean, so column operations against it only touch row r
            if all(a % p == 0 for a in M.rows[r].values()):
                break
            for j, a in list(M.rows[r].items()):
                if j != c:
                    M.add_col_multiple(j, c, -(a // p))
            rest = [j for j in M.rows[r] if j != c]
            if rest:
                c = min(rest, key=lambda j: (abs(M.rows[r][j]), j))
                continue
            break
        diagonal.append(abs(M.rows[r][c]))
        M.drop(r, c)
    return diagonal


def invariant_factors(diagonal: Sequence[int]) -> List[int]:
    """Invariant factors > 1 (ascending, each dividing the next) of a diagonal."""
    exponents = defaultdict(list)
    for d in diagonal:
        if d > 1:
            for prime, e in factorint(d).items():
                exponents[prime].append(e)
    if not exponents:
        return []
    length = max(len(v) for v in exponents.values())
    factors = [1] * length
    for prime, es in exponents.items():
        es = sorted(es, reverse=True)
        for k, e in enumerate(es):
            factors[length - 1 - k] *= prime ** e
    return factors


def rank_over(columns: Sequence[Column], coefficients: Coefficients) -> int:
    if coefficients.kind == PRIME_FIELD:
        return rank_mod_p(columns, coefficients.p)
    if coefficients.kind == INTEGERS:
        return len(smith_diagonal(columns))
    return rank_rational(columns)
