"""
Simplicial boundary matrices (reduced chain complex, augmentation in degree 0).
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np
from scipy import sparse

from src.complexes import Face, SimplicialComplex


@dataclass(frozen=True)
class ChainBoundary:
    """
    Boundary map from k-chains to (k-1)-chains.

    Rows are indexed by (k-1)-faces and columns by k-faces, both in
    lexicographic order. Entries are in {-1, 0, +1}.
    """
    degree: int
    rows: Tuple[Face, ...]
    cols: Tuple[Face, ...]
    matrix: sparse.csc_matrix

    @property
    def shape(self):
        return self.matrix.shape

    def columns(self) -> List[Dict[int, int]]:
        """Columns as {row index: entry} dicts, for the exact reduction kernels."""
        m = self.matrix
        out = []
        for j in range(m.shape[1]):
            start, end = m.indptr[j], m.indptr[j + 1]
            out.append({int(i): int(v) for i, v in zip(m.indices[start:end], m.data[start:end]) if v})
        return out

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()


def boundary_matrix(K: SimplicialComplex, k: int) -> ChainBoundary:
    """
    Boundary matrix of degree k: removing the i-th vertex of a sorted face
    carries sign (-1)^i. Degree 0 is the augmentation onto the empty face.
    """
    if not 0 <= k <= K.dim:
        raise ValueError(f"degree k must satisfy 0 <= k <= dim={K.dim}, got {k}")

    rows = K.faces_of_dim(k - 1)
    cols = K.faces_of_dim(k)
    row_index = {face: i for i, face in enumerate(rows)}

    data, ri, ci = [], [], []
    for j, face in enumerate(cols):
        for i in range(len(face)):
            ri.append(row_index[face[:i] + face[i + 1:]])
            ci.append(j)
            data.append(-1 if i % 2 else 1)

    matrix = sparse.csc_matrix(
        (np.array(data, dtype=np.int64), (np.array(ri, dtype=np.int64), np.array(ci, dtype=np.int64))),
        shape=(len(rows), len(cols)),
    )
    matrix.sort_indices()
    return ChainBoundary(degree=k, rows=rows, cols=cols, matrix=matrix)
