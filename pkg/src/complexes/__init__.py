"""
Simplicial complexes package
"""

from .simplicial import (
    Vertex,
    Face,
    EMPTY_FACE,
    SimplicialComplex,
    empty_complex,
    simplex,
    chessboard,
    chessboard_face_count,
    chessboard_join,
    decode_cell,
    join,
    join_all,
    f_vector,
    faces_of_dim,
)


__all__ = [
    'Vertex',
    'Face',
    'EMPTY_FACE',
    'SimplicialComplex',
    'empty_complex',
    'simplex',
    'chessboard',
    'chessboard_face_count',
    'chessboard_join',
    'decode_cell',
    'join',
    'join_all',
    'f_vector',
    'faces_of_dim',
]
