from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.complexes import (
    Vertex,
    SimplicialComplex,
    chessboard,
    chessboard_face_count,
    chessboard_join,
    decode_cell,
    empty_complex,
    join,
    join_all,
    simplex,
)
from src.utils.errors import FaceBudgetExceeded


def test_hexagon_f_vector():
    K = chessboard(3, 2)
    assert K.f_vector() == (1, 6, 6)
    assert K.dim == 1
    assert K.num_faces == 12


def test_single_cell_board_is_a_point():
    K = chessboard(1, 1)
    assert K.f_vector() == (1, 1)
    assert K.vertices == (Vertex(0, 0),)


@pytest.mark.parametrize('m,n', [(0, 2), (2, 0), (-1, 3)])
def test_chessboard_rejects_empty_boards(m, n):
    with pytest.raises(ValueError):
        chessboard(m, n)


def test_chessboard_respects_face_budget():
    with pytest.raises(FaceBudgetExceeded):
        chessboard(4, 4, face_budget=10)


@pytest.mark.parametrize('m', range(1, 6))
@pytest.mark.parametrize('n', range(1, 6))
def test_f_vector_counts_rook_placements(m, n):
    f = chessboard(m, n).f_vector()
    assert f[0] == 1
    for k in range(1, min(m, n) + 1):
        assert f[k] == comb(m, k) * comb(n, k) * factorial(k)
    assert len(f) == min(m, n) + 1


@pytest.mark.slow
@pytest.mark.parametrize('m,n', [(6, 7), (7, 6), (7, 7)])
def test_f_vector_large_boards(m, n):
    f = chessboard(m, n).f_vector()
    for k in range(1, min(m, n) + 1):
        assert f[k] == comb(m, k) * comb(n, k) * factorial(k)


@given(m=st.integers(1, 4), n=st.integers(1, 4))
@settings(max_examples=30, deadline=None)
def test_face_count_matches_construction(m, n):
    assert chessboard_face_count(m, n) == chessboard(m, n).num_faces


def test_faces_are_non_attacking():
    for face in chessboard(3, 4):
        cells = [decode_cell(v, 4) for v in face]
        assert len({i for i, _ in cells}) == len(cells)
        assert len({j for _, j in cells}) == len(cells)


def test_decode_cell():
    assert decode_cell(Vertex(0, 0), 3) == (1, 1)
    assert decode_cell(Vertex(0, 5), 3) == (2, 3)


def test_empty_and_simplex():
    E = empty_complex()
    assert E.is_empty()
    assert E.dim == -1
    assert E.f_vector() == (1,)
    assert simplex(3).f_vector() == (1, 3, 3, 1)


def test_from_faces_takes_downward_closure():
    K = SimplicialComplex.from_faces([[Vertex(0, 2), Vertex(0, 0), Vertex(0, 1)]])
    assert K.f_vector() == (1, 3, 3, 1)
    assert (Vertex(0, 0), Vertex(0, 2)) in K


def test_join_of_two_disjoint_edge_pairs():
    X = chessboard(2, 2)
    assert X.f_vector() == (1, 4, 2)
    J = join(X, X)
    # (1 + 4t + 2t^2)^2
    assert J.f_vector() == (1, 8, 20, 16, 4)
    assert {v.tag for v in J.vertices} == {0, 1}
    assert J.n_factors == 2


def test_join_with_empty_is_identity():
    K = chessboard(3, 2)
    assert join(K, empty_complex()).f_vector() == K.f_vector()
    assert join(empty_complex(), K).f_vector() == K.f_vector()


def test_join_all_flattens_tags():
    J = join_all([simplex(1), simplex(1), simplex(1)])
    assert {v.tag for v in J.vertices} == {0, 1, 2}
    assert J.f_vector() == (1, 3, 3, 1)


def test_chessboard_join_with_empty_class():
    assert chessboard_join((2, 0), 2).f_vector() == chessboard(2, 2).f_vector()
    assert chessboard_join((0, 0), 3).is_empty()


def test_join_budget():
    with pytest.raises(FaceBudgetExceeded):
        join(chessboard(3, 3), chessboard(3, 3), face_budget=100)


def test_from_faces_counts_factors_from_tags():
    K = SimplicialComplex.from_faces([[Vertex(0, 0), Vertex(2, 1)]])
    assert K.n_factors == 3
    J = join(K, simplex(1))
    assert {v.tag for v in J.vertices} == {0, 2, 3}
    for face in J:
        assert list(face) == sorted(set(face))
    assert J.f_vector() == (1, 3, 3, 1)


def test_from_faces_rejects_negative_tags():
    with pytest.raises(ValueError):
        SimplicialComplex.from_faces([[Vertex(-1, 0)]])


BOARDS = [(m, n) for m in range(1, 5) for n in range(1, 5)]


def _built_complexes():
    yield from (chessboard(m, n) for m, n in BOARDS)
    yield join(chessboard(3, 2), chessboard(2, 2))
    yield chessboard_join((3, 0, 2), 2)
    yield join_all([simplex(2), chessboard(2, 3), simplex(1)])


def test_built_complexes_are_downward_closed():
    for K in _built_complexes():
        for face in K:
            for i in range(len(face)):
                assert face[:i] + face[i + 1:] in K, (K, face)


@pytest.mark.parametrize('triple', [
    ((2, 2), (3, 2), (1, 1)),
    ((3, 2), (2, 3), (2, 2)),
    ((1, 2), (3, 3), (2, 1)),
])
def test_join_is_associative_on_f_vectors(triple):
    X, Y, Z = (chessboard(*mn) for mn in triple)
    left = join(join(X, Y), Z)
    right = join(X, join(Y, Z))
    assert left.f_vector() == right.f_vector()
    assert left.n_factors == right.n_factors == 3
    assert sorted(left) == sorted(right)


def _f_convolution(X, Y):
    return tuple(np.convolve(X.f_vector(), Y.f_vector()).tolist())


@pytest.mark.parametrize('a', BOARDS)
@pytest.mark.parametrize('b', [(1, 1), (2, 2), (3, 2)])
def test_join_f_vector_is_convolution(a, b):
    X, Y = chessboard(*a), chessboard(*b)
    assert join(X, Y).f_vector() == _f_convolution(X, Y)


@pytest.mark.slow
@pytest.mark.parametrize('a', BOARDS)
@pytest.mark.parametrize('b', BOARDS)
def test_join_f_vector_is_convolution_full_grid(a, b):
    X, Y = chessboard(*a), chessboard(*b)
    assert join(X, Y).f_vector() == _f_convolution(X, Y)
