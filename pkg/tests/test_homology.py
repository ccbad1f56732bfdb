from math import prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix

from src.complexes import SimplicialComplex, Vertex, chessboard, empty_complex, join, simplex
from src.homology import (
    ALL_VANISHING,
    Coefficients,
    betti_numbers,
    boundary_matrix,
    default_coefficient_list,
    euler_characteristic,
    homological_connectivity,
    invariant_factors,
    parse_coefficients,
    rank_mod_p,
    rank_rational,
    reduced_homology_nonzero,
    smith_diagonal,
    to_domain_matrix,
)
from src.utils.errors import FaceBudgetExceeded


# six-vertex real projective plane
RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
]


@pytest.fixture(scope='module')
def rp2():
    return SimplicialComplex.from_faces([[Vertex(0, v) for v in f] for f in RP2_FACETS], name='RP2')


def _columns(matrix):
    rows, cols = len(matrix), len(matrix[0])
    return [{i: matrix[i][j] for i in range(rows) if matrix[i][j]} for j in range(cols)]


def test_edge_boundary_signs():
    B = boundary_matrix(simplex(2), 1)
    assert B.to_dense().tolist() == [[-1], [1]]


def test_augmentation_row():
    B = boundary_matrix(simplex(3), 0)
    assert B.shape == (1, 3)
    assert B.to_dense().tolist() == [[1, 1, 1]]


def test_boundary_of_boundary_vanishes():
    K = chessboard(3, 4)
    for k in range(1, K.dim + 1):
        product = boundary_matrix(K, k - 1).to_dense() @ boundary_matrix(K, k).to_dense()
        assert not np.any(product)


def test_boundary_degree_out_of_range():
    with pytest.raises(ValueError):
        boundary_matrix(chessboard(3, 2), 2)


@pytest.mark.parametrize('coeff', ['Q', 'Z', 'Z2', 'Z3'])
def test_hexagon(coeff):
    profile = betti_numbers(chessboard(3, 2), coeff)
    assert profile.reduced_betti == (0, 1)
    assert profile.torsion == ((), ())


def test_single_point_has_no_reduced_homology():
    K = chessboard(1, 1)
    assert betti_numbers(K, 'Z').reduced_betti == (0,)
    estimate = homological_connectivity(K)
    assert estimate.hconn == ALL_VANISHING
    assert estimate.witness_degree is None


def test_two_disjoint_edges_are_disconnected():
    estimate = homological_connectivity(chessboard(2, 2), ['Q'])
    assert estimate.hconn == -1
    assert estimate.witness_degree == 0


def test_empty_complex_connectivity():
    estimate = homological_connectivity(empty_complex())
    assert estimate.hconn == -2
    assert estimate.witness_degree == -1
    assert reduced_homology_nonzero(empty_complex(), -1)
    with pytest.raises(ValueError):
        betti_numbers(empty_complex())


@pytest.mark.parametrize('r', [2, 3, 4])
def test_boards_with_2r_minus_1_rows(r):
    K = chessboard(2 * r - 1, r)
    estimate = homological_connectivity(K, ['Z'])
    assert estimate.hconn == r - 2
    assert reduced_homology_nonzero(K, r - 1, 'Z')


def test_rp2_torsion(rp2):
    assert rp2.f_vector() == (1, 6, 15, 10)
    integral = betti_numbers(rp2, 'Z')
    assert integral.reduced_betti == (0, 0, 0)
    assert integral.torsion == ((), (2,), ())
    assert not integral.is_zero(1)
    assert betti_numbers(rp2, 'Z2').reduced_betti == (0, 1, 1)
    assert betti_numbers(rp2, 'Q').reduced_betti == (0, 0, 0)


def test_rp2_connectivity_depends_on_coefficients(rp2):
    assert homological_connectivity(rp2, ['Q']).hconn == ALL_VANISHING
    estimate = homological_connectivity(rp2, ['Q', 'Z2'])
    assert estimate.hconn == 0
    assert estimate.witness_degree == 1
    assert estimate.coefficients_tried == ('Q', 'Z2')
    assert homological_connectivity(rp2, ['Z']).hconn == 0


def test_join_of_two_zero_spheres_is_a_circle():
    X = chessboard(2, 2)
    assert betti_numbers(join(X, X), 'Q').reduced_betti == (0, 1, 0, 0)


def _convolve(bx, by, length):
    out = [0] * length
    for i, a in enumerate(bx):
        for j, b in enumerate(by):
            out[i + j + 1] += a * b
    return tuple(out)


@pytest.mark.parametrize('a', [(1, 2), (2, 2), (3, 2), (2, 3)])
@pytest.mark.parametrize('b', [(1, 2), (2, 2), (3, 2), (3, 3)])
def test_join_betti_convolution(a, b):
    X, Y = chessboard(*a), chessboard(*b)
    J = join(X, Y)
    bx = betti_numbers(X, 'Q').reduced_betti
    by = betti_numbers(Y, 'Q').reduced_betti
    assert betti_numbers(J, 'Q').reduced_betti == _convolve(bx, by, J.dim + 1)


@pytest.mark.slow
@pytest.mark.parametrize('a', [(m, n) for m in range(1, 4) for n in range(1, 4)])
@pytest.mark.parametrize('b', [(m, n) for m in range(1, 4) for n in range(1, 4)])
def test_join_betti_convolution_full_grid(a, b):
    X, Y = chessboard(*a), chessboard(*b)
    J = join(X, Y)
    bx = betti_numbers(X, 'Q').reduced_betti
    by = betti_numbers(Y, 'Q').reduced_betti
    assert betti_numbers(J, 'Q').reduced_betti == _convolve(bx, by, J.dim + 1)


def test_euler_characteristic_matches_betti():
    for K in (chessboard(3, 2), chessboard(3, 3), chessboard(4, 3)):
        betti = betti_numbers(K, 'Q').reduced_betti
        assert euler_characteristic(K) - 1 == sum((-1) ** k * b for k, b in enumerate(betti))


def test_integral_budget():
    with pytest.raises(FaceBudgetExceeded):
        betti_numbers(chessboard(3, 3), 'Z', snf_column_budget=5)
    assert default_coefficient_list(chessboard(3, 3), snf_column_budget=5) == ['Q', 'Z2', 'Z3']
    assert default_coefficient_list(chessboard(3, 3)) == ['Z']


def test_parse_coefficients():
    assert parse_coefficients('Q') == Coefficients('Q')
    assert parse_coefficients('integers') == Coefficients('Z')
    assert parse_coefficients('Z2') == Coefficients('Zp', 2)
    assert parse_coefficients('Z_3') == Coefficients('Zp', 3)
    assert parse_coefficients('GF(5)') == Coefficients('Zp', 5)
    assert str(parse_coefficients('z7')) == 'Z7'
    with pytest.raises(ValueError):
        parse_coefficients('Z4')
    with pytest.raises(ValueError):
        parse_coefficients('R')


@pytest.mark.parametrize('diagonal,expected', [
    ([2, 3], [6]),
    ([2, 4], [2, 4]),
    ([4, 6], [2, 12]),
    ([1, 1, 5], [5]),
    ([1, 1], []),
])
def test_invariant_factors(diagonal, expected):
    assert invariant_factors(diagonal) == expected


def test_smith_diagonal_small():
    diag = smith_diagonal(_columns([[2, 4], [6, 8]]))
    assert invariant_factors(diag) == [2, 4]


small_matrices = st.integers(1, 5).flatmap(
    lambda rows: st.lists(st.lists(st.integers(-4, 4), min_size=rows, max_size=rows), min_size=1, max_size=5)
)


@given(cols=small_matrices)
@settings(max_examples=200, deadline=None)
def test_ranks_agree_with_sympy(cols):
    columns = [{i: v for i, v in enumerate(col) if v} for col in cols]
    expected = Matrix(cols).T.rank()
    assert rank_rational(columns) == expected
    assert len(smith_diagonal(columns)) == expected
    assert rank_mod_p(columns, 2) <= expected


@given(n=st.integers(1, 4), data=st.data())
@settings(max_examples=100, deadline=None)
def test_smith_product_is_determinant(n, data):
    rows = data.draw(st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n))
    det = Matrix(rows).det()
    diag = smith_diagonal(_columns(rows))
    if det == 0:
        assert len(diag) < n
    else:
        assert prod(diag) == abs(int(det))
        assert prod(invariant_factors(diag)) == abs(int(det))


def test_field_ranks_see_the_characteristic():
    columns = _columns([[2, 0], [0, 3]])
    assert rank_rational(columns) == 2
    assert rank_mod_p(columns, 2) == 1
    assert rank_mod_p(columns, 3) == 1
    assert rank_mod_p(columns, 5) == 2
    assert rank_mod_p([{0: 4}, {}], 2) == 0
    assert rank_rational([{}, {}]) == 0


def test_to_domain_matrix_shape():
    M = to_domain_matrix([{0: 1, 3: -1}, {}], n_rows=5)
    assert M.shape == (5, 2)
    assert M.to_Matrix() == Matrix([[1, 0], [0, 0], [0, 0], [-1, 0], [0, 0]])
    assert to_domain_matrix([{2: 7}]).shape == (3, 1)


def _span_size_mod_p(cols, p):
    vectors = {tuple(0 for _ in cols[0])}
    for col in cols:
        vectors = {tuple((a + c * b) % p for a, b in zip(v, col)) for v in vectors for c in range(p)}
    return len(vectors)


@given(cols=small_matrices, p=st.sampled_from([2, 3, 5]))
@settings(max_examples=100, deadline=None)
def test_rank_mod_p_matches_span_size(cols, p):
    columns = [{i: v for i, v in enumerate(col) if v} for col in cols]
    assert p ** rank_mod_p(columns, p) == _span_size_mod_p(cols, p)


SMALL_BOARDS = [(m, n) for m in range(1, 6) for n in range(1, 6)]


@pytest.mark.parametrize('m,n', SMALL_BOARDS)
def test_field_betti_numbers_are_consistent(m, n):
    K = chessboard(m, n)
    chi = euler_characteristic(K) - 1
    rational = betti_numbers(K, 'Q').reduced_betti
    for coeff in ('Q', 'Z2', 'Z3'):
        betti = betti_numbers(K, coeff).reduced_betti
        assert chi == sum((-1) ** k * b for k, b in enumerate(betti)), coeff
        assert all(q <= b for q, b in zip(rational, betti)), coeff
