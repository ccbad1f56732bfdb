"""
Finite abstract simplicial complexes: chessboard complexes, joins, f-vectors.

Faces are strictly sorted tuples of Vertex; every listing is lexicographic on
(tag, label), so all outputs are deterministic.
"""

from functools import cached_property
from itertools import combinations, permutations
from math import comb, factorial
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from src.utils.config import get_face_budget
from src.utils.errors import FaceBudgetExceeded


class Vertex(NamedTuple):
    tag: int
    label: int


Face = Tuple[Vertex, ...]

EMPTY_FACE: Face = ()


class SimplicialComplex:
    """
    Immutable finite simplicial complex holding its full face list.

    Args:
        faces_by_dim: dimension -> sorted tuple of faces; must already be
            downward closed and contain the empty face under dimension -1
        n_factors: number of join factors (tags 0..n_factors-1 are reserved)
        name: display name used in reports
    """

    def __init__(self, faces_by_dim: Dict[int, Tuple[Face, ...]], n_factors: int = 1, name: str = ''):
        self._faces_by_dim = {k: tuple(v) for k, v in faces_by_dim.items() if v}
        self._faces_by_dim.setdefault(-1, (EMPTY_FACE,))
        self.n_factors = n_factors
        self.name = name

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[Vertex]], name: str = '', face_budget: Optional[int] = None):
        """
        Build the downward closure of the given faces. Vertex tags must be
        >= 0; n_factors becomes max tag + 1 so later joins stay disjoint.
        """
        budget = get_face_budget() if face_budget is None else face_budget
        closed = set()
        for face in faces:
            face = tuple(sorted(set(face)))
            if any(v.tag < 0 for v in face):
                raise ValueError(f"vertex tags must be >= 0, got {face}")
            for k in range(len(face) + 1):
                closed.update(combinations(face, k))
                if len(closed) > budget + 1:
                    raise FaceBudgetExceeded(f"complex {name or '(unnamed)'}", len(closed) - 1, budget)
        closed.add(EMPTY_FACE)
        n_factors = max((v.tag for face in closed for v in face), default=0) + 1
        return cls(_group_by_dim(closed), n_factors=n_factors, name=name)

    @property
    def dim(self) -> int:
        return max(self._faces_by_dim)

    @cached_property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(face[0] for face in self._faces_by_dim.get(0, ()))

    @cached_property
    def _face_set(self):
        return frozenset(f for faces in self._faces_by_dim.values() for f in faces)

    def faces_of_dim(self, k: int) -> Tuple[Face, ...]:
        return self._faces_by_dim.get(k, ())

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self._faces_by_dim.get(k, ())) for k in range(-1, self.dim + 1))

    @property
    def num_faces(self) -> int:
        """Number of nonempty faces."""
        return sum(len(v) for k, v in self._faces_by_dim.items() if k >= 0)

    def is_empty(self) -> bool:
        return self.dim < 0

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self._face_set

    def __iter__(self):
        for k in sorted(self._faces_by_dim):
            yield from self._faces_by_dim[k]

    def __repr__(self):
        label = self.name or 'SimplicialComplex'
        return f"<{label} dim={self.dim} f={self.f_vector()}>"


def _group_by_dim(faces: Iterable[Face]) -> Dict[int, Tuple[Face, ...]]:
    grouped: Dict[int, List[Face]] = {}
    for face in faces:
        grouped.setdefault(len(face) - 1, []).append(face)
    return {k: tuple(sorted(v)) for k, v in grouped.items()}


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex({-1: (EMPTY_FACE,)}, name='empty')


def simplex(n_vertices: int, face_budget: Optional[int] = None) -> SimplicialComplex:
    """Full simplex on n_vertices vertices (labels 0..n-1)."""
    if n_vertices < 0:
        raise ValueError(f"n_vertices must be >= 0, got {n_vertices}")
    budget = get_face_budget() if face_budget is None else face_budget
    total = 2**n_vertices - 1
    if total > budget:
        raise FaceBudgetExceeded(f"simplex on {n_vertices} vertices", total, budget)
    verts = [Vertex(0, i) for i in range(n_vertices)]
    faces = {k - 1: tuple(combinations(verts, k)) for k in range(n_vertices + 1)}
    return SimplicialComplex(faces, name=f"simplex({n_vertices})")


def chessboard_face_count(m: int, n: int) -> int:
    """Nonempty faces of the m x n chessboard complex."""
    return sum(comb(m, k) * comb(n, k) * factorial(k) for k in range(1, min(m, n) + 1))


def decode_cell(vertex: Vertex, n: int) -> Tuple[int, int]:
    """1-based (row, column) of a chessboard vertex on a board with n columns."""
    row, col = divmod(vertex.label, n)
    return row + 1, col + 1


def chessboard(m: int, n: int, face_budget: Optional[int] = None) -> SimplicialComplex:
    """
    Chessboard complex: faces are non-attacking rook placements on an m x n
    board. Cell (i, j) (1-based) has label (i-1)*n + (j-1).
    """
    if m <= 0 or n <= 0:
        raise ValueError(f"chessboard needs m, n >= 1, got m={m}, n={n}")
    budget = get_face_budget() if face_budget is None else face_budget
    total = chessboard_face_count(m, n)
    if total > budget:
        raise FaceBudgetExceeded(f"chessboard({m},{n})", total, budget)

    faces_by_dim = {-1: (EMPTY_FACE,)}
    for k in range(1, min(m, n) + 1):
        level = []
        for rows in combinations(range(m), k):
            for cols in permutations(range(n), k):
                level.append(tuple(sorted(Vertex(0, i * n + j) for i, j in zip(rows, cols))))
        faces_by_dim[k - 1] = tuple(sorted(level))
    return SimplicialComplex(faces_by_dim, name=f"chessboard({m},{n})")


def _retag(face: Face, shift: int) -> Face:
    return tuple(Vertex(v.tag + shift, v.label) for v in face)


def join(X: SimplicialComplex, Y: SimplicialComplex, face_budget: Optional[int] = None) -> SimplicialComplex:
    """
    Join X * Y. Y's tags are shifted past X's factors so the vertex sets are
    disjoint and joins of joins flatten left to right.
    """
    budget = get_face_budget() if face_budget is None else face_budget
    total = (X.num_faces + 1) * (Y.num_faces + 1) - 1
    if total > budget:
        raise FaceBudgetExceeded(f"join of {X.name or 'X'} and {Y.name or 'Y'}", total, budget)

    shift = X.n_factors
    right = [_retag(tau, shift) for tau in Y]
    grouped: Dict[int, List[Face]] = {}
    for sigma in X:
        for tau in right:
            face = sigma + tau
            grouped.setdefault(len(face) - 1, []).append(face)
    faces_by_dim = {k: tuple(sorted(v)) for k, v in grouped.items()}

    name = f"{X.name or 'X'} * {Y.name or 'Y'}"
    return SimplicialComplex(faces_by_dim, n_factors=X.n_factors + Y.n_factors, name=name)


def join_all(complexes: Sequence[SimplicialComplex], face_budget: Optional[int] = None) -> SimplicialComplex:
    if not complexes:
        raise ValueError("join_all needs at least one complex")
    result = complexes[0]
    for other in complexes[1:]:
        result = join(result, other, face_budget=face_budget)
    return result


def chessboard_join(cards: Sequence[int], r: int, face_budget: Optional[int] = None) -> SimplicialComplex:
    """Join of chessboard complexes with r columns, one factor per color class."""
    if not cards:
        raise ValueError("cards must be nonempty")
    factors = []
    for c in cards:
        if c < 0:
            raise ValueError(f"color class sizes must be >= 0, got {c}")
        factors.append(empty_complex() if c == 0 else chessboard(c, r, face_budget=face_budget))
    return join_all(factors, face_budget=face_budget)


def f_vector(K: SimplicialComplex) -> Tuple[int, ...]:
    return K.f_vector()


def faces_of_dim(K: SimplicialComplex, k: int) -> Tuple[Face, ...]:
    return K.faces_of_dim(k)
