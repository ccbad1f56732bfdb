"""
Exact feasibility test: do the convex hulls of a family of point sets share a point?

Variables are the barycentric weights λ_{j,v} >= 0 of every vertex v of every
face j. Each face's weights sum to 1, and the weighted point of face 0 equals
the weighted point of every other face, coordinate by coordinate. The system is
solved by a phase-one simplex over Fractions with Bland's rule, so the answer
is exact and the method terminates.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.utils.config import GEOMETRY_CONFIG, get_logger

from .rational import RationalPoint, format_point, format_rational, make_point


logger = get_logger(__name__)


@dataclass(frozen=True)
class TverbergWitness:
    """Convex coefficients per face (keyed by point label) and the common point."""
    coefficients: Tuple[Dict[int, Fraction], ...]
    common_point: RationalPoint

    def to_dict(self):
        return {
            'coefficients': [
                {str(label): format_rational(w) for label, w in sorted(face.items())}
                for face in self.coefficients
            ],
            'common_point': format_point(self.common_point),
        }


class PhaseOneTableau:
    """
    Dense tableau for min Σ a_i subject to A x + a = b, x >= 0, a >= 0.

    Rows with negative right-hand side are negated first, so the artificial
    basis is feasible from the start.
    """

    def __init__(self, A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
        self.m = len(A)
        self.n = len(A[0]) if self.m else 0
        width = self.n + self.m

        self.rows: List[List[Fraction]] = []
        self.rhs: List[Fraction] = []
        for i, (row, bi) in enumerate(zip(A, b)):
            row = [Fraction(v) for v in row]
            bi = Fraction(bi)
            if bi < 0:
                row, bi = [-v for v in row], -bi
            artificial = [Fraction(0)] * self.m
            artificial[i] = Fraction(1)
            self.rows.append(row + artificial)
            self.rhs.append(bi)

        self.basis = list(range(self.n, width))
        # reduced costs of the phase-one objective
        self.cost = [-sum((r[j] for r in self.rows), Fraction(0)) if j < self.n else Fraction(0)
                     for j in range(width)]
        self.neg_objective = -sum(self.rhs, Fraction(0))
        self.pivots = 0

    def pivot(self, i: int, j: int):
        piv = self.rows[i][j]
        self.rows[i] = [v / piv for v in self.rows[i]]
        self.rhs[i] /= piv
        pivot_row = self.rows[i]

        for k in range(self.m):
            if k != i:
                f = self.rows[k][j]
                if f:
                    self.rows[k] = [a - f * p for a, p in zip(self.rows[k], pivot_row)]
                    self.rhs[k] -= f * self.rhs[i]
        f = self.cost[j]
        self.cost = [c - f * p for c, p in zip(self.cost, pivot_row)]
        self.neg_objective -= f * self.rhs[i]

        self.basis[i] = j
        self.pivots += 1

    def bland_step(self) -> str:
        try:
            j = min(j for j, c in enumerate(self.cost) if c < 0)
        except ValueError:
            return 'optimal'
        try:
            _, _, i = min((self.rhs[i] / self.rows[i][j], self.basis[i], i)
                          for i in range(self.m)
                          if self.rows[i][j] > 0)
        except ValueError:
            # phase one is bounded below by zero
            raise RuntimeError("phase-one simplex reported an unbounded direction")
        self.pivot(i, j)
        return 'go_on'

    def solve(self) -> bool:
        """Run to optimality; True iff the original system is feasible."""
        while self.bland_step() != 'optimal':
            pass
        return self.neg_objective == 0

    def solution(self) -> List[Fraction]:
        x = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                x[var] = self.rhs[i]
        return x


def _normalize_faces(faces, labels):
    if len(faces) == 0:
        raise ValueError("need at least one face")
    faces = [[make_point(p) for p in face] for face in faces]
    if any(len(face) == 0 for face in faces):
        raise ValueError("faces must be nonempty")
    d = len(faces[0][0])
    if any(len(p) != d for face in faces for p in face):
        raise ValueError("all points must have the same dimension")

    if labels is None:
        labels, next_label = [], 0
        for face in faces:
            labels.append(list(range(next_label, next_label + len(face))))
            next_label += len(face)
    else:
        labels = [list(face_labels) for face_labels in labels]
        if [len(lab) for lab in labels] != [len(face) for face in faces]:
            raise ValueError("labels must match the faces one to one")
    return faces, labels, d


def common_point_feasible(
    faces: Sequence[Sequence[Sequence]],
    labels: Optional[Sequence[Sequence[int]]] = None,
) -> Optional[TverbergWitness]:
    """
    Return a witness if conv(face_0) ∩ ... ∩ conv(face_{k-1}) is nonempty, else None.

    `labels` names the points of each face in the witness; by default points
    are numbered consecutively across faces.
    """
    faces, labels, d = _normalize_faces(faces, labels)

    offsets, total = [], 0
    for face in faces:
        offsets.append(total)
        total += len(face)

    A, b = [], []
    for j, face in enumerate(faces):
        row = [Fraction(0)] * total
        for v in range(len(face)):
            row[offsets[j] + v] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    for j in range(1, len(faces)):
        for t in range(d):
            row = [Fraction(0)] * total
            for v, p in enumerate(faces[0]):
                row[offsets[0] + v] += p[t]
            for v, p in enumerate(faces[j]):
                row[offsets[j] + v] -= p[t]
            A.append(row)
            b.append(Fraction(0))

    tableau = PhaseOneTableau(A, b)
    if not tableau.solve():
        return None
    x = tableau.solution()

    coefficients = tuple(
        {labels[j][v]: x[offsets[j] + v] for v in range(len(face)) if x[offsets[j] + v] != 0}
        for j, face in enumerate(faces)
    )
    common = tuple(
        sum((x[offsets[0] + v] * p[t] for v, p in enumerate(faces[0])), Fraction(0))
        for t in range(d)
    )
    witness = TverbergWitness(coefficients=coefficients, common_point=common)

    if GEOMETRY_CONFIG['verify_witnesses'] and not verify_witness(faces, witness, labels):
        raise RuntimeError(f"internal error: feasibility witness failed verification after {tableau.pivots} pivots")
    return witness


def verify_witness(
    faces: Sequence[Sequence[Sequence]],
    witness: TverbergWitness,
    labels: Optional[Sequence[Sequence[int]]] = None,
) -> bool:
    """Exact check that every face's weights are convex and reach the common point."""
    try:
        faces, labels, d = _normalize_faces(faces, labels)
    except ValueError:
        return False
    if len(witness.coefficients) != len(faces) or len(witness.common_point) != d:
        return False

    for face, face_labels, weights in zip(faces, labels, witness.coefficients):
        by_label = dict(zip(face_labels, face))
        if not set(weights) <= set(by_label):
            return False
        if any(isinstance(w, float) or w < 0 for w in weights.values()):
            return False
        if sum(weights.values(), Fraction(0)) != 1:
            return False
        point = tuple(
            sum((Fraction(w) * by_label[label][t] for label, w in weights.items()), Fraction(0))
            for t in range(d)
        )
        if point != tuple(witness.common_point):
            return False
    return True
