"""
Connectivity / index guarantee for rainbow Tverberg partitions.

A coloring with class sizes c_1..c_m admits r pairwise disjoint rainbow faces
with a common image point whenever r is a prime power and the join
Δ_{c_1,r} * ... * Δ_{c_m,r} is at least ((d+1)(r-1)-1)-connected: its index
then exceeds the index (r-1)(d+1) of the sphere S(W_r^{d+1}), so no
equivariant map into that sphere exists.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Optional, Sequence, Tuple

from sympy import factorint, isprime

from src.utils.errors import HypothesisMismatch


class TheoremTag(str, Enum):
    ZIVALJEVIC_VRECICA = 'zivaljevic-vrecica'
    ONE_LARGE_CLASS = 'one-large-class'
    FLEXIBLE = 'flexible'
    FORMULA_ONLY = 'formula-only'
    NONE = 'none'
    OPTIMAL_COLORED = 'optimal-colored'
    BARANY_LARMAN = 'barany-larman'
    TVERBERG = 'tverberg'


TAG_ALIASES = {
    'zv': TheoremTag.ZIVALJEVIC_VRECICA,
    'zivaljevic-vrecica': TheoremTag.ZIVALJEVIC_VRECICA,
    'one-large': TheoremTag.ONE_LARGE_CLASS,
    'one-large-class': TheoremTag.ONE_LARGE_CLASS,
    'flexible': TheoremTag.FLEXIBLE,
    'optimal': TheoremTag.OPTIMAL_COLORED,
    'optimal-colored': TheoremTag.OPTIMAL_COLORED,
    'barany-larman': TheoremTag.BARANY_LARMAN,
    'bl': TheoremTag.BARANY_LARMAN,
    'tverberg': TheoremTag.TVERBERG,
}


def parse_theorem_tag(text) -> TheoremTag:
    if isinstance(text, TheoremTag):
        return text
    key = str(text).strip().lower()
    if key not in TAG_ALIASES:
        raise ValueError(f"Unknown theorem tag: {text!r}. Supported: {sorted(TAG_ALIASES)}")
    return TAG_ALIASES[key]


@dataclass(frozen=True)
class CriterionInput:
    d: int
    r: int
    cards: Tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension d must be >= 1, got {self.d}")
        if self.r < 2:
            raise ValueError(f"multiplicity r must be >= 2, got {self.r}")
        if len(self.cards) < 1:
            raise ValueError("cards must contain at least one color class")
        if any((not isinstance(c, int)) or c < 0 for c in self.cards):
            raise ValueError(f"cards must be nonnegative integers, got {self.cards}")
        object.__setattr__(self, 'cards', tuple(self.cards))


@dataclass(frozen=True)
class CriterionReport:
    d: int
    r: int
    cards: Tuple[int, ...]
    applicable: bool
    prime_power: Optional[Tuple[int, int]]
    conn_per_factor: Tuple[int, ...]
    join_conn_lower: int
    sphere_index: int
    guaranteed: bool
    theorem_tag: TheoremTag
    x_vector: Optional[Tuple[int, ...]] = field(default=None)

    def to_dict(self):
        return {
            'd': self.d,
            'r': self.r,
            'cards': list(self.cards),
            'applicable': self.applicable,
            'prime_power': list(self.prime_power) if self.prime_power else None,
            'conn_per_factor': list(self.conn_per_factor),
            'join_conn_lower': self.join_conn_lower,
            'index_lower': self.join_conn_lower + 2,
            'sphere_index': self.sphere_index,
            'guaranteed': self.guaranteed,
            'theorem_tag': self.theorem_tag.value,
            'x_vector': list(self.x_vector) if self.x_vector is not None else None,
        }


def is_prime_power(r: int) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """(True, (p, n)) when r = p^n with p prime and n >= 1, else (False, None)."""
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    factors = factorint(r)
    if len(factors) != 1:
        return False, None
    (p, n), = factors.items()
    return True, (int(p), int(n))


def tverberg_number(d: int, r: int) -> int:
    """N = (r-1)(d+1); any N+1 points in R^d admit a Tverberg r-partition."""
    if d < 1 or r < 2:
        raise ValueError(f"need d >= 1 and r >= 2, got d={d}, r={r}")
    return (r - 1) * (d + 1)


def sphere_index(d: int, r: int) -> int:
    """Index of S(W_r^{d+1}), a free sphere of dimension (r-1)(d+1)-1."""
    if d < 1 or r < 2:
        raise ValueError(f"need d >= 1 and r >= 2, got d={d}, r={r}")
    return (r - 1) * (d + 1)


def chessboard_connectivity_formula(m: int, n: int) -> int:
    """conn(Δ_{m,n}) = min{m, n, floor((m+n+1)/3)} - 2."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    return min(m, n, (m + n + 1) // 3) - 2


def factor_connectivity(c: int, r: int) -> int:
    """Connectivity of Δ_{c,r}; an empty class gives the empty complex, conn -2."""
    if c == 0:
        return -2
    return chessboard_connectivity_formula(c, r)


def join_connectivity_lower_bound(conn_values: Sequence[int]) -> int:
    """conn(X_1 * ... * X_m) >= sum conn(X_i) + 2(m-1)."""
    if len(conn_values) == 0:
        raise ValueError("conn_values must be nonempty")
    return sum(conn_values) + 2 * (len(conn_values) - 1)


def _largest_classes(d: int, cards: Sequence[int]) -> Optional[Tuple[int, ...]]:
    if len(cards) < d + 1:
        return None
    return tuple(sorted(cards, reverse=True)[:d + 1])


def flexible_x_vector(d: int, r: int, cards: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """
    Lexicographically smallest x with x_i >= 0, 2x_i + 1 <= r, sum x_i <= d and
    c_i >= 2r - 1 - 3x_i, matched against the classes in their given order.
    Only the d+1 largest classes are used when more are given.
    """
    top = _largest_classes(d, cards)
    if top is None:
        return None
    if len(cards) == d + 1:
        top = tuple(cards)
    x_max = (r - 1) // 2
    for x in product(range(x_max + 1), repeat=d + 1):
        if sum(x) > d:
            continue
        if all(c >= 2 * r - 1 - 3 * xi for c, xi in zip(top, x)):
            return tuple(x)
    return None


def _matches_zivaljevic_vrecica(d, r, cards) -> bool:
    top = _largest_classes(d, cards)
    return top is not None and all(c >= 2 * r - 1 for c in top)


def _matches_one_large_class(d, r, cards) -> bool:
    top = _largest_classes(d, cards)
    return top is not None and top[0] >= 2 * r - 1 and all(c >= 2 * r - 4 for c in top[1:])


def guarantee_criterion(data: CriterionInput) -> CriterionReport:
    """
    Decide whether a rainbow Tverberg partition is guaranteed. False means
    only "not guaranteed by this criterion".
    """
    d, r, cards = data.d, data.r, data.cards
    applicable, decomposition = is_prime_power(r)
    conns = tuple(factor_connectivity(c, r) for c in cards)
    lower = join_connectivity_lower_bound(conns)
    index = sphere_index(d, r)
    guaranteed = applicable and lower + 2 > index

    x_vector = flexible_x_vector(d, r, cards)
    if not applicable:
        tag = TheoremTag.NONE
    elif _matches_zivaljevic_vrecica(d, r, cards):
        tag = TheoremTag.ZIVALJEVIC_VRECICA
    elif _matches_one_large_class(d, r, cards):
        tag = TheoremTag.ONE_LARGE_CLASS
    elif x_vector is not None:
        tag = TheoremTag.FLEXIBLE
    elif guaranteed:
        tag = TheoremTag.FORMULA_ONLY
    else:
        tag = TheoremTag.NONE

    return CriterionReport(
        d=d,
        r=r,
        cards=cards,
        applicable=applicable,
        prime_power=decomposition,
        conn_per_factor=conns,
        join_conn_lower=lower,
        sphere_index=index,
        guaranteed=guaranteed,
        theorem_tag=tag,
        x_vector=x_vector,
    )


def optimal_colored_hypotheses(d: int, r: int, cards: Sequence[int]) -> bool:
    """r prime, every class of size at most r-1, at least (r-1)(d+1)+1 points."""
    return isprime(r) and all(c <= r - 1 for c in cards) and sum(cards) >= tverberg_number(d, r) + 1


def barany_larman_hypotheses(d: int, r: int, cards: Sequence[int]) -> bool:
    """r+1 prime and exactly d+1 classes, each of size at least r."""
    return isprime(r + 1) and len(cards) == d + 1 and all(c >= r for c in cards)


def tverberg_hypotheses(d: int, r: int, n_points: int) -> bool:
    return n_points >= tverberg_number(d, r) + 1


def check_hypotheses(tag, d: int, r: int, cards: Sequence[int]) -> TheoremTag:
    """Raise HypothesisMismatch unless the cards satisfy the tagged statement."""
    tag = parse_theorem_tag(tag)
    cards = tuple(cards)

    if tag == TheoremTag.OPTIMAL_COLORED:
        ok = optimal_colored_hypotheses(d, r, cards)
    elif tag == TheoremTag.BARANY_LARMAN:
        ok = barany_larman_hypotheses(d, r, cards)
    elif tag == TheoremTag.TVERBERG:
        ok = tverberg_hypotheses(d, r, sum(cards))
    elif tag in (TheoremTag.FORMULA_ONLY, TheoremTag.NONE):
        raise HypothesisMismatch(f"'{tag.value}' is not a theorem that can be verified")
    else:
        report = guarantee_criterion(CriterionInput(d=d, r=r, cards=cards))
        patterns = {
            TheoremTag.ZIVALJEVIC_VRECICA: lambda: _matches_zivaljevic_vrecica(d, r, cards),
            TheoremTag.ONE_LARGE_CLASS: lambda: _matches_one_large_class(d, r, cards),
            TheoremTag.FLEXIBLE: lambda: report.x_vector is not None,
        }
        ok = report.applicable and report.guaranteed and patterns[tag]()

    if not ok:
        raise HypothesisMismatch(f"cards {list(cards)} with d={d}, r={r} do not satisfy '{tag.value}'")
    return tag
