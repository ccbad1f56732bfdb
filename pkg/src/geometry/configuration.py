"""
Colored point configurations with exact rational coordinates.
"""

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from numbers import Integral
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from src.utils.config import GEOMETRY_CONFIG, get_logger

from .rational import RationalPoint, determinant, format_point, make_point, parse_rational


logger = get_logger(__name__)


def _point_index(c, i) -> int:
    if isinstance(i, bool) or not isinstance(i, Integral):
        raise ValueError(f"color class {c} has a non-integer point index {i!r}")
    return int(i)


@dataclass(frozen=True)
class ColoredConfiguration:
    """
    Points in R^d with a partition of their indices into color classes.
    Empty classes are allowed; classes are stored sorted.
    """
    d: int
    points: Tuple[RationalPoint, ...]
    color_classes: Tuple[Tuple[int, ...], ...]
    _color_of: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension must be >= 1, got {self.d}")
        points = tuple(make_point(p) for p in self.points)
        for i, p in enumerate(points):
            if len(p) != self.d:
                raise ValueError(f"point {i} has {len(p)} coordinates, expected {self.d}")
        classes = tuple(tuple(sorted(_point_index(c, i) for i in cls)) for c, cls in enumerate(self.color_classes))

        color_of = {}
        for c, cls in enumerate(classes):
            for i in cls:
                if not 0 <= i < len(points):
                    raise ValueError(f"color class {c} refers to point {i}, which does not exist")
                if i in color_of:
                    raise ValueError(f"point {i} is in color classes {color_of[i]} and {c}")
                color_of[i] = c
        missing = sorted(set(range(len(points))) - set(color_of))
        if missing:
            raise ValueError(f"points {missing} are not in any color class")

        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'color_classes', classes)
        object.__setattr__(self, '_color_of', color_of)

    @classmethod
    def uncolored(cls, points: Sequence, d: int) -> 'ColoredConfiguration':
        """Every point is its own color class."""
        return cls(d=d, points=tuple(points), color_classes=tuple((i,) for i in range(len(points))))

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def cards(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.color_classes)

    def color_of(self, index: int) -> int:
        return self._color_of[index]

    def to_dict(self):
        return {
            'dimension': self.d,
            'points': [format_point(p) for p in self.points],
            'colors': [list(c) for c in self.color_classes],
        }

    def digest(self) -> str:
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def general_position_check(config: ColoredConfiguration) -> bool:
    """True iff no d+1 of the points lie on a common affine hyperplane."""
    d, pts = config.d, config.points
    for subset in combinations(range(len(pts)), d + 1):
        base = pts[subset[0]]
        rows = [[a - b for a, b in zip(pts[i], base)] for i in subset[1:]]
        if determinant(rows) == 0:
            return False
    return True


def _blocks(cards: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    classes, start = [], 0
    for c in cards:
        classes.append(tuple(range(start, start + c)))
        start += c
    return tuple(classes)


def random_configuration(
    d: int,
    cards: Sequence[int],
    seed: int,
    coordinate_bound: Optional[int] = None,
    max_denominator: Optional[int] = None,
    max_regenerations: Optional[int] = None,
) -> ColoredConfiguration:
    """
    Deterministic random configuration in general position.

    Coordinates are p/q with 1 <= q <= max_denominator inside
    [0, coordinate_bound]. The generator is Philox keyed by the seed, so the
    output is a pure function of (d, cards, seed). Class i holds a consecutive
    block of cards[i] indices.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if not cards or any(c < 0 for c in cards):
        raise ValueError(f"cards must be a nonempty sequence of nonnegative sizes, got {cards}")
    if seed < 0:
        raise ValueError(f"seed must be >= 0, got {seed}")
    bound = coordinate_bound or GEOMETRY_CONFIG['coordinate_bound']
    max_den = max_denominator or GEOMETRY_CONFIG['max_denominator']
    attempts = max_regenerations or GEOMETRY_CONFIG['max_regenerations']

    n = sum(cards)
    rng = np.random.Generator(np.random.Philox(key=seed))
    classes = _blocks(cards)

    for attempt in range(1, attempts + 1):
        dens = rng.integers(1, max_den + 1, size=(n, d), dtype=np.int64)
        nums = rng.integers(0, bound * dens + 1, dtype=np.int64)
        points = tuple(
            tuple(Fraction(int(nums[i, t]), int(dens[i, t])) for t in range(d))
            for i in range(n)
        )
        config = ColoredConfiguration(d=d, points=points, color_classes=classes)
        if general_position_check(config):
            if attempt > 1:
                logger.debug("seed %d: general position after %d draws", seed, attempt)
            return config
    raise RuntimeError(f"no general-position configuration after {attempts} draws (d={d}, cards={list(cards)}, seed={seed})")


def scale_configuration(config: ColoredConfiguration, factor) -> ColoredConfiguration:
    factor = parse_rational(factor)
    if factor <= 0:
        raise ValueError(f"scale factor must be positive, got {factor}")
    points = tuple(tuple(c * factor for c in p) for p in config.points)
    return ColoredConfiguration(d=config.d, points=points, color_classes=config.color_classes)
