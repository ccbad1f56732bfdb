"""
Rainbow faces and exhaustive search for colored Tverberg partitions.

Faces are capped at d+1 vertices: a common point of r hulls lies in the hull
of at most d+1 vertices of each face (Carathéodory), so the cap never changes
whether a partition exists.
"""

import time
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from src.geometry import ColoredConfiguration, TverbergWitness, common_point_feasible
from src.utils.config import SEARCH_CONFIG, get_logger, get_time_budget
from src.utils.errors import SearchTimeout


logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class RainbowFace:
    vertex_indices: Tuple[int, ...]
    colors_used: FrozenSet[int] = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.vertex_indices)

    @property
    def min_vertex(self) -> int:
        return self.vertex_indices[0]


@dataclass(frozen=True)
class RainbowPartition:
    """r pairwise disjoint rainbow faces, sorted by smallest vertex index."""
    faces: Tuple[RainbowFace, ...]

    @property
    def r(self) -> int:
        return len(self.faces)

    @property
    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(f.vertex_indices for f in self.faces)

    def to_dict(self):
        return {
            'faces': [list(f.vertex_indices) for f in self.faces],
            'colors': [sorted(f.colors_used) for f in self.faces],
        }


SearchResult = Tuple[RainbowPartition, TverbergWitness]


def enumerate_rainbow_faces(config: ColoredConfiguration, max_size: int) -> Iterator[RainbowFace]:
    """
    Every nonempty vertex set with at most one vertex per class and at most
    max_size vertices, in lexicographic order of the sorted index tuples.
    """
    if not 1 <= max_size <= config.d + 1:
        raise ValueError(f"max_size must be in [1, {config.d + 1}], got {max_size}")
    n = config.n_points

    # depth-first with increasing children visits tuples in lexicographic order
    def extend(prefix, colors):
        yield RainbowFace(tuple(prefix), frozenset(colors))
        if len(prefix) == max_size:
            return
        for v in range(prefix[-1] + 1, n):
            c = config.color_of(v)
            if c not in colors:
                prefix.append(v)
                colors.add(c)
                yield from extend(prefix, colors)
                colors.discard(c)
                prefix.pop()

    for v in range(n):
        yield from extend([v], {config.color_of(v)})


def _bounding_box(config, face):
    pts = [config.points[i] for i in face.vertex_indices]
    return (
        tuple(min(p[t] for p in pts) for t in range(config.d)),
        tuple(max(p[t] for p in pts) for t in range(config.d)),
    )


def _intersect_boxes(a, b):
    lo = tuple(max(x, y) for x, y in zip(a[0], b[0]))
    hi = tuple(min(x, y) for x, y in zip(a[1], b[1]))
    if any(l > h for l, h in zip(lo, hi)):
        return None
    return lo, hi


class _PartitionSearch:
    """
    Depth-first walk over canonical r-tuples: each next face has a larger
    smallest vertex than the previous one and avoids the vertices used so far.
    Partial tuples are pruned by the box test and, from two faces on, by an
    exact feasibility check of the faces chosen so far.
    """

    def __init__(self, config: ColoredConfiguration, r: int, deadline: Optional[float], bbox_pretest: bool,
                 clock: Callable[[], float] = time.monotonic):
        self.config = config
        self.r = r
        self.deadline = deadline
        self.clock = clock
        self.bbox_pretest = bbox_pretest
        self.faces: List[RainbowFace] = list(enumerate_rainbow_faces(config, config.d + 1))
        self.mins = [f.min_vertex for f in self.faces]
        self.boxes = [_bounding_box(config, f) for f in self.faces]
        self.lp_calls = 0

    def _check_deadline(self):
        if self.deadline is not None and self.clock() > self.deadline:
            raise SearchTimeout(f"search for r={self.r} exceeded its time budget after {self.lp_calls} feasibility checks")

    def _feasible(self, chosen: Sequence[RainbowFace]) -> Optional[TverbergWitness]:
        self._check_deadline()
        self.lp_calls += 1
        faces = [[self.config.points[i] for i in f.vertex_indices] for f in chosen]
        return common_point_feasible(faces, labels=[f.vertex_indices for f in chosen])

    def _extend(self, chosen, used, box) -> Iterator[SearchResult]:
        if len(chosen) == self.r:
            witness = self._feasible(chosen)
            if witness is not None:
                yield RainbowPartition(tuple(chosen)), witness
            return
        if 2 <= len(chosen) and self._feasible(chosen) is None:
            return

        start = bisect_right(self.mins, chosen[-1].min_vertex)
        for k in range(start, len(self.faces)):
            face = self.faces[k]
            if used.intersection(face.vertex_indices):
                continue
            new_box = _intersect_boxes(box, self.boxes[k]) if self.bbox_pretest else box
            if new_box is None:
                continue
            self._check_deadline()
            chosen.append(face)
            yield from self._extend(chosen, used | set(face.vertex_indices), new_box)
            chosen.pop()

    def walk(self, first_faces: Optional[Sequence[int]] = None) -> Iterator[SearchResult]:
        """All feasible partitions in canonical order, optionally restricted to given first faces."""
        indices = range(len(self.faces)) if first_faces is None else first_faces
        for k in indices:
            self._check_deadline()
            face = self.faces[k]
            yield from self._extend([face], set(face.vertex_indices), self.boxes[k])


def _resolve_budget(time_budget):
    budget = get_time_budget() if time_budget is None else time_budget
    if budget <= 0:
        raise ValueError(f"time_budget must be positive, got {budget}")
    return budget


def _first_in_subtree(args) -> Optional[SearchResult]:
    config, r, first_faces, deadline, bbox_pretest = args
    search = _PartitionSearch(config, r, deadline, bbox_pretest, clock=time.time)
    return next(search.walk(first_faces), None)


def _parallel_first(config, r, workers, budget, bbox_pretest) -> Optional[SearchResult]:
    # wall-clock deadline shared by every worker process
    deadline = time.time() + budget
    n_faces = len(list(enumerate_rainbow_faces(config, config.d + 1)))
    chunksize = max(1, n_faces // (4 * workers))
    chunks = [list(range(s, min(s + chunksize, n_faces))) for s in range(0, n_faces, chunksize)]

    best, best_start = None, None
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {
            executor.submit(_first_in_subtree, (config, r, chunk, deadline, bbox_pretest)): chunk[0]
            for chunk in chunks
        }
        for future in as_completed(futures):
            if future.cancelled():
                continue
            start = futures[future]
            try:
                result = future.result()
            except SearchTimeout:
                # a timeout past the best chunk cannot change the answer
                if best_start is not None and start > best_start:
                    continue
                for other in futures:
                    other.cancel()
                raise
            if result is None or (best_start is not None and start > best_start):
                continue
            best, best_start = result, start
            # chunks after this one only hold larger keys
            for other, other_start in futures.items():
                if other_start > start:
                    other.cancel()
    return best


def find_colored_tverberg(
    config: ColoredConfiguration,
    r: int,
    workers: int = 1,
    time_budget: Optional[float] = None,
    bbox_pretest: Optional[bool] = None,
) -> Optional[SearchResult]:
    """
    Lexicographically first rainbow Tverberg r-partition and its witness, or None.

    With workers > 1 the first-face choices are spread over a process pool and
    the results are reduced by minimum canonical key, so the answer does not
    depend on the worker count. Raises SearchTimeout once time_budget seconds
    have passed; with a pool the budget is one wall-clock deadline for all
    workers, and pending subtrees are cancelled.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    budget = _resolve_budget(time_budget)
    if bbox_pretest is None:
        bbox_pretest = SEARCH_CONFIG['bbox_pretest']
    if config.n_points < r:
        return None

    if workers <= 1:
        search = _PartitionSearch(config, r, time.monotonic() + budget, bbox_pretest)
        result = next(search.walk(), None)
        logger.debug("r=%d search on %d points: %d feasibility checks", r, config.n_points, search.lp_calls)
        return result

    return _parallel_first(config, r, workers, budget, bbox_pretest)


def find_uncolored_tverberg(
    points: Sequence[Sequence],
    d: int,
    r: int,
    workers: int = 1,
    time_budget: Optional[float] = None,
) -> Optional[SearchResult]:
    """Tverberg partition with arbitrary faces: every point is its own color class."""
    config = ColoredConfiguration.uncolored(points, d)
    return find_colored_tverberg(config, r, workers=workers, time_budget=time_budget)


def enumerate_all_tverberg(
    config: ColoredConfiguration,
    r: int,
    limit: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> List[SearchResult]:
    """Rainbow Tverberg r-partitions in canonical order, at most `limit` of them."""
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    limit = SEARCH_CONFIG['enumerate_limit'] if limit is None else limit
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    budget = _resolve_budget(time_budget)
    if config.n_points < r:
        return []

    search = _PartitionSearch(config, r, time.monotonic() + budget, SEARCH_CONFIG['bbox_pretest'])
    found = []
    for result in search.walk():
        found.append(result)
        if len(found) >= limit:
            logger.info("enumeration stopped at the cap of %d partitions", limit)
            break
    return found


def is_valid_partition(config: ColoredConfiguration, partition: RainbowPartition, r: int) -> bool:
    """Disjoint, rainbow, r faces of size at most d+1, in canonical order."""
    if partition.r != r:
        return False
    seen = set()
    for face in partition.faces:
        idx = face.vertex_indices
        if not idx or len(idx) > config.d + 1 or list(idx) != sorted(set(idx)):
            return False
        colors = [config.color_of(i) for i in idx]
        if len(set(colors)) != len(colors) or set(colors) != set(face.colors_used):
            return False
        if seen.intersection(idx):
            return False
        seen.update(idx)
    mins = [f.min_vertex for f in partition.faces]
    return mins == sorted(mins)
