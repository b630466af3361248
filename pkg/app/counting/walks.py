"""Shape-indexed vacillating-tableau DP and quadrant lattice walks."""

from collections import defaultdict
from dataclasses import dataclass
import logging
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Tuple

from ..diagrams.tableaux import EMPTY, HalfStep, Shape, VacillatingTableau
from ..errors import ArgumentRangeError, OddLengthError

logger = logging.getLogger(__name__)

Kind = Tuple[int, int]


@dataclass(frozen=True)
class StepPairSet:
    """Admitted half-step pairs, by delta; rows range over ``1..k-1``."""

    name: str
    kinds: FrozenSet[Kind]

    def __post_init__(self):
        if not self.kinds:
            raise ValueError("A step-pair set must be nonempty")
        for kind in self.kinds:
            if len(kind) != 2 or any(d not in (-1, 0, 1) for d in kind):
                raise ValueError(f"Bad step pair {kind}")

    def pairs(self, k: int) -> FrozenSet[Tuple[HalfStep, HalfStep]]:
        """Expand to concrete half-step pairs for shapes with fewer than ``k`` rows."""
        def expand(delta: int) -> List[HalfStep]:
            if delta == 0:
                return [HalfStep(0, 0)]
            return [HalfStep(delta, h) for h in range(1, k)]

        return frozenset(
            (a, b) for first, second in self.kinds
            for a in expand(first) for b in expand(second)
        )


MATCHING_STEPS = StepPairSet("matching", frozenset({(-1, 0), (0, 1)}))
PARTITION_STEPS = StepPairSet(
    "partition", MATCHING_STEPS.kinds | {(0, 0), (-1, 1)}
)
BRAID_STEPS = StepPairSet("braid", MATCHING_STEPS.kinds | {(1, -1)})
TANGLED_STEPS = StepPairSet(
    "tangled",
    frozenset({(0, 0), (-1, 0), (0, 1), (1, 1), (1, -1), (-1, 1), (-1, -1)}),
)


def _half_step(shape: Shape, delta: int, k: int) -> Iterator[Tuple[HalfStep, Shape]]:
    if delta == 0:
        yield HalfStep(0, 0), shape
    elif delta > 0:
        for row in shape.addable_rows(max_rows=k - 1):
            yield HalfStep(1, row), shape.add(row)
    else:
        for row in shape.removable_rows():
            yield HalfStep(-1, row), shape.remove(row)


def _pair_moves(shape: Shape, steps: StepPairSet, k: int) -> Iterator[Tuple[HalfStep, Shape, HalfStep, Shape]]:
    for first, second in sorted(steps.kinds):
        for a, middle in _half_step(shape, first, k):
            for b, end in _half_step(middle, second, k):
                yield a, middle, b, end


def vacillating_counts(steps: StepPairSet, k: int, n_max: int) -> List[int]:
    """
    Counts of vacillating tableaux with fewer than ``k`` rows for every
    length ``0..n_max`` (``n`` step pairs each).
    """
    if k < 2:
        raise ArgumentRangeError(f"k must be at least 2, got {k}")
    if n_max < 0:
        raise ArgumentRangeError(f"n_max must be nonnegative, got {n_max}")
    layer: Dict[Shape, int] = {EMPTY: 1}
    counts = [1]
    for n in range(1, n_max + 1):
        nxt: Dict[Shape, int] = defaultdict(int)
        for shape, ways in layer.items():
            # shapes too large to empty in the remaining pairs are dropped
            for _, _, _, end in _pair_moves(shape, steps, k):
                if end.size <= 2 * (n_max - n):
                    nxt[end] += ways
        layer = nxt
        counts.append(layer.get(EMPTY, 0))
    logger.debug("vacillating_counts(%s, k=%d) -> %d states at n=%d",
                 steps.name, k, len(layer), n_max)
    return counts


def count_vacillating(steps: StepPairSet, k: int, n: int) -> int:
    """Number of vacillating tableaux of length ``2n`` with fewer than ``k`` rows."""
    return vacillating_counts(steps, k, n)[n]


def iter_vacillating(steps: StepPairSet, k: int, n: int) -> Iterator[VacillatingTableau]:
    """Yield every vacillating tableau counted by :func:`count_vacillating`."""

    def extend(shapes: List[Shape], remaining: int) -> Iterator[Tuple[Shape, ...]]:
        current = shapes[-1]
        if remaining == 0:
            if current == EMPTY:
                yield tuple(shapes)
            return
        for _, middle, _, end in _pair_moves(current, steps, k):
            if end.size <= 2 * (remaining - 1):
                yield from extend(shapes + [middle, end], remaining - 1)

    for shapes in extend([EMPTY], n):
        yield VacillatingTableau(shapes)


class LatticePoint(NamedTuple):
    x: int
    y: int


E1 = (1, 0)
E2 = (0, 1)
ZERO = (0, 0)


def _neg(v: Tuple[int, int]) -> Tuple[int, int]:
    return -v[0], -v[1]


BRAID_ALPHABET = (
    (ZERO, E1), (ZERO, E2),
    (_neg(E1), ZERO), (_neg(E2), ZERO),
    (E1, _neg(E1)), (E2, _neg(E2)),
    (E1, _neg(E2)), (E2, _neg(E1)),
)


def _walk(start: LatticePoint, halfsteps: int, inside) -> Dict[LatticePoint, int]:
    if halfsteps % 2:
        raise OddLengthError(f"Walk length must be even, got {halfsteps}")
    if halfsteps < 0:
        raise ArgumentRangeError(f"Walk length must be nonnegative, got {halfsteps}")
    layer: Dict[LatticePoint, int] = {LatticePoint(*start): 1}
    for _ in range(halfsteps // 2):
        nxt: Dict[LatticePoint, int] = defaultdict(int)
        for point, ways in layer.items():
            for first, second in BRAID_ALPHABET:
                middle = LatticePoint(point.x + first[0], point.y + first[1])
                if not inside(middle):
                    continue
                end = LatticePoint(middle.x + second[0], middle.y + second[1])
                if inside(end):
                    nxt[end] += ways
        layer = nxt
    return layer


def quadrant_walks(start: LatticePoint, end: LatticePoint, halfsteps: int) -> int:
    """
    Braid-alphabet walks from ``start`` to ``end`` staying in ``x, y >= 0``,
    checked after every half-step.

    Raises:
        OddLengthError: If ``halfsteps`` is odd.
    """
    layer = _walk(start, halfsteps, lambda p: p.x >= 0 and p.y >= 0)
    return layer.get(LatticePoint(*end), 0)


def region_walks(halfsteps: int) -> int:
    """Walks from (1,0) back to (1,0) that stay strictly inside ``x > y >= 0``."""
    layer = _walk(LatticePoint(1, 0), halfsteps, lambda p: p.x > p.y >= 0)
    return layer.get(LatticePoint(1, 0), 0)


def reflection_count(halfsteps: int) -> int:
    """
    Walks inside ``x > y >= 0`` as a difference of quadrant walks:
    reflecting the endpoint (1,0) in the wall ``x = y`` cancels every
    walk that touches it.
    """
    origin = LatticePoint(1, 0)
    return (
        quadrant_walks(origin, origin, halfsteps)
        - quadrant_walks(origin, LatticePoint(0, 1), halfsteps)
    )


def shape_to_point(shape: Shape) -> LatticePoint:
    """Map a shape with at most two rows to the lattice: ``(a, b) -> (a + 1, b)``."""
    if shape.num_rows > 2:
        raise ValueError(f"Shape {shape} has more than two rows")
    return LatticePoint(shape.row_length(1) + 1, shape.row_length(2))
