"""Exhaustive small-n generation used as ground truth.

Every enumerator yields each object exactly once and refuses inputs above
the guards in :mod:`app.config`.  Nothing here touches the tableau or
counting machinery, so the counts it produces are independent checks.
"""

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Iterator, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions

from ..config import (
    MAX_CROSSING_ARCS,
    MAX_MATCHING_POINTS,
    MAX_PARTITION_N,
    MAX_TANGLED_N,
)
from ..errors import ArgumentRangeError, OddGroundSetError, OutOfRangeError, TooLargeError
from .model import (
    DiagramClass,
    InflatedMatching,
    Label,
    LabelArc,
    TangledDiagram,
    deflate,
    inflate,
    is_braid,
    is_partition,
    is_two_regular,
    make_diagram,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassSpec:
    """A diagram class restricted by size, degree-2 count and crossing bound."""

    diagram_class: DiagramClass
    n: int
    ell: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentRangeError(f"Vertex count must be positive, got {self.n}")
        if self.ell is not None and not 0 <= self.ell <= self.n:
            raise ArgumentRangeError(f"ell must lie in 0..{self.n}, got {self.ell}")
        if self.k is not None and self.k < 2:
            raise ArgumentRangeError(f"k must be at least 2, got {self.k}")


def _check_n(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise OutOfRangeError(f"{what} needs n >= 1, got {n}")
    if n > limit:
        raise TooLargeError(f"{what} refuses n={n} (limit {limit})")


def _pairings(labels: Sequence[Label]) -> Iterator[Tuple[LabelArc, ...]]:
    if not labels:
        yield ()
        return
    first, rest = labels[0], labels[1:]
    for index, partner in enumerate(rest):
        remaining = rest[:index] + rest[index + 1:]
        for tail in _pairings(remaining):
            yield ((first, partner),) + tail


def enum_partitions(n: int) -> Iterator[TangledDiagram]:
    """
    Yield every set partition of ``[n]`` as a diagram.

    Consecutive elements of each block are joined by an arc, so block
    ``{1, 3, 4}`` becomes arcs ``(1,3), (3,4)``.

    Raises:
        TooLargeError: If ``n`` exceeds ``MAX_PARTITION_N``.
    """
    _check_n(n, MAX_PARTITION_N, "enum_partitions")
    logger.debug("Enumerating set partitions of [%d]", n)
    for blocks in multiset_partitions(list(range(1, n + 1))):
        arcs = []
        for block in blocks:
            block = sorted(block)
            arcs.extend(zip(block, block[1:]))
        yield make_diagram(n, arcs)


def enum_perfect_matchings(points: int) -> Iterator[InflatedMatching]:
    """
    Yield all ``(points - 1)!!`` perfect matchings on ``1 < 2 < ... < points``.

    Raises:
        OddGroundSetError: If ``points`` is odd.
        TooLargeError: If ``points`` exceeds ``MAX_MATCHING_POINTS``.
    """
    if points % 2:
        raise OddGroundSetError(f"Cannot perfectly match {points} points")
    _check_n(points, MAX_MATCHING_POINTS, "enum_perfect_matchings")
    ground = tuple((v, False) for v in range(1, points + 1))
    for arcs in _pairings(ground):
        yield InflatedMatching(n=points, ground=ground, arcs=arcs)


def enum_inflated(n: int, ell: Optional[int] = None) -> Iterator[InflatedMatching]:
    """
    Yield the inflations of every tangled diagram over ``[n]``.

    The degree-2 set is chosen first, then the isolated set among the
    remaining vertices; every perfect matching of the resulting inflated
    ground set is one diagram.

    Args:
        n: Vertex count, at most ``MAX_TANGLED_N``.
        ell: If given, only diagrams with exactly ``ell`` degree-2 vertices.
    """
    _check_n(n, MAX_TANGLED_N, "enum_tangled")
    vertices = range(1, n + 1)
    sizes = range(n + 1) if ell is None else (ell,)
    for size in sizes:
        for doubled in combinations(vertices, size):
            rest = [v for v in vertices if v not in doubled]
            for isolated_count in range(len(rest) + 1):
                for isolated in combinations(rest, isolated_count):
                    ground = []
                    for v in vertices:
                        if v in isolated:
                            continue
                        ground.append((v, False))
                        if v in doubled:
                            ground.append((v, True))
                    if len(ground) % 2:
                        continue
                    ground = tuple(ground)
                    for arcs in _pairings(ground):
                        yield InflatedMatching(n=n, ground=ground, arcs=arcs)


def enum_tangled(n: int, ell: Optional[int] = None) -> Iterator[TangledDiagram]:
    """Yield every tangled diagram over ``[n]`` (optionally with ``ell`` degree-2 vertices)."""
    for matching in enum_inflated(n, ell):
        yield deflate(matching)


def enum_braids(m: int) -> Iterator[TangledDiagram]:
    """
    Yield every braid without isolated points over ``[m]``.

    Each set partition of ``[m]`` gives one braid: isolated vertices become
    loops and every in/out vertex becomes crossed.
    """
    for partition in enum_partitions(m):
        loops = [(v, v) for v in partition.isolated_vertices()]
        crossed = partition.degree_two_vertices()
        yield make_diagram(m, list(partition.arcs) + loops, crossed)


def _mutually_crossing(arcs: Sequence[LabelArc]) -> bool:
    # arcs sorted by left endpoint
    if arcs[-1][0] >= arcs[0][1]:
        return False
    return all(a[1] < b[1] for a, b in zip(arcs, arcs[1:]))


def is_k_noncrossing(m: InflatedMatching, k: int) -> bool:
    """Whether ``m`` has no ``k`` mutually crossing arcs."""
    if k < 1:
        raise ArgumentRangeError(f"k must be positive, got {k}")
    arcs = sorted(m.arcs)
    return not any(_mutually_crossing(group) for group in combinations(arcs, k))


def crossing_number(m: InflatedMatching) -> int:
    """
    Largest number of mutually crossing arcs, by brute-force subset search.

    Raises:
        TooLargeError: If ``m`` has more than ``MAX_CROSSING_ARCS`` arcs.
    """
    arcs = sorted(m.arcs)
    if len(arcs) > MAX_CROSSING_ARCS:
        raise TooLargeError(
            f"crossing_number refuses {len(arcs)} arcs (limit {MAX_CROSSING_ARCS})"
        )
    for k in range(len(arcs), 1, -1):
        if any(_mutually_crossing(group) for group in combinations(arcs, k)):
            return k
    return 1 if arcs else 0


def oracle_count(class_spec: ClassSpec) -> int:
    """
    Count the diagrams of ``class_spec`` by filtering an exhaustive enumeration.

    The class is tested with its own predicate (not :func:`classify`), so a
    two-regular partition also counts as a partition.  The ``k`` bound is
    applied to the inflation.
    """
    k = class_spec.k

    def bounded(m: InflatedMatching) -> bool:
        return k is None or is_k_noncrossing(m, k)

    def has_ell(d: TangledDiagram) -> bool:
        return class_spec.ell is None or len(d.degree_two_vertices()) == class_spec.ell

    cls = class_spec.diagram_class
    if cls is DiagramClass.GENERAL:
        total = sum(1 for m in enum_inflated(class_spec.n, class_spec.ell) if bounded(m))
    elif cls is DiagramClass.MATCHING_WITH_ISOLATED:
        if class_spec.ell not in (None, 0):
            return 0
        total = sum(1 for m in enum_inflated(class_spec.n, 0) if bounded(m))
    elif cls is DiagramClass.BRAID_NO_ISOLATED:
        total = sum(
            1 for d in enum_braids(class_spec.n)
            if is_braid(d) and has_ell(d) and bounded(inflate(d))
        )
    else:
        total = 0
        for d in enum_partitions(class_spec.n):
            if not (is_partition(d) and has_ell(d)):
                continue
            if cls is DiagramClass.TWO_REGULAR_PARTITION and not is_two_regular(d):
                continue
            if bounded(inflate(d)):
                total += 1
    logger.debug("oracle_count(%s) = %d", class_spec, total)
    return total


__all__ = [
    "ClassSpec",
    "crossing_number",
    "enum_braids",
    "enum_inflated",
    "enum_partitions",
    "enum_perfect_matchings",
    "enum_tangled",
    "is_k_noncrossing",
    "oracle_count",
]
