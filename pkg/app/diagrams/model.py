"""Tangled diagrams, their subclasses, and the inflation map.

A tangled diagram over ``[n]`` has arcs ``(i, j)`` with ``i <= j`` (``i == j``
is a loop) and every vertex of degree at most two.  The flag set
``crossed`` marks degree-2 vertices whose two arcs cross locally.

Inflation replaces every degree-2 vertex ``j`` by the ordered pair
``j < j'`` so the diagram becomes a partial matching on the labels
``1 < 1' < 2 < 2' < ...``.  Labels are ``(vertex, primed)`` tuples, which
compare in exactly that order.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
import logging
import re
from typing import Dict, FrozenSet, Iterable, List, Tuple

from ..errors import (
    BadFlagError,
    DegreeExceededError,
    DiagramError,
    DiagramSyntaxError,
    DuplicateArcError,
    InvalidMatchingError,
    NotAPartitionError,
    NotDeflatableError,
    OutOfRangeError,
)

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]
Label = Tuple[int, bool]
LabelArc = Tuple[Label, Label]


class DiagramClass(str, Enum):
    MATCHING_WITH_ISOLATED = "matching"
    PARTITION = "partition"
    TWO_REGULAR_PARTITION = "two-regular"
    BRAID_NO_ISOLATED = "braid"
    GENERAL = "general"


@dataclass(frozen=True)
class TangledDiagram:
    """Validated tangled diagram. Build instances with :func:`make_diagram`.

    ``arcs`` is sorted and may list a non-loop arc twice (a parallel pair);
    both ends of a parallel pair carry the same flag.
    """

    n: int
    arcs: Tuple[Arc, ...]
    crossed: FrozenSet[int] = frozenset()

    @cached_property
    def degrees(self) -> Dict[int, int]:
        counts = {v: 0 for v in range(1, self.n + 1)}
        for i, j in self.arcs:
            counts[i] += 1
            counts[j] += 1
        return counts

    @cached_property
    def incidence(self) -> Dict[int, Tuple[int, ...]]:
        """Vertex -> indices into ``arcs`` of the arcs touching it."""
        touching: Dict[int, List[int]] = defaultdict(list)
        for index, (i, j) in enumerate(self.arcs):
            touching[i].append(index)
            if j != i:
                touching[j].append(index)
        return {v: tuple(touching[v]) for v in range(1, self.n + 1)}

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def isolated_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, d in self.degrees.items() if d == 0)

    def degree_two_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, d in self.degrees.items() if d == 2)

    def has_loop(self, v: int) -> bool:
        return (v, v) in self.arcs

    def in_arcs(self, v: int) -> Tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a[1] == v and a[0] < v)

    def out_arcs(self, v: int) -> Tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a[0] == v and a[1] > v)

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True)
class InflatedMatching:
    """Partial matching on the inflated ground set.

    Build instances with :func:`make_matching` (validating) or
    :func:`inflate`.
    """

    n: int
    ground: Tuple[Label, ...]
    arcs: Tuple[LabelArc, ...]

    @cached_property
    def partner(self) -> Dict[Label, Label]:
        pairs: Dict[Label, Label] = {}
        for a, b in self.arcs:
            pairs[a] = b
            pairs[b] = a
        return pairs

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.arcs) == len(self.ground)

    def __str__(self) -> str:
        body = "".join(
            f"({format_label(a)},{format_label(b)})" for a, b in self.arcs
        )
        return body or "{}"


def format_label(label: Label) -> str:
    vertex, primed = label
    return f"{vertex}'" if primed else str(vertex)


def make_diagram(
    n: int,
    arcs: Iterable[Arc] = (),
    crossed: Iterable[int] = (),
) -> TangledDiagram:
    """
    Validate and normalize a tangled diagram.

    Args:
        n: Number of vertices (at least 1).
        arcs: Pairs of vertices; ``(j, i)`` is normalized to ``(i, j)``.
            A non-loop arc may appear twice (parallel pair).
        crossed: Degree-2 vertices whose two arcs cross locally.

    Returns:
        The validated diagram.

    Raises:
        TypeError: If ``n`` is not an integer.
        OutOfRangeError: If ``n < 1`` or an arc endpoint lies outside ``[n]``.
        DuplicateArcError: If a loop repeats or an arc appears three times.
        DegreeExceededError: If some vertex has degree above two.
        BadFlagError: If a flag sits on a vertex without two non-loop arcs,
            or the two ends of a parallel pair disagree.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"Vertex count must be an integer, got {type(n)}")
    if n < 1:
        raise OutOfRangeError(f"Vertex count must be positive, got {n}")

    normalized: List[Arc] = []
    for arc in arcs:
        i, j = arc
        if not (1 <= i <= n and 1 <= j <= n):
            raise OutOfRangeError(f"Arc {arc} leaves the vertex range 1..{n}")
        normalized.append((min(i, j), max(i, j)))

    multiplicity = Counter(normalized)
    for (i, j), count in multiplicity.items():
        if (i == j and count > 1) or count > 2:
            raise DuplicateArcError(f"Arc ({i},{j}) repeated {count} times")

    degrees: Counter = Counter()
    for i, j in normalized:
        degrees[i] += 1
        degrees[j] += 1
    for v, d in degrees.items():
        if d > 2:
            raise DegreeExceededError(f"Vertex {v} has degree {d}")

    flags = frozenset(crossed)
    for v in flags:
        if not 1 <= v <= n:
            raise BadFlagError(f"Flag on vertex {v} outside 1..{n}")
        if degrees[v] != 2 or (v, v) in multiplicity:
            raise BadFlagError(
                f"Vertex {v} does not carry two non-loop arcs"
            )
    for (i, j), count in multiplicity.items():
        if count == 2 and (i in flags) != (j in flags):
            raise BadFlagError(
                f"Parallel arcs ({i},{j}) must be flagged at both ends or neither"
            )

    return TangledDiagram(n=n, arcs=tuple(sorted(normalized)), crossed=flags)


def make_matching(
    n: int,
    ground: Iterable[Label],
    arcs: Iterable[LabelArc],
) -> InflatedMatching:
    """
    Validate an inflated matching.

    Raises:
        InvalidMatchingError: On unordered or repeated ground labels,
            primed labels without their base, labels outside ``[n]``,
            arc endpoints outside the ground set, or a label used twice.
    """
    ground = tuple(ground)
    if list(ground) != sorted(set(ground)):
        raise InvalidMatchingError("Ground labels must be strictly increasing")
    members = set(ground)
    for vertex, primed in ground:
        if not 1 <= vertex <= n:
            raise InvalidMatchingError(f"Label {vertex} outside 1..{n}")
        if primed and (vertex, False) not in members:
            raise InvalidMatchingError(f"Label {vertex}' present without {vertex}")

    used = set()
    normalized: List[LabelArc] = []
    for a, b in arcs:
        if a == b:
            raise InvalidMatchingError(f"Arc endpoints coincide at {format_label(a)}")
        for label in (a, b):
            if label not in members:
                raise InvalidMatchingError(
                    f"Arc endpoint {format_label(label)} not in the ground set"
                )
            if label in used:
                raise InvalidMatchingError(
                    f"Label {format_label(label)} used by two arcs"
                )
            used.add(label)
        normalized.append((min(a, b), max(a, b)))
    return InflatedMatching(n=n, ground=ground, arcs=tuple(sorted(normalized)))


def is_matching(d: TangledDiagram) -> bool:
    return all(deg <= 1 for deg in d.degrees.values())


def is_partition(d: TangledDiagram) -> bool:
    """No loops, and each degree-2 vertex has one in-arc, one out-arc, no flag."""
    for v in d.degree_two_vertices():
        if v in d.crossed or d.has_loop(v):
            return False
        if len(d.in_arcs(v)) != 1 or len(d.out_arcs(v)) != 1:
            return False
    return True


def is_two_regular(d: TangledDiagram) -> bool:
    """
    Whether a partition has no arc of the form ``(i, i+1)``.

    Raises:
        NotAPartitionError: If ``d`` is not a partition.
    """
    if not is_partition(d):
        raise NotAPartitionError(f"Diagram {d} is not a partition")
    return all(j != i + 1 for i, j in d.arcs)


def is_braid(d: TangledDiagram) -> bool:
    """No isolated vertices; degree-2 vertices are loops or crossed in/out pairs."""
    if d.isolated_vertices():
        return False
    for v in d.degree_two_vertices():
        if d.has_loop(v):
            continue
        if v in d.crossed and len(d.in_arcs(v)) == 1 and len(d.out_arcs(v)) == 1:
            continue
        return False
    return True


def classify(d: TangledDiagram) -> DiagramClass:
    """Return the first matching class in the precedence order.

    TwoRegularPartition, MatchingWithIsolated, Partition, BraidNoIsolated,
    General.
    """
    if is_partition(d) and is_two_regular(d):
        return DiagramClass.TWO_REGULAR_PARTITION
    if is_matching(d):
        return DiagramClass.MATCHING_WITH_ISOLATED
    if is_partition(d):
        return DiagramClass.PARTITION
    if is_braid(d):
        return DiagramClass.BRAID_NO_ISOLATED
    return DiagramClass.GENERAL


def _resolve_vertex(d: TangledDiagram, v: int) -> Dict[int, Label]:
    """Assign ``v`` or ``v'`` to each non-loop arc end at a degree-2 vertex."""
    first, second = d.incidence[v]
    unprimed, primed = (v, False), (v, True)
    flagged = v in d.crossed

    def other(index: int) -> int:
        i, j = d.arcs[index]
        return j if i == v else i

    if other(first) == other(second):
        # parallel pair: the left end labels in arc order, the right end
        # follows the flag (crossed pairs keep the order, nested pairs swap)
        if other(first) > v or flagged:
            return {first: unprimed, second: primed}
        return {first: primed, second: unprimed}

    ins = [k for k in (first, second) if other(k) < v]
    if len(ins) == 1:
        k_in = ins[0]
        k_out = second if k_in == first else first
        if flagged:
            return {k_in: primed, k_out: unprimed}
        return {k_in: unprimed, k_out: primed}

    # two in-arcs or two out-arcs: crossed iff the nearer-left partner gets v
    low, high = sorted((first, second), key=other)
    if flagged:
        return {low: unprimed, high: primed}
    return {low: primed, high: unprimed}


def inflate(d: TangledDiagram) -> InflatedMatching:
    """
    Resolve every degree-2 vertex ``j`` into the pair ``j < j'``.

    Loops become ``(j, j')``.  The flag at ``j`` decides which arc end
    moves to ``j'`` so that a flagged vertex yields the locally crossing
    pattern.

    Args:
        d: A validated diagram.

    Returns:
        The inflated partial matching (arc count preserved).
    """
    ground: List[Label] = []
    ends: Dict[Tuple[int, int], Label] = {}
    for v in range(1, d.n + 1):
        ground.append((v, False))
        degree = d.degree(v)
        if degree == 2:
            ground.append((v, True))
            if not d.has_loop(v):
                for index, label in _resolve_vertex(d, v).items():
                    ends[(index, v)] = label
        elif degree == 1:
            ends[(d.incidence[v][0], v)] = (v, False)

    arcs: List[LabelArc] = []
    for index, (i, j) in enumerate(d.arcs):
        if i == j:
            arcs.append(((i, False), (i, True)))
        else:
            arcs.append((ends[(index, i)], ends[(index, j)]))
    return InflatedMatching(n=d.n, ground=tuple(ground), arcs=tuple(sorted(arcs)))


def deflate(m: InflatedMatching) -> TangledDiagram:
    """
    Invert :func:`inflate`.

    Flags are recovered from the partners ``p`` of ``j`` and ``q`` of
    ``j'``: with both partners on the same side the vertex is crossed iff
    ``p < q``, with partners on opposite sides iff ``p > q``.

    Raises:
        NotDeflatableError: If a primed label lacks its base, the two labels
            of a degree-2 vertex are not both matched, or the result is not
            a valid diagram.
    """
    members = set(m.ground)
    partner = m.partner
    crossed = set()
    for vertex, primed in m.ground:
        if not primed:
            continue
        base, twin = (vertex, False), (vertex, True)
        if base not in members:
            raise NotDeflatableError(f"Label {vertex}' present without {vertex}")
        if base not in partner or twin not in partner:
            raise NotDeflatableError(
                f"Both labels of degree-2 vertex {vertex} must be matched"
            )
        p, q = partner[base], partner[twin]
        if p == twin:
            continue
        opposite = (p < base) != (q < base)
        if (p < q) != opposite:
            crossed.add(vertex)

    arcs = [(a[0], b[0]) for a, b in m.arcs]
    try:
        return make_diagram(m.n, arcs, crossed)
    except DiagramError as exc:
        raise NotDeflatableError(f"Matching {m} does not deflate: {exc}") from exc


_ARC_PATTERN = re.compile(r"\((\d+),(\d+)\)")


def parse_diagram(text: str) -> TangledDiagram:
    """
    Parse the literal ``n=5; arcs=(1,3)(3,5); crossed=3``.

    Whitespace is ignored; ``arcs`` and ``crossed`` may be omitted or empty.

    Raises:
        DiagramSyntaxError: If the literal is malformed.
    """
    fields: Dict[str, str] = {}
    compact = re.sub(r"\s+", "", text)
    for part in filter(None, compact.split(";")):
        key, sep, value = part.partition("=")
        if not sep or key not in ("n", "arcs", "crossed") or key in fields:
            raise DiagramSyntaxError(f"Bad field '{part}' in diagram literal")
        fields[key] = value

    if "n" not in fields or not fields["n"].isdigit():
        raise DiagramSyntaxError(f"Diagram literal needs n=<int>: '{text}'")

    arc_text = fields.get("arcs", "")
    if not re.fullmatch(r"(\(\d+,\d+\))*", arc_text):
        raise DiagramSyntaxError(f"Bad arc list '{arc_text}'")
    arcs = [(int(i), int(j)) for i, j in _ARC_PATTERN.findall(arc_text)]

    flag_text = fields.get("crossed", "")
    if flag_text and not re.fullmatch(r"\d+(,\d+)*", flag_text):
        raise DiagramSyntaxError(f"Bad crossed list '{flag_text}'")
    crossed = [int(v) for v in flag_text.split(",")] if flag_text else []

    return make_diagram(int(fields["n"]), arcs, crossed)


def format_diagram(d: TangledDiagram) -> str:
    arcs = "".join(f"({i},{j})" for i, j in d.arcs)
    crossed = ",".join(str(v) for v in sorted(d.crossed))
    return f"n={d.n}; arcs={arcs}; crossed={crossed}"
