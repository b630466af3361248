"""Diagram <-> vacillating tableau, and the partition <-> braid shift.

Each vertex ``j`` owns the half-steps ``2j - 1`` and ``2j``.  A degree-2
vertex acts at both (label ``j`` then ``j'``); a degree-1 vertex acts at
``2j`` when it opens an arc and at ``2j - 1`` when it closes one.  Tableau
entries are half-step indices, which are ordered like the inflated labels.
"""

import logging
from typing import Dict, List, Tuple

from ..errors import (
    DiagramError,
    InconsistentTableauError,
    NotAPartitionError,
    NotBraidError,
    NotTwoRegularPartitionError,
    TableauError,
)
from .model import (
    Label,
    TangledDiagram,
    deflate,
    inflate,
    is_braid,
    is_two_regular,
    make_diagram,
    make_matching,
)
from .tableaux import (
    EMPTY,
    StandardTableau,
    VacillatingTableau,
    reverse_bump,
    remove_entry,
    rsk_insert,
)

logger = logging.getLogger(__name__)


def _slot_arcs(d: TangledDiagram) -> List[Tuple[int, int]]:
    m = inflate(d)
    openers = {a for a, _ in m.arcs}

    def slot(label: Label) -> int:
        vertex, primed = label
        if primed:
            return 2 * vertex
        if d.degree(vertex) == 2:
            return 2 * vertex - 1
        return 2 * vertex if label in openers else 2 * vertex - 1

    return [(slot(a), slot(b)) for a, b in m.arcs]


def diagram_to_tableau(d: TangledDiagram) -> VacillatingTableau:
    """
    Encode ``d`` as a vacillating tableau.

    Half-steps are scanned right to left starting from the empty tableau:
    the closing end of arc ``(j, i)`` row-inserts ``j``, the opening end
    removes ``j`` again (it is then the largest entry, hence a corner).
    The maximum row count of the result equals the crossing number of
    ``inflate(d)``.
    """
    closers: Dict[int, int] = {}
    openers = set()
    for j, i in _slot_arcs(d):
        closers[i] = j
        openers.add(j)

    tableau = StandardTableau()
    shapes = [EMPTY]
    for i in range(2 * d.n, 0, -1):
        if i in closers:
            tableau = rsk_insert(tableau, closers[i])
        elif i in openers:
            tableau = remove_entry(tableau, i)
        shapes.append(tableau.shape)
    shapes.reverse()
    return VacillatingTableau(tuple(shapes))


def tableau_to_diagram(vt: VacillatingTableau) -> TangledDiagram:
    """
    Decode a vacillating tableau into a tangled diagram.

    Half-steps are scanned left to right: an added cell receives the
    half-step index, a removed cell reverse-bumps, and the exit value is
    the opening end of the arc closing here.

    Raises:
        InconsistentTableauError: If the decoded matching is not a diagram.
    """
    tableau = StandardTableau()
    slot_arcs: List[Tuple[int, int]] = []
    active = set()
    for i, (delta, row) in enumerate(vt.half_steps, start=1):
        if delta > 0:
            tableau = tableau.add_cell(row, i)
            active.add(i)
        elif delta < 0:
            tableau, j = reverse_bump(tableau, (row, tableau.shape.row_length(row)))
            slot_arcs.append((j, i))
            active.add(i)

    labels: Dict[int, Label] = {}
    ground: List[Label] = []
    for v in range(1, vt.n + 1):
        odd, even = 2 * v - 1, 2 * v
        if odd in active and even in active:
            labels[odd], labels[even] = (v, False), (v, True)
            ground.extend([(v, False), (v, True)])
        elif odd in active or even in active:
            labels[odd if odd in active else even] = (v, False)
            ground.append((v, False))

    try:
        matching = make_matching(
            vt.n, ground, [(labels[j], labels[i]) for j, i in slot_arcs]
        )
        return deflate(matching)
    except (DiagramError, TableauError) as exc:
        raise InconsistentTableauError(f"Tableau {vt} does not decode: {exc}") from exc


def theta(p: TangledDiagram) -> TangledDiagram:
    """
    Map a 2-regular partition over ``[n]`` to a braid over ``[n - 1]``.

    Arc ``(i, j)`` becomes ``(i, j - 1)``.  Vertex ``v`` receives a loop
    when ``v`` has no out-arc and ``v + 1`` no in-arc in ``p``; every
    remaining in/out vertex is crossed.

    Raises:
        NotTwoRegularPartitionError: If ``p`` is not a 2-regular partition
            over at least two vertices.
    """
    try:
        regular = is_two_regular(p)
    except NotAPartitionError as exc:
        raise NotTwoRegularPartitionError(str(exc)) from exc
    if not regular:
        raise NotTwoRegularPartitionError(f"{p} has an arc (i,i+1)")
    if p.n < 2:
        raise NotTwoRegularPartitionError(f"theta needs at least two vertices, got {p.n}")

    arcs = [(i, j - 1) for i, j in p.arcs]
    has_out = {i for i, _ in p.arcs}
    has_in = {j for _, j in p.arcs}
    loops = [(v, v) for v in range(1, p.n) if v not in has_out and v + 1 not in has_in]
    starts = {i for i, _ in arcs}
    ends = {j for _, j in arcs}
    return make_diagram(p.n - 1, arcs + loops, starts & ends)


def theta_inv(b: TangledDiagram) -> TangledDiagram:
    """
    Inverse of :func:`theta`: loops vanish and ``(i, j)`` becomes ``(i, j + 1)``.

    Raises:
        NotBraidError: If ``b`` is not a braid without isolated points.
    """
    if not is_braid(b):
        raise NotBraidError(f"{b} is not a braid without isolated points")
    return make_diagram(b.n + 1, [(i, j + 1) for i, j in b.arcs if i != j])
