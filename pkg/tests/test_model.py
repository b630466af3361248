"""Tests for tangled diagram validation, classification and inflation."""

import pytest

from app.diagrams.model import (
    DiagramClass,
    classify,
    deflate,
    format_diagram,
    inflate,
    is_braid,
    is_matching,
    is_partition,
    is_two_regular,
    make_diagram,
    make_matching,
    parse_diagram,
)
from app.diagrams.oracle import enum_inflated, enum_tangled
from app.errors import (
    BadFlagError,
    DegreeExceededError,
    DiagramSyntaxError,
    DuplicateArcError,
    InvalidMatchingError,
    NotAPartitionError,
    NotDeflatableError,
    OutOfRangeError,
)

U = False
P = True


class TestMakeDiagram:
    """Test validation and normalization in make_diagram."""

    def test_arcs_are_normalized_and_sorted(self):
        """Reversed arcs become (i, j) with i <= j, sorted."""
        d = make_diagram(5, [(5, 3), (3, 1)], [3])
        assert d.arcs == ((1, 3), (3, 5))
        assert d.crossed == frozenset({3})

    def test_degrees(self):
        """Loops count twice toward the degree."""
        d = make_diagram(3, [(1, 1), (2, 3)])
        assert d.degree(1) == 2
        assert d.degree(2) == 1
        assert d.isolated_vertices() == ()
        assert d.degree_two_vertices() == (1,)

    def test_degree_exceeded(self):
        """A vertex with three arcs is rejected."""
        with pytest.raises(DegreeExceededError):
            make_diagram(4, [(1, 2), (1, 3), (1, 4)])

    def test_flag_on_degree_one_vertex(self):
        """Flags need a degree-2 vertex."""
        with pytest.raises(BadFlagError):
            make_diagram(3, [(1, 2)], [2])

    def test_flag_on_loop(self):
        """Loops carry no flag."""
        with pytest.raises(BadFlagError):
            make_diagram(1, [(1, 1)], [1])

    def test_parallel_pair_needs_matching_flags(self):
        """Both ends of a parallel pair carry the same flag."""
        with pytest.raises(BadFlagError):
            make_diagram(3, [(1, 3), (1, 3)], [1])
        assert make_diagram(3, [(1, 3), (1, 3)], [1, 3]).arcs == ((1, 3), (1, 3))

    def test_out_of_range(self):
        """Endpoints must lie in 1..n and n must be positive."""
        with pytest.raises(OutOfRangeError):
            make_diagram(3, [(1, 4)])
        with pytest.raises(OutOfRangeError):
            make_diagram(0)

    def test_duplicate_arcs(self):
        """A loop may not repeat and an arc may not appear three times."""
        with pytest.raises(DuplicateArcError):
            make_diagram(3, [(2, 2), (2, 2)])
        with pytest.raises(DuplicateArcError):
            make_diagram(3, [(1, 2), (1, 2), (1, 2)])

    def test_non_integer_vertex_count(self):
        """n must be an int."""
        with pytest.raises(TypeError):
            make_diagram("3")


class TestClassify:
    """Test subclass predicates and the classification precedence."""

    def test_empty_diagram_is_two_regular(self):
        assert classify(make_diagram(3)) is DiagramClass.TWO_REGULAR_PARTITION

    def test_crossing_matching_is_two_regular(self):
        """All degrees are one and no arc joins neighbours."""
        d = make_diagram(4, [(1, 3), (2, 4)])
        assert is_matching(d)
        assert classify(d) is DiagramClass.TWO_REGULAR_PARTITION

    def test_matching_with_short_arc(self):
        d = make_diagram(3, [(1, 2)])
        assert classify(d) is DiagramClass.MATCHING_WITH_ISOLATED

    def test_partition(self):
        d = make_diagram(3, [(1, 2), (2, 3)])
        assert is_partition(d)
        assert not is_two_regular(d)
        assert classify(d) is DiagramClass.PARTITION

    def test_braid(self):
        d = make_diagram(2, [(1, 1), (2, 2)])
        assert not is_partition(d)
        assert is_braid(d)
        assert classify(d) is DiagramClass.BRAID_NO_ISOLATED

    def test_crossed_in_out_vertex_is_a_braid(self):
        d = make_diagram(3, [(1, 2), (2, 3)], [2])
        assert is_braid(d)
        assert classify(d) is DiagramClass.BRAID_NO_ISOLATED

    def test_general(self):
        """Two out-arcs at a vertex and an isolated point."""
        d = make_diagram(3, [(1, 3), (1, 3)])
        assert classify(d) is DiagramClass.GENERAL

    def test_two_regular_needs_a_partition(self):
        with pytest.raises(NotAPartitionError):
            is_two_regular(make_diagram(1, [(1, 1)]))


class TestInflate:
    """Test inflation into a partial matching and its inverse."""

    def test_loop_inflates_to_adjacent_pair(self):
        m = inflate(make_diagram(1, [(1, 1)]))
        assert m.ground == ((1, U), (1, P))
        assert m.arcs == (((1, U), (1, P)),)
        assert m.is_perfect

    def test_crossed_in_out_vertex(self):
        """The in-arc takes j' and the out-arc takes j."""
        m = inflate(make_diagram(3, [(1, 2), (2, 3)], [2]))
        assert m.arcs == (((1, U), (2, P)), ((2, U), (3, U)))

    def test_uncrossed_in_out_vertex(self):
        m = inflate(make_diagram(3, [(1, 2), (2, 3)]))
        assert m.arcs == (((1, U), (2, U)), ((2, P), (3, U)))

    def test_crossed_two_out_arcs(self):
        """The arc with the nearer partner keeps the unprimed label."""
        m = inflate(make_diagram(3, [(1, 2), (1, 3)], [1]))
        assert m.arcs == (((1, U), (2, U)), ((1, P), (3, U)))

    def test_uncrossed_two_out_arcs(self):
        m = inflate(make_diagram(3, [(1, 2), (1, 3)]))
        assert m.arcs == (((1, U), (3, U)), ((1, P), (2, U)))

    def test_parallel_pair_crossed(self):
        m = inflate(make_diagram(2, [(1, 2), (1, 2)], [1, 2]))
        assert m.arcs == (((1, U), (2, U)), ((1, P), (2, P)))

    def test_parallel_pair_nested(self):
        m = inflate(make_diagram(2, [(1, 2), (1, 2)]))
        assert m.arcs == (((1, U), (2, P)), ((1, P), (2, U)))

    @pytest.mark.parametrize("n, arcs, crossed", [
        (1, [(1, 1)], []),
        (3, [(1, 2), (2, 3)], [2]),
        (3, [(1, 2), (2, 3)], []),
        (3, [(1, 2), (1, 3)], [1]),
        (3, [(1, 2), (1, 3)], []),
        (3, [(1, 3), (2, 3)], [3]),
        (2, [(1, 2), (1, 2)], [1, 2]),
        (2, [(1, 2), (1, 2)], []),
        (4, [(1, 3), (2, 4)], []),
    ])
    def test_deflate_inverts_inflate(self, n, arcs, crossed):
        d = make_diagram(n, arcs, crossed)
        assert deflate(inflate(d)) == d

    def test_deflate_needs_both_labels_matched(self):
        m = make_matching(2, [(1, U), (1, P), (2, U)], [((1, U), (2, U))])
        with pytest.raises(NotDeflatableError):
            deflate(m)


class TestMakeMatching:
    """Test inflated matching validation."""

    def test_primed_label_needs_base(self):
        with pytest.raises(InvalidMatchingError):
            make_matching(2, [(1, P), (2, U)], [])

    def test_label_used_twice(self):
        with pytest.raises(InvalidMatchingError):
            make_matching(3, [(1, U), (2, U), (3, U)], [((1, U), (2, U)), ((2, U), (3, U))])

    def test_arcs_are_normalized(self):
        m = make_matching(2, [(1, U), (2, U)], [((2, U), (1, U))])
        assert m.arcs == (((1, U), (2, U)),)
        assert m.partner[(2, U)] == (1, U)
        assert str(m) == "(1,2)"


class TestDiagramLiteral:
    """Test the text form of diagrams."""

    def test_format(self):
        d = make_diagram(5, [(1, 3), (3, 5)], [3])
        assert format_diagram(d) == "n=5; arcs=(1,3)(3,5); crossed=3"
        assert str(make_diagram(2)) == "n=2; arcs=; crossed="

    def test_parse(self):
        d = parse_diagram("n=4; arcs=(1,3)(2,4)")
        assert d == make_diagram(4, [(1, 3), (2, 4)])

    def test_parse_ignores_whitespace(self):
        d = parse_diagram(" n = 5 ; arcs = (1, 3) (3, 5) ; crossed = 3 ")
        assert d == make_diagram(5, [(1, 3), (3, 5)], [3])

    @pytest.mark.parametrize("text", [
        "n=x",
        "arcs=(1,3)",
        "n=3; foo=1",
        "n=3; arcs=(1,3",
        "n=3; crossed=a",
        "n=3; n=4",
    ])
    def test_parse_rejects_bad_literals(self, text):
        with pytest.raises(DiagramSyntaxError):
            parse_diagram(text)

    def test_parse_validates(self):
        """Well-formed literals still go through make_diagram."""
        with pytest.raises(OutOfRangeError):
            parse_diagram("n=3; arcs=(1,4)")
class TestInflateExhaustive:
    """Inflation is a bijection onto the enumerated inflated matchings."""

    @staticmethod
    def _key(m):
        return m.n, frozenset(m.arcs)

    def _check(self, n):
        diagrams = list(enum_tangled(n))
        inflated = [inflate(d) for d in diagrams]
        for d, m in zip(diagrams, inflated):
            assert deflate(m) == d, f"deflate(inflate({d})) = {deflate(m)}"
        keys = {self._key(m) for m in inflated}
        assert len(keys) == len(diagrams), f"inflate is not injective on n={n}"
        assert keys == {self._key(m) for m in enum_inflated(n)}

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_round_trip_and_injective(self, n):
        self._check(n)

    @pytest.mark.slow
    def test_round_trip_and_injective_size_six(self):
        self._check(6)


class TestClassifyIsolatedVertex:
    """Appending an isolated vertex n+1 keeps the class, except braids become general."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_every_diagram(self, n):
        for d in enum_tangled(n):
            before = classify(d)
            after = classify(make_diagram(n + 1, d.arcs, d.crossed))
            if before is DiagramClass.BRAID_NO_ISOLATED:
                assert after is DiagramClass.GENERAL, f"{d} gained a vertex and stayed {after}"
            else:
                assert after is before, f"{d}: {before} became {after}"
