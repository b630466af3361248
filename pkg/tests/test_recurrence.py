"""Tests for P-recursive sequence evaluation and parsing."""

import pytest

from app.config import REFERENCE_P32
from app.counting.formulas import p32_closed
from app.counting.recurrence import (
    PolyRecurrence,
    evaluate,
    p32_recurrence,
    parse_recurrence,
    recurrence_holds,
)
from app.errors import (
    InconsistentSeedsError,
    InexactDivisionError,
    LeadingZeroError,
    RecurrenceError,
    RecurrenceSyntaxError,
)


class TestPolyRecurrence:
    """Test construction and coefficient evaluation."""

    def test_p32_coefficients_at_zero(self):
        rec = p32_recurrence()
        assert rec.order == 3
        assert [rec.coefficient_at(h, 0) for h in range(4)] == [48, 624, 924, -504]

    def test_identity_at_zero(self):
        """The seeds satisfy the first instance of the recurrence."""
        rec = p32_recurrence()
        assert sum(rec.coefficient_at(h, 0) * REFERENCE_P32[h] for h in range(4)) == 0

    def test_start_defaults_to_offset(self):
        rec = PolyRecurrence(coeffs=("2", "-1"), seeds=(1,), offset=2)
        assert rec.start == 2

    def test_zero_leading_coefficient(self):
        with pytest.raises(LeadingZeroError):
            PolyRecurrence(coeffs=("1", "0"), seeds=(1,))

    def test_too_few_seeds(self):
        with pytest.raises(RecurrenceError):
            PolyRecurrence(coeffs=("1", "1", "1"), seeds=(1,))

    def test_start_after_offset(self):
        with pytest.raises(RecurrenceError):
            PolyRecurrence(coeffs=("2", "-1"), seeds=(1,), offset=0, start=1)

    def test_str(self):
        rec = PolyRecurrence(coeffs=("2", "-1"), seeds=(1,))
        assert str(rec) == "rec [2, -1] seeds 1 offset 0"


class TestEvaluate:
    """Test exact forward evaluation."""

    def test_p32_sequence(self):
        assert evaluate(p32_recurrence(), 12) == list(REFERENCE_P32)

    def test_long_evaluation_stays_exact(self):
        terms = evaluate(p32_recurrence(), 300)
        assert len(terms) == 300
        assert recurrence_holds(p32_recurrence(), terms)

    def test_matches_closed_form(self):
        terms = evaluate(p32_recurrence(), 60)
        assert terms == [p32_closed(n) for n in range(60)]

    def test_increasing(self):
        terms = evaluate(p32_recurrence(), 200)
        assert terms[0] == terms[1] == 1
        assert all(a < b for a, b in zip(terms[1:], terms[2:])), "p32 must increase from n=2 on"

    @pytest.mark.slow
    def test_five_thousand_terms(self):
        terms = evaluate(p32_recurrence(), 5000)
        assert len(terms) == 5000
        assert all(isinstance(t, int) for t in terms)
        assert recurrence_holds(p32_recurrence(), terms)
        for n in (1999, 4999):
            assert terms[n] == p32_closed(n), f"recurrence and beta-sum differ at n={n}"

    def test_doubling(self):
        rec = PolyRecurrence(coeffs=("2", "-1"), seeds=(1,))
        assert evaluate(rec, 5) == [1, 2, 4, 8, 16]

    def test_singular_seed(self):
        """n*y(n+1) = (n+1)*y(n) is singular at n=0; the second seed fills it."""
        rec = PolyRecurrence(coeffs=("-(n+1)", "n"), seeds=(0, 1))
        assert evaluate(rec, 6) == [0, 1, 2, 3, 4, 5]

    def test_singular_seed_must_satisfy_relation(self):
        rec = PolyRecurrence(coeffs=("-(n+1)", "n"), seeds=(1, 1))
        with pytest.raises(InconsistentSeedsError):
            evaluate(rec, 3)

    def test_inexact_division(self):
        rec = PolyRecurrence(coeffs=("1", "-2"), seeds=(1,))
        with pytest.raises(InexactDivisionError):
            evaluate(rec, 2)

    def test_inconsistent_extra_seed(self):
        rec = PolyRecurrence(coeffs=("2", "-1"), seeds=(1, 3))
        with pytest.raises(InconsistentSeedsError):
            evaluate(rec, 3)

    def test_leading_zero_at_needed_index(self):
        rec = PolyRecurrence(coeffs=("n", "n-1"), seeds=(1,))
        with pytest.raises(LeadingZeroError):
            evaluate(rec, 3)

    def test_zero_count(self):
        assert evaluate(p32_recurrence(), 0) == []
        with pytest.raises(ValueError):
            evaluate(p32_recurrence(), -1)


class TestParseRecurrence:
    """Test the text form of recurrences."""

    def test_parse_p32(self):
        rec = parse_recurrence(
            "8*(n+2)*(n+3)*(n+1), 3*(n+2)*(5*n^2+47*n+104),"
            " 3*(n+4)*(2*n+11)*(n+7), -(n+9)*(n+8)*(n+7)",
            "1,1,2,5",
            offset=1,
        )
        assert rec == p32_recurrence()

    def test_seed_sequence(self):
        rec = parse_recurrence("2, -1", [3])
        assert evaluate(rec, 3) == [3, 6, 12]

    def test_bad_coefficient(self):
        with pytest.raises(RecurrenceSyntaxError):
            parse_recurrence("n+*, 1", "1")

    def test_bad_seeds(self):
        with pytest.raises(RecurrenceSyntaxError):
            parse_recurrence("2, -1", "1,x")

    def test_single_coefficient(self):
        with pytest.raises(RecurrenceSyntaxError):
            parse_recurrence("n", "1")

    def test_recurrence_holds_detects_errors(self):
        terms = list(REFERENCE_P32)
        terms[6] += 1
        assert not recurrence_holds(p32_recurrence(), terms)
