"""Tests for the formal series solution of polynomial recurrences."""

import pytest
from sympy import Rational

from app.config import REFERENCE_K, REFERENCE_SUBEXP
from app.counting.asymptotics import (
    AsymptoticExpansion,
    CharPoly,
    TruncatedSeries,
    analyze,
    char_poly,
    dominant_root,
    expansion_report,
    fit_K,
    relative_error,
    residual_coefficients,
    solve_corrections,
    solve_growth,
    subexp_table,
)
from app.counting.recurrence import PolyRecurrence, evaluate, p32_recurrence
from app.errors import (
    AsymptoticsError,
    InsufficientTermsError,
    NoDominantRationalRootError,
    NonSimpleRootError,
    UnequalDegreesError,
)

P32_CORRECTIONS = [Rational(-28), Rational(4102, 9), Rational(-457744, 81)]


@pytest.fixture(scope="module")
def p32_terms():
    """p(1), ..., p(2001)."""
    return evaluate(p32_recurrence(), 2001)


@pytest.fixture(scope="module")
def p32_expansion(p32_terms):
    return analyze(p32_recurrence(), corrections=3, seq=p32_terms, fit_n=2000)


class TestTruncatedSeries:
    """Test the exact series engine."""

    def test_binomial(self):
        s = TruncatedSeries.binomial(1, 2, 3)
        assert s.coefficients == (1, 2, 1, 0)
        s = TruncatedSeries.binomial(2, -1, 3)
        assert s.coefficients == (1, -2, 4, -8)

    def test_from_poly(self):
        """(n + 1)**2 / n**2 = 1 + 2/n + 1/n**2."""
        rec = PolyRecurrence(coeffs=("(n+1)**2", "-1"), seeds=(1,))
        s = TruncatedSeries.from_poly(rec.coeffs[0], 2, 3)
        assert s.coefficients == (1, 2, 1, 0)

    def test_product_truncates(self):
        a = TruncatedSeries((1, 1))
        b = TruncatedSeries((1, 1, 1))
        assert (a * b).coefficients == (1, 2)
        assert (a * 3).coefficients == (3, 3)
        assert (a - a).coefficients == (0, 0)


class TestCharPoly:
    """Test the characteristic polynomial and its dominant root."""

    def test_p32(self):
        cp = char_poly(p32_recurrence())
        assert str(cp) == "1 + 15/8*X + 3/4*X^2 - 1/8*X^3"
        assert cp(8) == 0
        assert dominant_root(cp) == 8

    def test_unequal_degrees(self):
        rec = PolyRecurrence(coeffs=("1", "n"), seeds=(1,))
        with pytest.raises(UnequalDegreesError):
            char_poly(rec)

    def test_no_positive_rational_root(self):
        with pytest.raises(NoDominantRationalRootError):
            dominant_root(CharPoly((1, 0, 1)))

    def test_double_root(self):
        with pytest.raises(NonSimpleRootError):
            dominant_root(CharPoly((1, -2, 1)))

    def test_root_not_dominant(self):
        """Roots 1 and -1 share the same modulus."""
        with pytest.raises(NoDominantRationalRootError):
            dominant_root(CharPoly((1, 0, -1)))


class TestGrowth:
    """Test the exponential growth rate and the power exponent."""

    def test_p32(self):
        assert solve_growth(p32_recurrence()) == (8, -7)

    def test_doubling(self):
        rec = PolyRecurrence(coeffs=("2", "-1"), seeds=(1,))
        assert solve_growth(rec) == (2, 0)

    def test_linear_sequence(self):
        rec = PolyRecurrence(coeffs=("-(n+1)", "n"), seeds=(0, 1))
        assert solve_growth(rec) == (1, 1)

    def test_p32_corrections(self):
        assert solve_corrections(p32_recurrence(), 8, -7, 3) == P32_CORRECTIONS

    def test_residual_vanishes(self):
        rec = p32_recurrence()
        for m in (3, 5):
            cs = solve_corrections(rec, 8, -7, m)
            exp = AsymptoticExpansion(lam=Rational(8), theta=Rational(-7), corrections=tuple(cs))
            assert residual_coefficients(rec, exp) == [0] * (m + 2)

    def test_residual_without_corrections_does_not_vanish(self):
        exp = AsymptoticExpansion(lam=Rational(8), theta=Rational(-7))
        residual = residual_coefficients(p32_recurrence(), exp, order=2)
        assert residual[:2] == [0, 0]
        assert residual[2] != 0


class TestFit:
    """Test the fitted constant and the sub-exponential table."""

    def test_doubling_constant(self):
        rec = PolyRecurrence(coeffs=("2", "-1"), seeds=(6,), offset=1, start=1)
        exp = analyze(rec, corrections=0, fit_n=50)
        assert exp.K == pytest.approx(6.0)

    def test_linear_constant(self):
        rec = PolyRecurrence(coeffs=("-(n+1)", "n"), seeds=(0, 1))
        exp = analyze(rec, corrections=2, fit_n=100)
        assert exp.corrections == (0, 0)
        assert exp.K == pytest.approx(1.0)

    def test_p32_expansion(self, p32_expansion):
        assert p32_expansion.lam == 8
        assert p32_expansion.theta == -7
        assert list(p32_expansion.corrections) == P32_CORRECTIONS
        assert (p32_expansion.mu0, p32_expansion.rho, p32_expansion.beta) == (0, 1, 0)

    def test_p32_constant(self, p32_expansion):
        assert p32_expansion.K == pytest.approx(REFERENCE_K, rel=1e-3)

    def test_fit_stabilizes(self, p32_terms, p32_expansion):
        K = [fit_K(p32_terms, p32_expansion, n) for n in (100, 200, 400)]
        assert abs(K[2] - K[1]) < abs(K[1] - K[0])

    @pytest.mark.parametrize("n", [250, 500, 1000])
    def test_error_is_fourth_order(self, p32_terms, n):
        """With three corrections the relative error shrinks like n**-4."""
        full = analyze(p32_recurrence(), corrections=6, seq=p32_terms, fit_n=2000)
        three = full.truncated(3)
        assert three.K == full.K
        ratio = relative_error(p32_terms, three, n) / relative_error(p32_terms, three, 2 * n)
        assert 12 <= ratio <= 20, f"Error ratio {ratio} at n={n} is not close to 16"

    def test_insufficient_terms(self, p32_expansion):
        with pytest.raises(InsufficientTermsError):
            fit_K([1, 1, 2], p32_expansion, 10)

    def test_approx_needs_K(self):
        with pytest.raises(ValueError):
            AsymptoticExpansion(lam=Rational(2), theta=Rational(0)).approx(3)

    def test_subexp_flags(self, p32_terms, p32_expansion):
        rows = subexp_table([21, 101, 501, 1001], p32_terms, p32_expansion)
        assert [row.flagged for row in rows] == [True, False, False, False]
        for row in rows[1:]:
            assert row.exact_ratio == pytest.approx(row.g, rel=0.02)

    @pytest.mark.parametrize("n", [101, 1001])
    def test_subexp_rows_match_reference(self, p32_terms, p32_expansion, n):
        row, = subexp_table([n], p32_terms, p32_expansion)
        exact, g = REFERENCE_SUBEXP[n]
        assert row.exact_ratio == pytest.approx(exact, rel=0.02)
        assert row.g == pytest.approx(g, rel=0.02)

    def test_subexp_row_501(self, p32_terms, p32_expansion):
        """The printed g at 501 carries a wrong exponent; compare exact against g instead."""
        row, = subexp_table([501], p32_terms, p32_expansion)
        assert row.exact_ratio == pytest.approx(REFERENCE_SUBEXP[501][0], rel=0.02)
        assert abs(row.exact_ratio / row.g - 1) < 0.02
        assert not row.flagged

    def test_subexp_row_21_g(self, p32_terms, p32_expansion):
        row, = subexp_table([21], p32_terms, p32_expansion)
        assert row.g == pytest.approx(REFERENCE_SUBEXP[21][1], rel=0.02)

    def test_subexp_rows_use_previous_index(self, p32_terms, p32_expansion):
        shifted, = subexp_table([101], p32_terms, p32_expansion)
        literal, = subexp_table([100], p32_terms, p32_expansion, shift=0)
        assert shifted.exact_ratio == literal.exact_ratio
        assert shifted.g == literal.g
        assert shifted.n == 101 and literal.n == 100

    def test_subexp_without_shift(self, p32_terms, p32_expansion):
        row, = subexp_table([1], p32_terms, p32_expansion, shift=0)
        assert row.exact_ratio == 0.125

    def test_subexp_row_needs_positive_index(self, p32_terms, p32_expansion):
        with pytest.raises(AsymptoticsError):
            subexp_table([1], p32_terms, p32_expansion)

    def test_report(self, p32_terms, p32_expansion):
        rows = subexp_table([101], p32_terms, p32_expansion)
        report = expansion_report(p32_expansion, rows)
        assert report["lambda"] == "8"
        assert report["theta"] == "-7"
        assert report["corrections"] == ["-28", "4102/9", "-457744/81"]
        assert report["table"][0]["n"] == 101
        assert report["table"][0]["flagged"] is False
