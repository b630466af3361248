"""Formal series solutions of polynomial recurrences.

Handles the case of a simple, strictly dominant, positive rational root of
the characteristic polynomial: the shift-0 term ``u(n)`` of the recurrence
is matched against

    u(n) ~ K * lam**n * n**theta * (1 + c_1/n + c_2/n**2 + ...)

Substituting the ansatz and dividing by ``lam**n * n**theta * n**d``
(``d`` the common coefficient degree) turns the recurrence into a series
in ``1/n``; ``lam`` kills the constant term, ``theta`` the ``1/n`` term and
``c_j`` the ``1/n**(j+1)`` term.  Everything but ``K`` is exact.
"""

from dataclasses import dataclass, field, replace
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import Poly, Rational, Symbol, factorial, ff, roots

from ..config import (
    DEFAULT_CORRECTIONS,
    DEFAULT_FIT_N,
    DEFAULT_SERIES_ORDER,
    SUBEXP_ROW_SHIFT,
    SUBEXP_TOLERANCE,
)
from ..errors import (
    AsymptoticsError,
    InsufficientTermsError,
    NoDominantRationalRootError,
    NonSimpleRootError,
    SingularSystemError,
    UnequalDegreesError,
)
from .recurrence import PolyRecurrence, evaluate

logger = logging.getLogger(__name__)

X = Symbol("X")

RationalLike = Union[Rational, int, str]


@dataclass(frozen=True)
class TruncatedSeries:
    """``a_0 + a_1/n + ... + a_order/n**order`` with exact coefficients.

    Products keep the smaller order of the two operands.
    """

    coefficients: Tuple[Rational, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("A truncated series needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Rational(c) for c in self.coefficients)
        )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "TruncatedSeries":
        return cls.monomial(0, value, order)

    @classmethod
    def monomial(cls, power: int, value: RationalLike, order: int) -> "TruncatedSeries":
        """``value / n**power`` (zero when ``power`` exceeds ``order``)."""
        coefficients = [Rational(0)] * (order + 1)
        if power <= order:
            coefficients[power] = Rational(value)
        return cls(tuple(coefficients))

    @classmethod
    def from_poly(cls, poly: Poly, degree: int, order: int) -> "TruncatedSeries":
        """Expand ``poly(n) / n**degree`` for ``deg(poly) <= degree``."""
        top_down = [Rational(c) for c in poly.all_coeffs()]
        top_down = [Rational(0)] * (degree + 1 - len(top_down)) + top_down
        coefficients = top_down[: order + 1]
        coefficients += [Rational(0)] * (order + 1 - len(coefficients))
        return cls(tuple(coefficients))

    @classmethod
    def binomial(cls, shift: RationalLike, alpha: RationalLike, order: int) -> "TruncatedSeries":
        """``(1 + shift/n)**alpha`` via the generalized binomial series."""
        shift, alpha = Rational(shift), Rational(alpha)
        return cls(tuple(
            ff(alpha, j) / factorial(j) * shift ** j for j in range(order + 1)
        ))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(tuple(
            a + b for a, b in zip(self.coefficients[: order + 1], other.coefficients)
        ))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            factor = Rational(other)
            return TruncatedSeries(tuple(a * factor for a in self.coefficients))
        order = min(self.order, other.order)
        product = [Rational(0)] * (order + 1)
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients[: order + 1 - i]):
                product[i + j] += a * b
        return TruncatedSeries(tuple(product))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return " + ".join(
            f"({c})/n^{i}" if i else f"({c})" for i, c in enumerate(self.coefficients)
        )


@dataclass(frozen=True)
class CharPoly:
    """``P(X) = sum_h coefficients[h] * X**h``, normalized to a constant term of 1."""

    coefficients: Tuple[Rational, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(Rational(c) for c in self.coefficients)
        )
        if len(self.coefficients) < 2:
            raise ValueError("A characteristic polynomial has degree at least 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_poly(self) -> Poly:
        return Poly(list(reversed(self.coefficients)), X, domain="QQ")

    def __call__(self, x: RationalLike) -> Rational:
        return sum(c * Rational(x) ** h for h, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        terms = []
        for h, c in enumerate(self.coefficients):
            if c == 0:
                continue
            monomial = "" if h == 0 else ("X" if h == 1 else f"X^{h}")
            magnitude = abs(c)
            body = str(magnitude) if not monomial else (
                monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            )
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class AsymptoticExpansion:
    """
    Growth data of the shift-0 term ``u(n) = y(n + offset)``.

    ``mu0``, ``rho`` and ``beta`` record the only supported case: no
    super-exponential factor, integer powers of ``1/n``, no
    ``exp(n**beta)`` factor.
    """

    lam: Rational
    theta: Rational
    corrections: Tuple[Rational, ...] = ()
    K: Optional[float] = None
    offset: int = 0
    start: int = 0
    mu0: int = field(default=0, init=False)
    rho: int = field(default=1, init=False)
    beta: int = field(default=0, init=False)

    def series_value(self, n: int) -> Rational:
        """``1 + c_1/n + c_2/n**2 + ...`` exactly."""
        n = Rational(n)
        return 1 + sum(c / n ** (j + 1) for j, c in enumerate(self.corrections))

    def approx(self, n: int) -> float:
        """``K * n**theta * S(n)`` (the exponential factor left out)."""
        if self.K is None:
            raise ValueError("Expansion has no fitted constant K")
        return self.K * float(n) ** float(self.theta) * float(self.series_value(n))

    def truncated(self, m: int) -> "AsymptoticExpansion":
        return replace(self, corrections=self.corrections[:m])

    def term(self, seq: Sequence[int], n: int) -> int:
        index = n + self.offset - self.start
        if index < 0 or index >= len(seq):
            raise InsufficientTermsError(
                f"Need sequence index {index} for n={n}, have {len(seq)} terms"
            )
        return seq[index]


def char_poly(rec: PolyRecurrence) -> CharPoly:
    """
    Leading coefficients of the ``C_h`` divided by that of ``C_0``.

    Raises:
        UnequalDegreesError: If the coefficient polynomials differ in degree.
    """
    degrees = {p.degree() for p in rec.coeffs}
    if len(degrees) != 1:
        raise UnequalDegreesError(
            f"Coefficient degrees {sorted(degrees)} are not all equal"
        )
    lead = Rational(rec.coeffs[0].LC())
    return CharPoly(tuple(Rational(p.LC()) / lead for p in rec.coeffs))


def dominant_root(cp: CharPoly) -> Rational:
    """
    The largest positive rational root, required simple and strictly
    larger in modulus than every other root.

    Raises:
        NoDominantRationalRootError: If no such root exists.
        NonSimpleRootError: If it is a multiple root.
    """
    poly = cp.as_poly()
    rational = roots(poly, filter="Q")
    positive = [r for r in rational if r > 0]
    if not positive:
        raise NoDominantRationalRootError(f"{cp} has no positive rational root")
    lam = max(positive)
    if rational[lam] > 1:
        raise NonSimpleRootError(f"Root {lam} of {cp} has multiplicity {rational[lam]}")
    rest = poly.quo(Poly(X - lam, X, domain="QQ"))
    for other in rest.all_roots():
        if abs(complex(other.evalf(30))) >= float(lam) * (1 - 1e-12):
            raise NoDominantRationalRootError(
                f"Root {other} of {cp} is not dominated by {lam}"
            )
    return Rational(lam)


def _residual(
    rec: PolyRecurrence,
    lam: Rational,
    theta: Rational,
    corrections: Sequence[Rational],
    order: int,
) -> TruncatedSeries:
    degree = rec.coeffs[0].degree()
    total = TruncatedSeries.constant(0, order)
    for h, poly in enumerate(rec.coeffs):
        series = TruncatedSeries.constant(1, order)
        for j, c in enumerate(corrections, start=1):
            if c:
                series = series + TruncatedSeries.monomial(j, c, order) * TruncatedSeries.binomial(h, -j, order)
        term = (
            TruncatedSeries.from_poly(poly, degree, order)
            * TruncatedSeries.binomial(h, theta, order)
            * series
        )
        total = total + term * lam ** h
    return total


def _solve_linear(at_zero: Rational, at_one: Rational, what: str) -> Rational:
    slope = at_one - at_zero
    if slope == 0:
        raise SingularSystemError(f"Coefficient of {what} vanishes")
    return -at_zero / slope


def solve_growth(rec: PolyRecurrence) -> Tuple[Rational, Rational]:
    """
    ``(lam, theta)`` for the increasing formal series solution.

    Raises:
        UnequalDegreesError, NoDominantRationalRootError, NonSimpleRootError,
        SingularSystemError: Outside the supported case.
    """
    lam = dominant_root(char_poly(rec))
    theta = _solve_linear(
        _residual(rec, lam, Rational(0), (), 1).coefficients[1],
        _residual(rec, lam, Rational(1), (), 1).coefficients[1],
        "theta",
    )
    logger.debug("solve_growth: lam=%s theta=%s", lam, theta)
    return lam, theta


def solve_corrections(
    rec: PolyRecurrence,
    lam: RationalLike,
    theta: RationalLike,
    m: int,
) -> List[Rational]:
    """
    ``c_1..c_m``, each from the coefficient of ``1/n**(j+1)`` with the
    earlier ones fixed.

    Raises:
        SingularSystemError: If some ``c_j`` drops out of its equation.
    """
    lam, theta = Rational(lam), Rational(theta)
    corrections: List[Rational] = []
    for j in range(1, m + 1):
        at_zero = _residual(rec, lam, theta, corrections + [Rational(0)], j + 1)
        at_one = _residual(rec, lam, theta, corrections + [Rational(1)], j + 1)
        corrections.append(
            _solve_linear(at_zero.coefficients[j + 1], at_one.coefficients[j + 1], f"c_{j}")
        )
    return corrections


def residual_coefficients(
    rec: PolyRecurrence,
    expansion: AsymptoticExpansion,
    order: Optional[int] = None,
) -> List[Rational]:
    """Coefficients of ``1, 1/n, ..., 1/n**order`` after substituting ``expansion``.

    With ``m`` corrections the first ``m + 2`` of them vanish.
    """
    if order is None:
        order = len(expansion.corrections) + 1
    return list(
        _residual(rec, expansion.lam, expansion.theta, expansion.corrections, order).coefficients
    )


def fit_K(seq: Sequence[int], exp: AsymptoticExpansion, n_fit: int) -> float:
    """
    ``u(n) / (lam**n * n**theta * S(n))`` at ``n = n_fit``, using every
    correction in ``exp``.  The ratio to ``lam**n`` and ``S(n)`` is formed
    exactly before converting to float.

    Raises:
        InsufficientTermsError: If ``seq`` is too short.
    """
    if n_fit < 1:
        raise ValueError(f"n_fit must be positive, got {n_fit}")
    exact = Rational(exp.term(seq, n_fit)) / exp.lam ** n_fit / exp.series_value(n_fit)
    return float(exact) * float(n_fit) ** float(-exp.theta)


def relative_error(seq: Sequence[int], exp: AsymptoticExpansion, n: int) -> float:
    """``|u(n) / (K lam**n n**theta S(n)) - 1|``."""
    if exp.K is None:
        raise ValueError("Expansion has no fitted constant K")
    exact = Rational(exp.term(seq, n)) / exp.lam ** n / exp.series_value(n)
    return abs(float(exact) * float(n) ** float(-exp.theta) / exp.K - 1.0)


def analyze(
    rec: PolyRecurrence,
    corrections: int = DEFAULT_CORRECTIONS,
    seq: Optional[Sequence[int]] = None,
    fit_n: Optional[int] = DEFAULT_FIT_N,
    fit_corrections: Optional[int] = None,
) -> AsymptoticExpansion:
    """
    Full expansion of ``rec``: growth, ``corrections`` coefficients and
    ``K`` fitted at ``fit_n``.

    ``fit_corrections`` sets how many coefficients the fit divides out
    (default: at least ``DEFAULT_SERIES_ORDER``), so ``K`` is accurate
    beyond the order of the reported expansion.  ``fit_n=None`` skips the fit.
    """
    lam, theta = solve_growth(rec)
    depth = fit_corrections if fit_corrections is not None else max(corrections, DEFAULT_SERIES_ORDER)
    cs = solve_corrections(rec, lam, theta, max(corrections, depth))
    full = AsymptoticExpansion(
        lam=lam, theta=theta, corrections=tuple(cs),
        offset=rec.offset, start=rec.start,
    )
    result = full.truncated(corrections)
    if fit_n is None:
        return result
    if seq is None:
        logger.info("Evaluating recurrence to n=%d for the fit", fit_n)
        seq = evaluate(rec, fit_n + rec.offset - rec.start + 1)
    K = fit_K(seq, full.truncated(depth), fit_n)
    logger.info("Fitted K=%.6f at n=%d with %d corrections", K, fit_n, depth)
    return replace(result, K=K)


@dataclass(frozen=True)
class SubexpRow:
    n: int
    exact_ratio: float
    g: float
    flagged: bool


def subexp_table(
    ns: Sequence[int],
    seq: Sequence[int],
    exp: AsymptoticExpansion,
    tolerance: float = SUBEXP_TOLERANCE,
    shift: int = SUBEXP_ROW_SHIFT,
) -> List[SubexpRow]:
    """
    Rows comparing ``u(m) / lam**m`` with ``g(m) = K m**theta S(m)``.

    Row ``n`` is evaluated at ``m = n - shift``.  The default ``shift=1``
    follows the published table, whose row ``n`` holds ``p(n) / 8**(n-1)``
    for p_{3,2}; ``shift=0`` gives ``p(n+1) / 8**n``.  A row is flagged
    when the two differ by more than ``tolerance``.

    Raises:
        AsymptoticsError: If a row lands on ``m < 1``.
        InsufficientTermsError: If ``seq`` is too short for a row.
    """
    rows = []
    for n in ns:
        m = n - shift
        if m < 1:
            raise AsymptoticsError(f"Row n={n} with shift {shift} needs m >= 1, got {m}")
        exact = float(Rational(exp.term(seq, m)) / exp.lam ** m)
        g = exp.approx(m)
        rows.append(SubexpRow(n, exact, g, abs(exact / g - 1.0) > tolerance))
    return rows


def expansion_report(
    exp: AsymptoticExpansion,
    rows: Optional[Sequence[SubexpRow]] = None,
) -> Dict[str, object]:
    """JSON-ready report; rationals as strings, ``K`` as float."""
    report: Dict[str, object] = {
        "lambda": str(exp.lam),
        "theta": str(exp.theta),
        "corrections": [str(c) for c in exp.corrections],
        "K": exp.K,
    }
    if rows is not None:
        report["table"] = [
            {
                "n": row.n,
                "exact_ratio": f"{row.exact_ratio:.3e}",
                "g": f"{row.g:.3e}",
                "flagged": row.flagged,
            }
            for row in rows
        ]
    return report


__all__ = [
    "AsymptoticExpansion",
    "CharPoly",
    "SubexpRow",
    "TruncatedSeries",
    "analyze",
    "char_poly",
    "dominant_root",
    "expansion_report",
    "fit_K",
    "relative_error",
    "residual_coefficients",
    "solve_corrections",
    "solve_growth",
    "subexp_table",
]
