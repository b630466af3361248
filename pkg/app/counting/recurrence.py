"""Exact forward evaluation of linear recurrences with polynomial coefficients.

A recurrence ``sum_h C_h(n) * y(n + offset + h) = 0`` (``h = 0..order``)
is evaluated over Python integers; every division is checked for
exactness.
"""

from dataclasses import dataclass
from functools import cached_property
import logging
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Poly, Symbol, SympifyError, sympify
from sympy.polys.polyerrors import CoercionFailed, PolynomialError

from ..errors import (
    ArgumentRangeError,
    InconsistentSeedsError,
    InexactDivisionError,
    LeadingZeroError,
    RecurrenceError,
    RecurrenceSyntaxError,
)

logger = logging.getLogger(__name__)

N = Symbol("n")

CoefficientLike = Union[Poly, str, int]


def _as_poly(coefficient: CoefficientLike) -> Poly:
    if isinstance(coefficient, Poly):
        return Poly(coefficient.as_expr(), N, domain="ZZ")
    try:
        return Poly(sympify(coefficient, locals={"n": N}), N, domain="ZZ")
    except (SympifyError, PolynomialError, CoercionFailed, TypeError) as exc:
        raise RecurrenceSyntaxError(
            f"Not an integer polynomial in n: {coefficient!r}"
        ) from exc


@dataclass(frozen=True)
class PolyRecurrence:
    """
    ``coeffs[h]`` multiplies ``y(n + offset + h)``; ``seeds[0]`` is
    ``y(start)``.  The recurrence instance at ``n = 0`` therefore starts
    at sequence index ``offset``.
    """

    coeffs: Tuple[Poly, ...]
    seeds: Tuple[int, ...]
    offset: int = 0
    start: Optional[int] = None

    def __post_init__(self):
        coeffs = tuple(_as_poly(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        if self.start is None:
            object.__setattr__(self, "start", self.offset)
        if len(coeffs) < 2:
            raise RecurrenceError("A recurrence needs at least two coefficients")
        if coeffs[-1].is_zero:
            raise LeadingZeroError("Leading coefficient polynomial is zero")
        if len(self.seeds) < self.order:
            raise RecurrenceError(
                f"Order {self.order} recurrence needs {self.order} seeds, "
                f"got {len(self.seeds)}"
            )
        if self.start > self.offset:
            raise RecurrenceError(
                f"First seed index {self.start} lies after offset {self.offset}"
            )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @cached_property
    def _int_coeffs(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(c) for c in p.all_coeffs()) for p in self.coeffs)

    def coefficient_at(self, h: int, n: int) -> int:
        """Value of ``C_h(n)`` (Horner over integers)."""
        value = 0
        for c in self._int_coeffs[h]:
            value = value * n + c
        return value

    def __str__(self) -> str:
        polys = ", ".join(str(p.as_expr()) for p in self.coeffs)
        seeds = ",".join(str(s) for s in self.seeds)
        return f"rec [{polys}] seeds {seeds} offset {self.offset}"


def p32_recurrence() -> PolyRecurrence:
    """Four-term recurrence for 2-regular 3-noncrossing partitions, seeds p(1..4)."""
    return PolyRecurrence(
        coeffs=(
            "8*(n+2)*(n+3)*(n+1)",
            "3*(n+2)*(5*n**2+47*n+104)",
            "3*(n+4)*(2*n+11)*(n+7)",
            "-(n+9)*(n+8)*(n+7)",
        ),
        seeds=(1, 1, 2, 5),
        offset=1,
        start=1,
    )


def evaluate(rec: PolyRecurrence, count: int) -> List[int]:
    """
    First ``count`` terms ``y(start), y(start + 1), ...``.

    Seeds beyond the first ``order`` are checked against the recurrence.

    Raises:
        LeadingZeroError: If the leading coefficient vanishes at a needed ``n``.
        InexactDivisionError: If a term is not an integer.
        InconsistentSeedsError: If an extra seed disagrees with the recurrence.
    """
    if count < 0:
        raise ArgumentRangeError(f"count must be nonnegative, got {count}")
    order = rec.order
    terms = list(rec.seeds[:order])
    target = max(count, len(rec.seeds))
    if target > 1000:
        logger.info("Evaluating %d terms of %s", target, rec)

    while len(terms) < target:
        index = rec.start + len(terms)
        n = index - order - rec.offset
        position = len(terms)
        lead = rec.coefficient_at(order, n)
        base = n + rec.offset - rec.start
        acc = sum(rec.coefficient_at(h, n) * terms[base + h] for h in range(order))
        if lead == 0:
            # a seed may sit at a singular point, provided the relation holds there
            if position < len(rec.seeds) and acc == 0:
                terms.append(rec.seeds[position])
                continue
            if position < len(rec.seeds):
                raise InconsistentSeedsError(
                    f"Relation at singular n={n} fails for the given seeds"
                )
            raise LeadingZeroError(f"Leading coefficient vanishes at n={n}")
        value, remainder = divmod(-acc, lead)
        if remainder:
            raise InexactDivisionError(
                f"Term y({index}) = {-acc}/{lead} is not an integer"
            )
        if position < len(rec.seeds) and rec.seeds[position] != value:
            raise InconsistentSeedsError(
                f"Seed y({index}) = {rec.seeds[position]} but recurrence gives {value}"
            )
        terms.append(value)
    return terms[:count]


def parse_recurrence(
    text: str,
    seeds: Union[str, Sequence[int]],
    offset: int = 0,
    start: Optional[int] = None,
) -> PolyRecurrence:
    """
    Build a recurrence from comma-separated coefficient polynomials.

    ``"8*(n+2)*(n+3)*(n+1), 3*(n+2)*(5*n^2+47*n+104), ..."``; ``^`` is
    accepted for powers.  ``seeds`` may be ``"1,1,2,5"`` or a sequence.

    Raises:
        RecurrenceSyntaxError: On malformed coefficients or seeds.
    """
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) < 2:
        raise RecurrenceSyntaxError(f"Need at least two coefficients in {text!r}")
    if isinstance(seeds, str):
        try:
            seeds = [int(s) for s in seeds.split(",") if s.strip()]
        except ValueError as exc:
            raise RecurrenceSyntaxError(f"Bad seed list {seeds!r}") from exc
    return PolyRecurrence(
        coeffs=tuple(_as_poly(p) for p in parts),
        seeds=tuple(seeds),
        offset=offset,
        start=start,
    )


def recurrence_holds(rec: PolyRecurrence, terms: Iterable[int]) -> bool:
    """Whether ``terms`` (starting at ``y(start)``) satisfy ``rec`` everywhere."""
    terms = list(terms)
    base_shift = rec.offset - rec.start
    for n in range(-base_shift, len(terms) - rec.order - base_shift):
        if sum(rec.coefficient_at(h, n) * terms[n + base_shift + h]
               for h in range(rec.order + 1)):
            return False
    return True
