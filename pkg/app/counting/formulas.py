"""Closed counting formulas over exact integers."""

from functools import lru_cache
from math import comb
import logging

from ..errors import ArgumentRangeError, InexactDivisionError
from .walks import MATCHING_STEPS, vacillating_counts

logger = logging.getLogger(__name__)

# (k, m, sign) terms of the beta-sum for p_{3,2}(n+1)
_BETA_TERMS = (
    (1, 0, 1), (1, -1, -1), (1, -4, -1), (1, -3, 1),
    (3, 4, -1), (3, 3, 1), (3, 0, 1), (3, 1, -1),
    (2, 5, 1), (2, 4, -1), (2, 1, -1), (2, 2, 1),
)


def _binom(n: int, j: int) -> int:
    return comb(n, j) if 0 <= j <= n else 0


def catalan(m: int) -> int:
    if m < 0:
        raise ArgumentRangeError(f"Catalan index must be nonnegative, got {m}")
    return comb(2 * m, m) // (m + 1)


def f3_closed(points: int) -> int:
    """Number of 3-noncrossing perfect matchings on ``points`` points.

    ``C_m C_{m+2} - C_{m+1}^2`` for ``points = 2m``; zero for odd ``points``.
    """
    if points < 0:
        raise ArgumentRangeError(f"Point count must be nonnegative, got {points}")
    if points % 2:
        return 0
    m = points // 2
    return catalan(m) * catalan(m + 2) - catalan(m + 1) ** 2


@lru_cache(maxsize=None)
def _matching_prefix(k: int, pairs: int) -> tuple:
    return tuple(vacillating_counts(MATCHING_STEPS, k, pairs))


def f_k(points: int, k: int) -> int:
    """k-noncrossing perfect matchings on ``points`` points (shape DP unless k = 3)."""
    if points % 2:
        return 0
    if k == 3:
        return f3_closed(points)
    return _matching_prefix(k, points)[points]


def d_count(n: int, ell: int, k: int) -> int:
    """
    Number of k-noncrossing tangled diagrams over ``[n]`` with ``ell``
    degree-2 vertices.

    Sums over the number ``i`` of isolated vertices: choose them, choose
    the degree-2 vertices among the rest, and match the
    ``n - i + ell`` inflated points.

    Raises:
        ValueError: If ``ell`` is outside ``0..n`` or ``k < 2``.
    """
    if n < 1 or not 0 <= ell <= n:
        raise ArgumentRangeError(f"Need n >= 1 and 0 <= ell <= n, got n={n}, ell={ell}")
    if k < 2:
        raise ArgumentRangeError(f"k must be at least 2, got {k}")
    return sum(
        _binom(n, i) * _binom(n - i, ell) * f_k(n - i + ell, k)
        for i in range(n + 1)
    )


def p32_closed(n: int) -> int:
    """
    ``p_{3,2}(n + 1)``, the number of 2-regular 3-noncrossing partitions
    of ``[n + 1]``, via the twelve-term beta-sum.

    Raises:
        InexactDivisionError: If the term sum is not divisible by ``n + 1``.
    """
    if n < 0:
        raise ArgumentRangeError(f"n must be nonnegative, got {n}")
    size = n + 1
    total = 0
    for k, m, sign in _BETA_TERMS:
        total += sign * k * sum(
            _binom(size, s) * _binom(size, k + s) * _binom(size, s + m)
            for s in range(size + 1)
        )
    quotient, remainder = divmod(total, size)
    if remainder:
        raise InexactDivisionError(
            f"beta-sum {total} not divisible by {size} at n={n}"
        )
    return quotient
