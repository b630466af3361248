"""Automatic selection and fallback among the p_{3,2} counting methods.

Every method returns ``[p(1), ..., p(n_max)]`` for 2-regular 3-noncrossing
partitions.  Preference order:
1. rec (four-term recurrence, linear time)
2. sum (beta-sum closed form)
3. dp (braid shape DP, through the partition-braid shift)
4. oracle (exhaustive enumeration, n_max <= MAX_ORACLE_P32_N)
"""

from dataclasses import dataclass, field
import logging
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from ..config import MAX_ORACLE_P32_N
from ..diagrams.model import DiagramClass
from ..diagrams.oracle import ClassSpec, oracle_count
from ..errors import ArgumentRangeError
from .formulas import d_count, p32_closed
from .recurrence import evaluate, p32_recurrence
from .walks import BRAID_STEPS, vacillating_counts

logger = logging.getLogger(__name__)

CountMethod = Callable[[int], List[int]]

METHOD_ALIASES = {
    "recurrence": "rec",
    "recursion": "rec",
    "beta": "sum",
    "closed": "sum",
    "shape-dp": "dp",
    "braid": "dp",
    "brute": "oracle",
    "exhaustive": "oracle",
}


def _check_n_max(n_max: int) -> None:
    if n_max < 1:
        raise ArgumentRangeError(f"n_max must be positive, got {n_max}")


def p32_by_recurrence(n_max: int) -> List[int]:
    _check_n_max(n_max)
    return evaluate(p32_recurrence(), n_max)


def p32_by_sum(n_max: int) -> List[int]:
    _check_n_max(n_max)
    return [p32_closed(n - 1) for n in range(1, n_max + 1)]


def p32_by_dp(n_max: int) -> List[int]:
    """Braids over ``[n - 1]`` are counted by the ``BRAID_STEPS`` shape DP."""
    _check_n_max(n_max)
    return vacillating_counts(BRAID_STEPS, 3, n_max - 1)


def p32_by_oracle(n_max: int) -> List[int]:
    _check_n_max(n_max)
    return [
        oracle_count(ClassSpec(DiagramClass.TWO_REGULAR_PARTITION, n, k=3))
        for n in range(1, n_max + 1)
    ]


_METHODS: Dict[str, CountMethod] = {
    "rec": p32_by_recurrence,
    "sum": p32_by_sum,
    "dp": p32_by_dp,
    "oracle": p32_by_oracle,
}


def _detect_available_methods(n_max: int) -> List[str]:
    """Methods usable up to ``n_max``, in order of preference."""
    available = ["rec", "sum", "dp"]
    if n_max <= MAX_ORACLE_P32_N:
        available.append("oracle")
        logger.debug("oracle available for n_max=%d", n_max)
    else:
        logger.debug("oracle unavailable for n_max=%d (limit %d)", n_max, MAX_ORACLE_P32_N)
    return available


def get_best_method(n_max: int) -> Tuple[str, CountMethod]:
    name = _detect_available_methods(n_max)[0]
    logger.debug("Using %s counting method", name)
    return name, _METHODS[name]


def get_method_by_name(name: str, n_max: int) -> CountMethod:
    """
    Get a specific counting method by name or alias.

    Raises:
        ArgumentRangeError: If the method is unknown or unavailable at ``n_max``.
    """
    key = METHOD_ALIASES.get(name.lower(), name.lower())
    if key not in _METHODS:
        raise ArgumentRangeError(f"Unknown counting method: {name}")
    if key not in _detect_available_methods(n_max):
        raise ArgumentRangeError(f"Counting method '{key}' not available for n_max={n_max}")
    return _METHODS[key]


def resolve_method(name: str, n_max: int) -> Tuple[str, CountMethod]:
    """Like :func:`get_method_by_name`, falling back to the best method."""
    if not name:
        return get_best_method(n_max)
    key = METHOD_ALIASES.get(name.lower(), name.lower())
    try:
        return key, get_method_by_name(key, n_max)
    except ValueError:
        logger.warning(
            "Requested counting method '%s' not available, using best available method",
            name,
        )
        return get_best_method(n_max)


def get_method_info(n_max: int) -> Dict[str, object]:
    available = _detect_available_methods(n_max)
    return {
        "available_methods": available,
        "best_method": available[0],
        "oracle_available": "oracle" in available,
        "aliases": dict(METHOD_ALIASES),
    }


@dataclass
class CountTable:
    """Exact counts keyed by ``(label, n)``, labels kept in insertion order."""

    entries: Dict[Tuple[str, int], int] = field(default_factory=dict)

    def set(self, label: str, n: int, value: int) -> None:
        if value < 0:
            raise ValueError(f"Counts are nonnegative, got {value} for ({label}, {n})")
        self.entries[(label, n)] = int(value)

    def get(self, label: str, n: int) -> int:
        return self.entries[(label, n)]

    def labels(self) -> List[str]:
        seen: Dict[str, None] = {}
        for label, _ in self.entries:
            seen.setdefault(label, None)
        return list(seen)

    def ns(self) -> List[int]:
        return sorted({n for _, n in self.entries})

    def column(self, label: str) -> List[int]:
        return [self.entries[(label, n)] for n in self.ns() if (label, n) in self.entries]

    def agree(self) -> bool:
        """Whether every label holds the same value at every shared ``n``."""
        for n in self.ns():
            values = {v for (label, m), v in self.entries.items() if m == n}
            if len(values) > 1:
                return False
        return True


def p32_table(n_max: int, methods: Sequence[str] = ("rec",)) -> CountTable:
    """p_{3,2}(1..n_max), one column per requested method."""
    table = CountTable()
    for requested in methods:
        name, method = resolve_method(requested, n_max)
        for n, value in enumerate(method(n_max), start=1):
            table.set(name, n, value)
    return table


def d_table(ells: Iterable[int], k: int, n_max: int) -> CountTable:
    """``d_{ell,k}(n)`` for ``n = 1..n_max``, one column per ``ell`` (zero when ``ell > n``)."""
    _check_n_max(n_max)
    table = CountTable()
    for ell in ells:
        for n in range(1, n_max + 1):
            table.set(f"ell={ell}", n, d_count(n, ell, k) if ell <= n else 0)
    return table
