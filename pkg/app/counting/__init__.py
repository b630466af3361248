from .formulas import catalan, d_count, f3_closed, f_k, p32_closed
from .recurrence import PolyRecurrence, evaluate, p32_recurrence, parse_recurrence
from .walks import (
    BRAID_STEPS,
    MATCHING_STEPS,
    PARTITION_STEPS,
    TANGLED_STEPS,
    LatticePoint,
    StepPairSet,
    count_vacillating,
    quadrant_walks,
    reflection_count,
    region_walks,
    vacillating_counts,
)

__all__ = [
    "BRAID_STEPS",
    "LatticePoint",
    "MATCHING_STEPS",
    "PARTITION_STEPS",
    "PolyRecurrence",
    "StepPairSet",
    "TANGLED_STEPS",
    "catalan",
    "count_vacillating",
    "d_count",
    "evaluate",
    "f3_closed",
    "f_k",
    "p32_closed",
    "p32_recurrence",
    "parse_recurrence",
    "quadrant_walks",
    "reflection_count",
    "region_walks",
    "vacillating_counts",
]
