"""Runtime constants and logging setup for tanglekit."""

import logging
import os

LOG_FORMAT = "[%(asctime)s] [%(levelname)s] %(name)s: %(message)s"
LOG_LEVEL = os.environ.get("TANGLEKIT_LOG_LEVEL", "WARNING").upper()

# Enumeration guards for the brute-force oracle
MAX_PARTITION_N = 12  # Bell(12) = 4,213,597
MAX_MATCHING_POINTS = 14  # 13!! = 135,135
MAX_TANGLED_N = 7
MAX_CROSSING_ARCS = 12
# p32 oracle method; Bell(10) = 115,975 partitions per table column
MAX_ORACLE_P32_N = 10

# Asymptotic analysis defaults
DEFAULT_SERIES_ORDER = 6
DEFAULT_CORRECTIONS = 3
DEFAULT_FIT_N = 2000
SUBEXP_TOLERANCE = 0.02
# Row n of the sub-exponential table is evaluated at n - SUBEXP_ROW_SHIFT
SUBEXP_ROW_SHIFT = 1
SUBEXP_NS = (21, 31, 41, 51, 61, 71, 81, 91, 101, 501, 1001, 10001)

# Published reference values
REFERENCE_K = 6686.408973
REFERENCE_P32 = (
    1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032, 71084, 348889,
)
REFERENCE_D_TABLE = {
    1: (1, 2, 12, 40, 165, 606, 2380, 9136, 36099, 142750),
    2: (0, 3, 9, 102, 450, 2565, 11823, 57876, 266220, 1243170),
    3: (0, 0, 14, 56, 980, 5320, 38920, 214144, 1251852, 6672120),
}
# n -> (printed p(n)/8^(n-1), printed g(n-1)); the 501 row prints mismatched exponents
REFERENCE_SUBEXP = {
    21: (1.479e-6, 1.726e-7),
    31: (1.283e-7, 1.112e-7),
    41: (2.104e-8, 2.026e-8),
    51: (5.011e-9, 4.939e-9),
    61: (1.524e-9, 1.514e-9),
    71: (5.514e-10, 5.493e-10),
    81: (2.270e-10, 2.264e-10),
    91: (1.033e-10, 1.031e-10),
    101: (5.088e-11, 5.081e-11),
    501: (8.100e-16, 8.095e-15),
    1001: (6.507e-18, 6.502e-18),
    10001: (6.672e-25, 6.668e-25),
}


def configure_logging(level: str = LOG_LEVEL) -> None:
    """Configure root logging once; records go to stderr."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
    )
