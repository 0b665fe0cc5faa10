"""Exact-arithmetic combinatorics: symmetric function transitions, partition
bijections, tree encodings, rook polynomials, and permutation patterns, each
paired with a brute-force oracle and a verification suite."""

from .combinatorics import Partition, PermStats, partitions, perm_statistics
from .errors import DomainError, IdentityViolationError, InternalError
from .polynomials import (
    MultiPoly,
    ONE,
    Q,
    VARIABLES,
    X,
    Y,
    Z,
    ZERO,
    parse_poly,
    q_binomial,
    q_factorial,
    q_int,
)
from .series import DEFAULT_ORDER, PowerSeries, pochhammer_zx

__all__ = [
    "DEFAULT_ORDER",
    "DomainError",
    "IdentityViolationError",
    "InternalError",
    "MultiPoly",
    "ONE",
    "Partition",
    "PermStats",
    "PowerSeries",
    "Q",
    "VARIABLES",
    "X",
    "Y",
    "Z",
    "ZERO",
    "parse_poly",
    "partitions",
    "perm_statistics",
    "pochhammer_zx",
    "q_binomial",
    "q_factorial",
    "q_int",
]
