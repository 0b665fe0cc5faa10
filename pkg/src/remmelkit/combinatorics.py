"""Partitions, permutations, and words, with the statistics used everywhere else.

Permutations are plain tuples in one-line notation over 1..n and words are
tuples over 0..k-1; only Partition gets a class because partitions key
coefficient maps across the package.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError
from .polynomials import MultiPoly, ONE, Q, X, ZERO, q_int

Permutation = tuple[int, ...]
Word = tuple[int, ...]


def enumeration_cap(default: int = 10) -> int:
    """Factorial-enumeration budget, overridable via REMMELKIT_MAX_N."""
    raw = os.environ.get("REMMELKIT_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"REMMELKIT_MAX_N must be an integer, got {raw!r}") from None


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; the empty tuple is the partition of 0."""

    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = tuple(parts)
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise DomainError(f"partition parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must weakly decrease: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int, part_filter=None) -> list[Partition]:
    """All partitions of n in descending lexicographic order.

    The optional predicate restricts which part values may appear, e.g.
    ``lambda p: p % 2 == 1`` keeps only odd parts.
    """
    if n < 0:
        raise DomainError(f"cannot partition {n}")
    out: list[Partition] = []

    def grow(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(remaining, cap), 0, -1):
            if part_filter is None or part_filter(part):
                prefix.append(part)
                grow(remaining - part, part, prefix)
                prefix.pop()

    grow(n, n if n else 1, [])
    return out


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by the recurrence on the largest part (small n only)."""

    @lru_cache(maxsize=None)
    def count(remaining: int, cap: int) -> int:
        if remaining == 0:
            return 1
        return sum(count(remaining - p, p) for p in range(min(remaining, cap), 0, -1))

    return count(n, n if n else 1)


# -- permutation statistics ----------------------------------------------------------


def check_permutation(sigma) -> Permutation:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise DomainError(f"not a permutation of 1..n: {sigma}")
    return sigma


@dataclass(frozen=True)
class PermStats:
    des: int
    maj: int
    inv: int
    lrmin: int
    is_updown: bool
    is_downup: bool


def descents(seq) -> list[int]:
    """1-based positions i with seq[i] > seq[i+1]."""
    return [i + 1 for i in range(len(seq) - 1) if seq[i] > seq[i + 1]]


def inversions(seq) -> int:
    n = len(seq)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j]
    )


def left_to_right_minima(sigma) -> int:
    count = 0
    best = None
    for v in sigma:
        if best is None or v < best:
            count += 1
            best = v
    return count


def is_updown(sigma) -> bool:
    """sigma_1 < sigma_2 > sigma_3 < ...; vacuously true for n <= 1."""
    return all(
        (sigma[i] < sigma[i + 1]) if i % 2 == 0 else (sigma[i] > sigma[i + 1])
        for i in range(len(sigma) - 1)
    )


def is_downup(sigma) -> bool:
    """sigma_1 > sigma_2 < sigma_3 > ...; vacuously true for n <= 1."""
    return all(
        (sigma[i] > sigma[i + 1]) if i % 2 == 0 else (sigma[i] < sigma[i + 1])
        for i in range(len(sigma) - 1)
    )


def perm_statistics(sigma) -> PermStats:
    sigma = check_permutation(sigma)
    des_positions = descents(sigma)
    return PermStats(
        des=len(des_positions),
        maj=sum(des_positions),
        inv=inversions(sigma),
        lrmin=left_to_right_minima(sigma),
        is_updown=is_updown(sigma),
        is_downup=is_downup(sigma),
    )


def permutations(n: int):
    """All of S_n in lexicographic one-line order, as tuples over 1..n."""
    if n < 0:
        raise DomainError(f"S_n needs n >= 0, got {n}")
    return itertools.permutations(range(1, n + 1))


def eulerian_polynomial(n: int) -> MultiPoly:
    """Sum of x^des(sigma) over S_n, by exhaustive enumeration."""
    if n < 0:
        raise DomainError(f"Eulerian polynomial needs n >= 0, got {n}")
    counts = [0] * (n + 1)
    for sigma in permutations(n):
        d = 0
        for i in range(n - 1):
            if sigma[i] > sigma[i + 1]:
                d += 1
        counts[d] += 1
    return sum(
        (MultiPoly.const(c) * X**d for d, c in enumerate(counts) if c), ZERO
    )


def word_statistics_polynomial(n: int, k: int) -> MultiPoly:
    """Sum of x^des(w) q^sum(w) over all k^n words of length n."""
    if n < 0 or k < 1:
        raise DomainError(f"word polynomial needs n >= 0 and k >= 1, got {n}, {k}")
    out = ZERO
    counts: dict[tuple[int, int], int] = {}
    for w in itertools.product(range(k), repeat=n):
        d = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        key = (d, sum(w))
        counts[key] = counts.get(key, 0) + 1
    for (d, s), c in sorted(counts.items()):
        out = out + MultiPoly.const(c) * X**d * Q**s
    return out


# -- derangements --------------------------------------------------------------------


def cycles(sigma: Permutation) -> list[list[int]]:
    """Cycle decomposition; each cycle is listed from its smallest element."""
    n = len(sigma)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        nxt = sigma[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = sigma[nxt - 1]
        out.append(cyc)
    return out


def derangement_cycle_word(sigma) -> Permutation:
    """Flatten the cycles of a derangement into one-line notation.

    Each cycle is rotated so its second smallest element comes last, and
    cycles are concatenated in increasing order of those second smallest
    elements.  Fixed points are rejected: a 1-cycle has no second smallest
    element.
    """
    sigma = check_permutation(sigma)
    pieces = []
    for cyc in cycles(sigma):
        if len(cyc) == 1:
            raise DomainError(f"{sigma} has fixed point {cyc[0]}")
        second = sorted(cyc)[1]
        at = cyc.index(second)
        pieces.append((second, cyc[at + 1 :] + cyc[: at + 1]))
    pieces.sort()
    return tuple(v for _, rotated in pieces for v in rotated)


def derangements(n: int):
    """All derangements of S_n, lexicographically."""
    for sigma in permutations(n):
        if all(sigma[i] != i + 1 for i in range(n)):
            yield sigma


@lru_cache(maxsize=None)
def q_derangement(n: int) -> MultiPoly:
    """Inversion-graded derangement count: sum of q^inv over flattened cycles.

    The empty permutation counts once, so the n = 0 value is 1.
    """
    if n < 0:
        raise DomainError(f"q-derangement needs n >= 0, got {n}")
    if n == 0:
        return ONE
    counts = [0] * (n * (n - 1) // 2 + 1)
    for sigma in derangements(n):
        word = derangement_cycle_word(sigma)
        inv = 0
        for i in range(n):
            wi = word[i]
            for j in range(i + 1, n):
                if wi > word[j]:
                    inv += 1
        counts[inv] += 1
    return MultiPoly({(e, 0, 0, 0): Fraction(c) for e, c in enumerate(counts) if c})


def derangement_number(n: int) -> int:
    """Classical derangement count via the alternating-sum formula."""
    return sum((-1) ** k * factorial(n) // factorial(k) for k in range(n + 1))
