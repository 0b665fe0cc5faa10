"""Staircase rook boards with an infinite lower extension under every column.

Column j of a size-n board carries j-1 upper cells (heights 1..j-1 above
the baseline) and lower cells in rows 1, 2, ... running downward.  Rooks
attack every cell below them in their column and to the right in their
row; upper rows exist only where the staircase does, lower rows span all
columns.  inv counts cells that are neither occupied nor attacked and max
is the deepest lower-row index used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DomainError
from .polynomials import MultiPoly, ONE, Q, ZERO, q_factorial, q_int
from .series import PowerSeries, geometric


@dataclass(frozen=True)
class UpperPlacement:
    """Non-attacking rooks in the upper staircase, one per chosen column."""

    n: int
    rooks: tuple[tuple[int, int], ...]  # (column, height), height in 1..column-1

    def __post_init__(self):
        object.__setattr__(self, "rooks", tuple(sorted(self.rooks)))
        cols = [c for c, _ in self.rooks]
        heights = [h for _, h in self.rooks]
        if len(set(cols)) != len(cols) or len(set(heights)) != len(heights):
            raise DomainError("rooks attack each other")
        if any(not 1 <= h <= c - 1 or c > self.n for c, h in self.rooks):
            raise DomainError("rook outside the staircase")

    def free_cells(self) -> int:
        """Staircase cells neither occupied nor attacked."""
        by_col = {c: h for c, h in self.rooks}
        by_height = {h: c for c, h in self.rooks}
        free = 0
        for col in range(2, self.n + 1):
            for height in range(1, col):
                rook_h = by_col.get(col)
                if rook_h is not None and rook_h >= height:
                    continue
                rook_c = by_height.get(height)
                if rook_c is not None and rook_c <= col:
                    continue
                free += 1
        return free


def upper_placements(n: int, rook_count: int):
    """All upper placements of the given size, column by column."""
    if rook_count < 0:
        return
    used_heights: set[int] = set()
    rooks: list[tuple[int, int]] = []

    def place(col: int, left: int):
        if left == 0:
            yield UpperPlacement(n, tuple(rooks))
            return
        if col > n or left > n - col + 1:
            return
        yield from place(col + 1, left)
        for height in range(1, col):
            if height not in used_heights:
                used_heights.add(height)
                rooks.append((col, height))
                yield from place(col + 1, left - 1)
                rooks.pop()
                used_heights.remove(height)

    yield from place(1, rook_count)


def stirling_q(n: int, k: int) -> MultiPoly:
    """q-graded count of n-k upper rooks: sum of q^free over all placements.

    Zero when the rook count is negative or exceeds the n-1 usable
    columns; at q=1 this is the Stirling partition number S(n, k).
    """
    if n < 0:
        raise DomainError(f"board size must be >= 0, got {n}")
    rook_count = n - k
    if rook_count < 0 or rook_count > max(n - 1, 0):
        return ZERO
    out = ZERO
    for placement in upper_placements(n, rook_count):
        out = out + Q ** placement.free_cells()
    return out


def stirling_number(n: int, k: int) -> int:
    """S(n, k) by direct enumeration of set partitions of {1..n}.

    Each element either opens a new block or joins one of the existing
    blocks; blocks are distinguished by their minima, so every set
    partition is generated exactly once.
    """
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    count = 0

    def extend(placed: int, blocks: int):
        nonlocal count
        if blocks > k or blocks + (n - placed) < k:
            return
        if placed == n:
            count += blocks == k
            return
        extend(placed + 1, blocks + 1)
        for _ in range(blocks):
            extend(placed + 1, blocks)

    extend(0, 0)
    return count


@dataclass(frozen=True)
class FullPlacement:
    """One rook per column, each upper or lower, with all rows distinct."""

    n: int
    rooks: tuple[tuple[int, str, int], ...]  # (column, "upper"|"lower", position)

    def __post_init__(self):
        object.__setattr__(self, "rooks", tuple(sorted(self.rooks)))
        if [c for c, _, _ in self.rooks] != list(range(1, self.n + 1)):
            raise DomainError("need exactly one rook per column")
        uppers = [(c, p) for c, region, p in self.rooks if region == "upper"]
        lowers = [(c, p) for c, region, p in self.rooks if region == "lower"]
        if len(uppers) + len(lowers) != self.n:
            raise DomainError("rook regions must be 'upper' or 'lower'")
        if any(not 1 <= h <= c - 1 for c, h in uppers):
            raise DomainError("upper rook outside the staircase")
        if any(r < 1 for _, r in lowers):
            raise DomainError("lower rows start at 1")
        for rows in ([h for _, h in uppers], [r for _, r in lowers]):
            if len(set(rows)) != len(rows):
                raise DomainError("two rooks share a row")

    def statistics(self) -> tuple[int, int]:
        """(inv, max): free-cell count and the deepest lower-row index.

        The cell universe is the whole upper staircase plus lower rows
        1..max in every column, which keeps the count finite.
        """
        upper_by_col = {c: p for c, region, p in self.rooks if region == "upper"}
        upper_by_height = {p: c for c, region, p in self.rooks if region == "upper"}
        lower_by_col = {c: p for c, region, p in self.rooks if region == "lower"}
        lower_by_row = {p: c for c, region, p in self.rooks if region == "lower"}
        deepest = max(lower_by_col.values(), default=0)
        free = 0
        for col in range(2, self.n + 1):
            for height in range(1, col):
                rook_h = upper_by_col.get(col)
                if rook_h is not None and rook_h >= height:
                    continue
                rook_c = upper_by_height.get(height)
                if rook_c is not None and rook_c <= col:
                    continue
                free += 1
        for col in range(1, self.n + 1):
            if col in upper_by_col:
                continue  # an upper rook attacks its entire lower column
            own_row = lower_by_col.get(col)
            for row in range(1, deepest + 1):
                if own_row is not None and own_row <= row:
                    continue  # occupied or attacked from above in the column
                rook_c = lower_by_row.get(row)
                if rook_c is not None and rook_c <= col:
                    continue
                free += 1
        return free, deepest


def full_placements(n: int, max_depth: int):
    """All full placements whose deepest lower rook is at most max_depth.

    Columns taking upper rooks are chosen first, then the remaining
    columns receive pairwise distinct lower rows from 1..max_depth.
    """
    columns = list(range(1, n + 1))
    for upper_cols in _powerset(columns[1:]):  # column 1 has no upper cells
        lower_cols = [c for c in columns if c not in set(upper_cols)]
        for heights in _distinct_heights(upper_cols):
            upper = tuple((c, "upper", h) for c, h in zip(upper_cols, heights))
            for rows in itertools.permutations(range(1, max_depth + 1), len(lower_cols)):
                yield FullPlacement(
                    n, upper + tuple((c, "lower", r) for c, r in zip(lower_cols, rows))
                )


def _powerset(items):
    for size in range(len(items) + 1):
        yield from itertools.combinations(items, size)


def _distinct_heights(cols):
    """Assignments of pairwise distinct heights, one per staircase column."""
    if not cols:
        yield ()
        return
    ranges = [range(1, c) for c in cols]
    for combo in itertools.product(*ranges):
        if len(set(combo)) == len(combo):
            yield combo


def full_board_series(n: int, order: int) -> PowerSeries:
    """Sum of q^inv t^max over full placements with max at most the order."""
    if n < 0 or order < 0:
        raise DomainError("need n >= 0 and order >= 0")
    coeffs = [ZERO] * (order + 1)
    if n == 0:
        coeffs[0] = ONE
        return PowerSeries(coeffs)
    for placement in full_placements(n, order):
        inv, deepest = placement.statistics()
        coeffs[deepest] = coeffs[deepest] + Q**inv
    return PowerSeries(coeffs)


def maj_des_series(n: int, order: int) -> PowerSeries:
    """Permutation side: sum over S_n of q^maj t^(des+1) over the n-fold product
    of (1 - t q^i) for i = 1..n, expanded exactly to the requested order."""
    from .combinatorics import descents, permutations

    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    numerator = [ZERO] * (order + 1)
    for sigma in permutations(n):
        ds = descents(sigma)
        power = len(ds) + 1
        if power <= order:
            numerator[power] = numerator[power] + Q ** sum(ds)
    denominator = PowerSeries.one(order)
    for i in range(1, n + 1):
        denominator = denominator * PowerSeries([ONE, -(Q**i)], order=order)
    return PowerSeries(numerator) * denominator.inverse()


def stirling_side_series(n: int, order: int, printed_range: bool = False) -> PowerSeries:
    """Placement side: sum over k of S_(n,k)(q) [k]_q! t^k over a q-product.

    The denominator product runs i = 1..k by default, which is the variant
    the triple identity validates; printed_range=True switches to i = 0..k
    for comparison, which already breaks the n = 1 case.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    total = PowerSeries.zero(order)
    for k in range(0, n + 1):
        if k > order:
            break
        coeff = stirling_q(n, k) * q_factorial(k)
        if coeff.is_zero():
            continue
        term = PowerSeries.monomial(coeff, k, order)
        start = 0 if printed_range else 1
        denominator = PowerSeries.one(order)
        for i in range(start, k + 1):
            denominator = denominator * PowerSeries([ONE, -(Q**i)], order=order)
        total = total + term * denominator.inverse()
    return total
