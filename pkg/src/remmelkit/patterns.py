"""Quadrant marked mesh patterns, consecutive patterns, and Fishburn avoidance.

Everything here is enumerative: series coefficients come from walking S_n
and counting statistics, and the closed forms they are compared against
live in the series module.  Alternating conventions are calibrated against
those closed forms: even length means up-down and odd length means
down-up.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import (
    Permutation,
    check_permutation,
    descents,
    enumeration_cap,
    is_downup,
    is_updown,
    left_to_right_minima,
    permutations,
)
from .errors import DomainError, IdentityViolationError
from .polynomials import MultiPoly, ONE, Q, X, Y, Z, ZERO
from .series import PowerSeries, secant_qt


# -- quadrant marked mesh patterns ----------------------------------------------


@dataclass(frozen=True)
class MarkedMeshPattern:
    """Quadrant thresholds (a, b, c, d) for NE, NW, SW, SE respectively."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise DomainError("quadrant thresholds must be nonnegative")


def mmp_match(sigma, i: int, pattern: MarkedMeshPattern) -> bool:
    """Does position i match?  Counts the other points in the four open
    quadrants centered at (i, sigma_i) and compares against the thresholds."""
    sigma = check_permutation(sigma)
    n = len(sigma)
    if not 1 <= i <= n:
        raise DomainError(f"position {i} outside 1..{n}")
    pivot = sigma[i - 1]
    ne = nw = sw = se = 0
    for j in range(1, n + 1):
        if j == i:
            continue
        value = sigma[j - 1]
        if j > i:
            if value > pivot:
                ne += 1
            else:
                se += 1
        else:
            if value > pivot:
                nw += 1
            else:
                sw += 1
    return (
        ne >= pattern.a and nw >= pattern.b and sw >= pattern.c and se >= pattern.d
    )


def mmp_statistic(sigma, pattern: MarkedMeshPattern) -> int:
    """Number of positions of sigma matching the pattern."""
    sigma = check_permutation(sigma)
    return sum(1 for i in range(1, len(sigma) + 1) if mmp_match(sigma, i, pattern))


def _mmp_1000(sigma) -> int:
    """Positions with a later larger element (the MMP(1,0,0,0) statistic)."""
    count = 0
    running_max = 0
    for value in reversed(sigma):
        if value < running_max:
            count += 1
        else:
            running_max = value
    return count


def alternating_mmp_series(parity: str, order: int) -> PowerSeries:
    """Exponential series of the MMP(1,0,0,0) statistic over alternating
    permutations: up-down of even length, or down-up of odd length.

    The t^n coefficient is (1/n!) times the q-count over the alternating
    permutations of S_n of the chosen parity; the opposite parity
    contributes nothing.
    """
    if parity not in ("even", "odd"):
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    cap = enumeration_cap()
    if order > cap:
        raise DomainError(f"order {order} exceeds enumeration budget {cap}")
    coeffs = [ZERO] * (order + 1)
    if parity == "even":
        coeffs[0] = ONE
    sizes = range(2, order + 1, 2) if parity == "even" else range(1, order + 1, 2)
    keep = is_updown if parity == "even" else is_downup
    for n in sizes:
        counts: Counter = Counter()
        for sigma in permutations(n):
            if keep(sigma):
                counts[_mmp_1000(sigma)] += 1
        poly = ZERO
        for power, count in sorted(counts.items()):
            poly = poly + Q**power * count
        coeffs[n] = poly * Fraction(1, factorial(n))
    return PowerSeries(coeffs)


def alternating_even_closed_form(order: int) -> PowerSeries:
    """sec(q t)^(1/q)."""
    return secant_qt(order).q_power()


def alternating_odd_closed_form(order: int) -> PowerSeries:
    """Integral from 0 to t of sec(q z)^(1 + 1/q)."""
    sec = secant_qt(order)
    return (sec * sec.q_power()).integrate(max_order=order)


# -- classical and consecutive occurrences -----------------------------------------


def _pattern_of(values) -> tuple[int, ...]:
    ranks = sorted(range(len(values)), key=lambda i: values[i])
    out = [0] * len(values)
    for rank, i in enumerate(ranks, start=1):
        out[i] = rank
    return tuple(out)


def occurrences(sigma, tau, mode: str = "classical") -> int:
    """Count occurrences of the pattern tau in sigma.

    classical counts order-isomorphic subsequences; consecutive counts
    order-isomorphic contiguous windows.
    """
    sigma = check_permutation(sigma)
    tau = check_permutation(tau)
    k, n = len(tau), len(sigma)
    if k > n:
        raise DomainError(f"pattern longer than the word: {k} > {n}")
    if mode == "classical":
        return sum(
            1
            for combo in itertools.combinations(sigma, k)
            if _pattern_of(combo) == tau
        )
    if mode == "consecutive":
        return sum(
            1 for i in range(n - k + 1) if _pattern_of(sigma[i : i + k]) == tau
        )
    raise DomainError(f"unknown mode {mode!r}")


def _window_avoids(sigma, tau) -> bool:
    k = len(tau)
    return all(
        _pattern_of(sigma[i : i + k]) != tau for i in range(len(sigma) - k + 1)
    )


# -- consecutive-pattern generating function ------------------------------------------


def _check_lrmin_pattern(tau) -> Permutation:
    tau = check_permutation(tau)
    if not tau or tau[0] != 1 or len(descents(tau)) != 1:
        raise DomainError(
            f"pattern {tau} must start with 1 and have exactly one descent"
        )
    return tau


def lrmin_des_series(tau, order: int) -> PowerSeries:
    """Exponential series of x^LRmin y^(1+des) over consecutive-tau-avoiders.

    The pattern must start with 1 and have exactly one descent.  The
    empty permutation contributes the constant term 1.
    """
    tau = _check_lrmin_pattern(tau)
    cap = enumeration_cap()
    if order > cap:
        raise DomainError(f"order {order} exceeds enumeration budget {cap}")
    coeffs: list[MultiPoly] = [ONE]
    for n in range(1, order + 1):
        counts: Counter = Counter()
        for sigma in permutations(n):
            if _window_avoids(sigma, tau):
                key = (left_to_right_minima(sigma), len(descents(sigma)) + 1)
                counts[key] += 1
        poly = ZERO
        for (lrmin, des1), count in sorted(counts.items()):
            poly = poly + X**lrmin * Y**des1 * count
        coeffs.append(poly * Fraction(1, factorial(n)))
    return PowerSeries(coeffs)


def extract_U(tau, order: int) -> list[MultiPoly]:
    """Recover the y-coefficient sequence from the avoider series.

    The avoider series must be an x-th power of an x-free series: its log
    divides exactly by x and the quotient carries no x.  The returned list
    holds n! times the t^n coefficients of exp(-log(series)/x) for
    n = 1..order; x-dependence after the division raises an identity
    violation.
    """
    series = lrmin_des_series(tau, order)
    logf = series.log()
    reduced = []
    for k, coeff in enumerate(logf.coeffs):
        if coeff.is_zero():
            reduced.append(coeff)
            continue
        try:
            quotient = coeff.divexact(X)
        except DomainError:
            raise IdentityViolationError(
                f"log coefficient of t^{k} is not divisible by x: {coeff}"
            ) from None
        if quotient.degree_in("x") > 0:
            raise IdentityViolationError(
                f"log coefficient of t^{k} is not linear in x: {coeff}"
            )
        reduced.append(-quotient)
    inner = PowerSeries(reduced).exp()
    return [inner.coeff(n) * factorial(n) for n in range(1, order + 1)]


# -- the adjacency-restricted 231 pattern -----------------------------------------------


def avoids_fishburn(sigma) -> bool:
    """True iff sigma has no 231 occurrence whose first two positions are
    adjacent and whose first value exceeds the last by exactly one."""
    n = len(sigma)
    position = [0] * (n + 1)
    for idx, value in enumerate(sigma, start=1):
        position[value] = idx
    for p in range(1, n):
        value = sigma[p - 1]
        if value >= 2 and value < sigma[p] and position[value - 1] > p + 1:
            return False
    return True


def max_adjacent_value_run(sigma) -> int:
    """Longest run sigma_i, sigma_i - 1, sigma_i - 2, ... in adjacent positions."""
    n = len(sigma)
    if n == 0:
        return 0
    best = 1
    current = 1
    for i in range(1, n):
        if sigma[i] == sigma[i - 1] - 1:
            current += 1
            best = max(best, current)
        else:
            current = 1
    return best


def leftmost_decreasing_run(sigma) -> int:
    """Length of the maximal strictly decreasing prefix."""
    n = len(sigma)
    if n == 0:
        return 0
    run = 1
    while run < n and sigma[run] < sigma[run - 1]:
        run += 1
    return run


@dataclass(frozen=True)
class FishburnCensus:
    """Aggregated statistics over the avoiders in one symmetric group."""

    n: int
    total: int
    by_value_run: dict[int, int]
    by_leftmost_run: dict[int, int]
    joint: dict[tuple[int, int], int]


@lru_cache(maxsize=None)
def fishburn_census(n: int) -> FishburnCensus:
    """Walk S_n, keep the avoiders, and tabulate both run statistics."""
    cap = enumeration_cap()
    if n > cap:
        raise DomainError(f"census size {n} exceeds enumeration budget {cap}")
    if n < 0:
        raise DomainError(f"census size must be >= 0, got {n}")
    by_value: Counter = Counter()
    by_leftmost: Counter = Counter()
    joint: Counter = Counter()
    total = 0
    for sigma in permutations(n):
        if avoids_fishburn(sigma):
            total += 1
            value_run = max_adjacent_value_run(sigma)
            left_run = leftmost_decreasing_run(sigma)
            by_value[value_run] += 1
            by_leftmost[left_run] += 1
            joint[(value_run, left_run)] += 1
    return FishburnCensus(n, total, dict(by_value), dict(by_leftmost), dict(joint))


# -- reference generating functions ----------------------------------------------------


def fishburn_gf(order: int) -> PowerSeries:
    """Sum over n of the product of (1 - (1-t)^i), i = 1..n, expanded.

    Each factor vanishes at t = 0, so summands with n beyond the order
    contribute nothing.
    """
    one = PowerSeries.one(order)
    base = PowerSeries([ONE, -1], order=order)  # 1 - t
    total = PowerSeries.zero(order)
    product = one
    power = one
    for _ in range(0, order + 1):
        total = total + product
        power = power * base
        product = product * (one - power)
    return total


def fishburn_k_gf(k: int, order: int) -> PowerSeries:
    """Same shape with ratio (1-t)/(1-t^k) in place of 1-t."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    one = PowerSeries.one(order)
    tk = [ZERO] * (order + 1)
    tk[0] = ONE
    if k <= order:
        tk[k] = -ONE
    ratio = PowerSeries([ONE, -1], order=order) * PowerSeries(tk).inverse()
    total = PowerSeries.zero(order)
    product = one
    power = one
    for _ in range(0, order + 1):
        total = total + product
        power = power * ratio
        product = product * (one - power)
    return total


def leftmost_run_gf(order: int) -> PowerSeries:
    """Sum over n of the product of (1 - (1-t)^(i-1) (1-zt)), i = 1..n.

    The variable z marks the conjectured leftmost-decreasing-run length.
    """
    one = PowerSeries.one(order)
    base = PowerSeries([ONE, -1], order=order)
    zfactor = PowerSeries([ONE, -Z], order=order)
    total = PowerSeries.zero(order)
    product = one
    power = zfactor
    for _ in range(0, order + 1):
        total = total + product
        product = product * (one - power)
        power = power * base
    return total


def reference_gf(kind: str, order: int, k: int | None = None) -> PowerSeries:
    """Dispatch to the named product generating function."""
    if kind == "fishburn":
        return fishburn_gf(order)
    if kind == "fishburn_k":
        if k is None:
            raise DomainError("fishburn_k needs the run bound k")
        return fishburn_k_gf(k, order)
    if kind == "leftmost_conjecture":
        return leftmost_run_gf(order)
    raise DomainError(f"unknown generating function {kind!r}")
