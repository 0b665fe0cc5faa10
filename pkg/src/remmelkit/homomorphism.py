"""Ring homomorphisms on elementary generators, pushed through to h and series.

A homomorphism is pinned down by its values on the elementary generators
e_1, e_2, ...; it then reaches h_n through the signed brick expansion and
reaches the full generating function through the reciprocal identity
between the h and e series.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinatorics import partitions
from .errors import DomainError
from .polynomials import MultiPoly, ONE, Q, X, ZERO, parse_poly, q_binomial
from .series import PowerSeries, exp_xminus1_t, pochhammer_zx


@dataclass(frozen=True)
class EHomomorphism:
    """Values on the elementary generators, index n holding the image of e_n."""

    values: tuple[MultiPoly, ...]

    def __post_init__(self):
        if not self.values or self.values[0] != ONE:
            raise DomainError("a homomorphism must send e_0 to 1")

    @property
    def bound(self) -> int:
        """Largest n for which the image of e_n is stored."""
        return len(self.values) - 1

    def __call__(self, n: int) -> MultiPoly:
        if not 0 <= n <= self.bound:
            raise DomainError(f"e_{n} outside the stored range 0..{self.bound}")
        return self.values[n]


def orderings_count(lam) -> int:
    """Number of distinct ways to order the parts of lam.

    This is the brick tabloid count for a single row, since a brick
    splitting of one row is exactly an ordering of the brick lengths.
    """
    mult: dict[int, int] = {}
    for p in lam.parts:
        mult[p] = mult.get(p, 0) + 1
    out = factorial(lam.length)
    for m in mult.values():
        out //= factorial(m)
    return out


def apply_to_h(phi: EHomomorphism, n: int) -> MultiPoly:
    """Image of h_n: the signed sum over partitions of products of e-images.

    Each partition lam of n contributes (-1)^(n - length) times the number
    of orderings of its parts times the product of the e_part images.
    """
    if n > phi.bound:
        raise DomainError(f"h_{n} needs e-images up to {n}, have {phi.bound}")
    total = ZERO
    for lam in partitions(n):
        term = MultiPoly.const(orderings_count(lam))
        for part in lam.parts:
            term = term * phi.values[part]
        if (n - lam.length) % 2:
            term = -term
        total = total + term
    return total


def phi_series(phi: EHomomorphism, order: int) -> PowerSeries:
    """Generating function for the h-images, t^n carrying the image of h_n.

    Built as the reciprocal of the signed e-image series; coefficient n
    equals apply_to_h(phi, n) for every n up to the order.
    """
    if order > phi.bound:
        raise DomainError(f"series order {order} exceeds stored range {phi.bound}")
    signed = [
        phi.values[n] if n % 2 == 0 else -phi.values[n] for n in range(order + 1)
    ]
    return PowerSeries(signed).inverse()


# -- stock homomorphisms ---------------------------------------------------------


def eulerian_phi(bound: int) -> EHomomorphism:
    """e_n -> (-1)^(n-1) (x-1)^(n-1) / n!, the descent-counting specialisation.

    The sign (-1)^(n-1) is forced: the (-1)^n variant that sometimes
    appears in print would send e_1 to -1 and make the degree-1 descent
    polynomial equal -1 instead of 1; the verification suite pins the
    validated sign against the brute-force descent count.
    """
    if bound < 1:
        raise DomainError(f"need bound >= 1, got {bound}")
    values = [ONE]
    for n in range(1, bound + 1):
        sign = 1 if (n - 1) % 2 == 0 else -1
        values.append((X - 1) ** (n - 1) * Fraction(sign, factorial(n)))
    return EHomomorphism(tuple(values))


def words_phi(k: int, bound: int) -> EHomomorphism:
    """e_n -> (-1)^(n-1) q^C(n,2) [k choose n]_q (x-1)^(n-1), zero past n = k."""
    if k < 1 or bound < 1:
        raise DomainError(f"need k >= 1 and bound >= 1, got k={k}, bound={bound}")
    values = [ONE]
    for n in range(1, bound + 1):
        if n > k:
            values.append(ZERO)
            continue
        sign = 1 if (n - 1) % 2 == 0 else -1
        values.append(
            MultiPoly.const(sign) * Q ** comb(n, 2) * q_binomial(k, n) * (X - 1) ** (n - 1)
        )
    return EHomomorphism(tuple(values))


def trivial_phi(bound: int) -> EHomomorphism:
    """e_1 -> 1 and e_n -> 0 for n >= 2; its h-series is the geometric series."""
    return EHomomorphism((ONE, ONE) + (ZERO,) * (bound - 1))


# -- closed forms -----------------------------------------------------------------


def eulerian_closed_form(order: int) -> PowerSeries:
    """(x-1)/(x - exp(t(x-1))) expanded exactly.

    Numerator and denominator are both divisible by x-1; dividing through
    leaves a series with constant term 1 that inverts directly.
    """
    expanded = exp_xminus1_t(order)
    denom = (-(expanded - 1)).divexact_coeffs(X - 1) + 1
    return denom.inverse()


def words_closed_form(k: int, order: int) -> PowerSeries:
    """(x-1)/(x - product of (1 - (t - tx) q^i) for i < k) expanded exactly."""
    poch = pochhammer_zx(k, order)
    denom = (-(poch - X)).divexact_coeffs(X - 1)
    return denom.inverse()


# -- user-supplied homomorphisms ---------------------------------------------------


def phi_from_json(payload) -> EHomomorphism:
    """Build a homomorphism from {"values": ["1", "-1/2*(x-1)", ...]}.

    The first string is the image of e_0 and must read as 1.
    """
    if isinstance(payload, str):
        payload = json.loads(payload)
    if not isinstance(payload, dict) or "values" not in payload:
        raise DomainError('homomorphism JSON must be {"values": [...]}')
    strings = payload["values"]
    if not isinstance(strings, list) or not all(isinstance(s, str) for s in strings):
        raise DomainError("homomorphism values must be a list of strings")
    return EHomomorphism(tuple(parse_poly(s) for s in strings))
