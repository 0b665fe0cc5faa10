"""Truncated formal power series in t with polynomial coefficients.

The single series variable is t; q, x, y, z live in the coefficients.  A
series of order N stores the coefficients of t^0 .. t^N.  Binary operations
truncate to the smaller order of the two operands.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DomainError
from .polynomials import MultiPoly, ONE, Q, X, ZERO

DEFAULT_ORDER = 12

# Hard ceiling for integrate(), which is the only operation that grows order.
MAX_ORDER = 64


class PowerSeries:
    """Immutable truncated power series with MultiPoly coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        items = [c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise DomainError("series order must be nonnegative")
            items = items[: order + 1]
            items.extend([ZERO] * (order + 1 - len(items)))
        if not items:
            raise DomainError("a series needs at least the t^0 coefficient")
        object.__setattr__(self, "_coeffs", tuple(items))

    # -- construction ----------------------------------------------------------

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([ONE], order=order)

    @classmethod
    def t(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([ZERO, ONE], order=order)

    @classmethod
    def monomial(cls, coeff, power: int, order: int = DEFAULT_ORDER) -> "PowerSeries":
        coeffs = [ZERO] * (power) + [coeff]
        return cls(coeffs, order=order)

    # -- accessors ---------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[MultiPoly, ...]:
        return self._coeffs

    def coeff(self, k: int) -> MultiPoly:
        """Coefficient of t^k; asking beyond the truncation order is an error."""
        if not 0 <= k <= self.order:
            raise DomainError(f"coefficient t^{k} beyond truncation order {self.order}")
        return self._coeffs[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise DomainError("cannot extend a truncated series")
        return PowerSeries(self._coeffs, order=order)

    # -- ring operations -----------------------------------------------------------

    @staticmethod
    def _coerce_scalar(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries(
                [self._coeffs[k] + other._coeffs[k] for k in range(n + 1)]
            )
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        coeffs = list(self._coeffs)
        coeffs[0] = coeffs[0] + scalar
        return PowerSeries(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            return self + (-other)
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        return self + (-scalar)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            out = [ZERO] * (n + 1)
            for i in range(n + 1):
                a = self._coeffs[i]
                if a.is_zero():
                    continue
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return PowerSeries(out)
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        return PowerSeries([c * scalar for c in self._coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def agrees(self, other: "PowerSeries", through: int | None = None) -> bool:
        """Coefficientwise equality through min(orders) or an explicit bound."""
        n = min(self.order, other.order)
        if through is not None:
            if through > n:
                raise DomainError(f"cannot compare through t^{through}, order {n}")
            n = through
        return all(self._coeffs[k] == other._coeffs[k] for k in range(n + 1))

    # -- functional calculus -----------------------------------------------------

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse, requiring a nonzero constant t^0 coefficient."""
        c0 = self._coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise DomainError(
                f"series inverse needs a nonzero constant term, got {c0}"
            )
        unit = c0.as_fraction()
        f = self if unit == 1 else PowerSeries([c / unit for c in self._coeffs])
        n = self.order
        out = [ONE] + [ZERO] * n
        for k in range(1, n + 1):
            acc = ZERO
            for i in range(1, k + 1):
                fi = f._coeffs[i]
                if not fi.is_zero():
                    acc = acc + fi * out[k - i]
            out[k] = -acc
        if unit != 1:
            out = [c / unit for c in out]
        return PowerSeries(out)

    def exp(self) -> "PowerSeries":
        """exp of a series with zero constant term."""
        if not self._coeffs[0].is_zero():
            raise DomainError("series exp needs constant term 0")
        n = self.order
        out = [ONE] + [ZERO] * n
        for k in range(1, n + 1):
            acc = ZERO
            for i in range(1, k + 1):
                fi = self._coeffs[i]
                if not fi.is_zero():
                    acc = acc + (i * fi) * out[k - i]
            out[k] = acc / k
        return PowerSeries(out)

    def log(self) -> "PowerSeries":
        """log of a series with constant term 1."""
        if self._coeffs[0] != ONE:
            raise DomainError("series log needs constant term 1")
        n = self.order
        out = [ZERO] * (n + 1)
        for k in range(1, n + 1):
            acc = ZERO
            for i in range(1, k):
                hi = out[i]
                if not hi.is_zero():
                    acc = acc + (i * hi) * self._coeffs[k - i]
            out[k] = self._coeffs[k] - acc / k
        return PowerSeries(out)

    def integrate(self, max_order: int = MAX_ORDER) -> "PowerSeries":
        """Term-by-term integral from 0; raises the order by one, capped."""
        order = min(self.order + 1, max_order)
        out = [ZERO] * (order + 1)
        for k in range(min(self.order, order - 1) + 1):
            out[k + 1] = self._coeffs[k] / (k + 1)
        return PowerSeries(out)

    def q_power(self) -> "PowerSeries":
        """The q-th root f^(1/q), defined as exp(log(f)/q).

        Requires constant term 1 and every coefficient of log(f) divisible
        by q; non-divisibility signals a wrongly scaled input.
        """
        logf = self.log()
        divided = []
        for k, c in enumerate(logf._coeffs):
            try:
                divided.append(c.divexact(Q) if not c.is_zero() else c)
            except DomainError:
                raise DomainError(
                    f"coefficient of t^{k} in log is not divisible by q: {c}"
                ) from None
        return PowerSeries(divided).exp()

    # -- coefficient transforms -----------------------------------------------------

    def map_coeffs(self, fn) -> "PowerSeries":
        return PowerSeries([fn(c) for c in self._coeffs])

    def substitute(self, **values) -> "PowerSeries":
        """Specialise coefficient variables, e.g. series.substitute(q=1)."""
        return self.map_coeffs(lambda c: c.substitute(**values))

    def scale_t(self, factor) -> "PowerSeries":
        """Substitute t -> factor * t for a polynomial or rational factor."""
        factor = self._coerce_scalar(factor)
        if factor is None:
            raise DomainError("scale_t needs a polynomial or rational factor")
        out = []
        power = ONE
        for c in self._coeffs:
            out.append(c * power)
            power = power * factor
        return PowerSeries(out)

    def divexact_coeffs(self, divisor: MultiPoly) -> "PowerSeries":
        """Divide every coefficient exactly by a fixed polynomial."""
        return self.map_coeffs(lambda c: c.divexact(divisor) if not c.is_zero() else c)

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        pieces = []
        for k, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            body = str(c)
            if k > 0 and not (c.is_constant() or len(c.terms) == 1):
                body = f"({body})"
            if k == 0:
                pieces.append(body)
            elif k == 1:
                pieces.append(f"{body}*t" if body != "1" else "t")
            else:
                pieces.append(f"{body}*t^{k}" if body != "1" else f"t^{k}")
        head = " + ".join(pieces) if pieces else "0"
        return f"{head} + O(t^{self.order + 1})"

    def __repr__(self) -> str:
        return f"PowerSeries({self})"


# -- stock series -------------------------------------------------------------------


def geometric(ratio, order: int = DEFAULT_ORDER) -> PowerSeries:
    """1/(1 - ratio*t) as an explicit series."""
    ratio = PowerSeries._coerce_scalar(ratio)
    if ratio is None:
        raise DomainError("geometric ratio must be a polynomial or rational")
    out = []
    power = ONE
    for _ in range(order + 1):
        out.append(power)
        power = power * ratio
    return PowerSeries(out)


def cosine(order: int = DEFAULT_ORDER) -> PowerSeries:
    """cos t with exact rational Taylor coefficients."""
    out = [ZERO] * (order + 1)
    for k in range(0, order + 1, 2):
        out[k] = MultiPoly.const(Fraction((-1) ** (k // 2), factorial(k)))
    return PowerSeries(out)


def secant_qt(order: int = DEFAULT_ORDER) -> PowerSeries:
    """sec(q t), built as the series inverse of cos(q t)."""
    return cosine(order).scale_t(Q).inverse()


def exp_xminus1_t(order: int = DEFAULT_ORDER) -> PowerSeries:
    """exp((x - 1) t)."""
    return PowerSeries.monomial(X - 1, 1, order).exp()


def pochhammer_zx(k: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """The k-factor product of (1 - (t - t*x) * q^i) for i = 0 .. k-1.

    Each factor is 1 + (x-1)*q^i*t, so the t-degree of the full product
    is k; the series records it truncated at the requested order.
    """
    if k < 0:
        raise DomainError(f"pochhammer factor count must be >= 0, got {k}")
    out = PowerSeries.one(order)
    for i in range(k):
        out = out * PowerSeries([ONE, (X - 1) * Q**i], order=order)
    return out
