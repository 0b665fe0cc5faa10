"""Sparse exact-rational polynomials in the fixed variables q, x, y, z.

A polynomial is a map from exponent 4-tuples (one entry per variable, in the
order q, x, y, z) to nonzero Fraction coefficients.  All arithmetic is exact;
nothing here ever touches floating point.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from math import comb

from .errors import DomainError

VARIABLES = ("q", "x", "y", "z")

Exponent = tuple[int, int, int, int]

_ZERO_EXP: Exponent = (0, 0, 0, 0)


class MultiPoly:
    """Immutable polynomial in q, x, y, z with Fraction coefficients.

    Zero coefficients are never stored; two polynomials are equal iff their
    term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                e = tuple(exp)
                if len(e) != 4 or any(k < 0 or not isinstance(k, int) for k in e):
                    raise DomainError(f"bad exponent vector {e!r}")
                c = clean.get(e, _F0) + Fraction(coeff)
                if c:
                    clean[e] = c
                elif e in clean:
                    del clean[e]
        object.__setattr__(self, "_terms", clean)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def const(cls, value) -> "MultiPoly":
        return cls({_ZERO_EXP: Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        if name not in VARIABLES:
            raise DomainError(f"unknown variable {name!r}")
        exp = [0, 0, 0, 0]
        exp[VARIABLES.index(name)] = 1
        return cls({tuple(exp): Fraction(1)})

    # -- predicates and accessors --------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or self._terms.keys() == {_ZERO_EXP}

    def constant_value(self) -> Fraction:
        """The coefficient of the empty monomial (the term free of variables)."""
        return self._terms.get(_ZERO_EXP, _F0)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return self.constant_value()

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def degree_in(self, name: str) -> int:
        i = VARIABLES.index(name)
        return max((e[i] for e in self._terms), default=0)

    def coefficient(self, exponent) -> Fraction:
        return self._terms.get(tuple(exponent), _F0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly({_ZERO_EXP: Fraction(other)})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, _F0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
                s = out.get(e, _F0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise DomainError("polynomial powers must be nonnegative integers")
        result = ONE
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero")
            return _raw({e: c / other for e, c in self._terms.items()})
        if isinstance(other, MultiPoly):
            return self.divexact(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- division and substitution --------------------------------------------

    def divexact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises DomainError on a nonzero remainder.

        Single-divisor reduction with respect to the graded lexicographic
        order, which terminates because the leading monomial of the running
        remainder strictly decreases.
        """
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero():
            raise DomainError("division by the zero polynomial")
        if divisor.is_constant():
            return self / divisor.constant_value()
        d_lead = max(divisor._terms, key=_grlex_key)
        d_coeff = divisor._terms[d_lead]
        rem = dict(self._terms)
        quo: dict[Exponent, Fraction] = {}
        while rem:
            lead = max(rem, key=_grlex_key)
            diff = tuple(a - b for a, b in zip(lead, d_lead))
            if any(k < 0 for k in diff):
                raise DomainError("polynomial division leaves a remainder")
            factor = rem[lead] / d_coeff
            quo[diff] = factor
            for e, c in divisor._terms.items():
                shifted = (e[0] + diff[0], e[1] + diff[1], e[2] + diff[2], e[3] + diff[3])
                s = rem.get(shifted, _F0) - factor * c
                if s:
                    rem[shifted] = s
                elif shifted in rem:
                    del rem[shifted]
        return _raw(quo)

    def substitute(self, **values) -> "MultiPoly":
        """Replace named variables by exact values or polynomials.

        Example: p.substitute(q=1) specialises q; other variables survive.
        """
        replacements: list[tuple[int, MultiPoly]] = []
        for name, value in values.items():
            if name not in VARIABLES:
                raise DomainError(f"unknown variable {name!r}")
            value = self._coerce(value)
            if value is None:
                raise DomainError(f"cannot substitute {name}={values[name]!r}")
            replacements.append((VARIABLES.index(name), value))
        result = ZERO
        for e, c in sorted(self._terms.items()):
            term = MultiPoly.const(c)
            residual = list(e)
            for idx, value in replacements:
                power = residual[idx]
                residual[idx] = 0
                if power:
                    term = term * value**power
            mono = _raw({tuple(residual): Fraction(1)})
            result = result + term * mono
        return result

    # -- rendering -------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms ordered by total degree, then by exponent vector (q before x)."""
        return sorted(
            self._terms.items(),
            key=lambda item: (sum(item[0]), tuple(-k for k in item[0])),
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARIABLES, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def json_terms(self) -> dict[str, str]:
        """Exponent-vector keyed coefficient map, "eq,ex,ey,ez" -> "num/den"."""
        return {
            ",".join(map(str, e)): f"{c.numerator}/{c.denominator}"
            for e, c in self.sorted_terms()
        }


def _raw(terms: dict[Exponent, Fraction]) -> MultiPoly:
    poly = MultiPoly.__new__(MultiPoly)
    object.__setattr__(poly, "_terms", terms)
    return poly


_F0 = Fraction(0)

ZERO = MultiPoly()
ONE = MultiPoly.const(1)
Q = MultiPoly.variable("q")
X = MultiPoly.variable("x")
Y = MultiPoly.variable("y")
Z = MultiPoly.variable("z")


def _grlex_key(e: Exponent):
    return (sum(e), e)


# -- parsing -------------------------------------------------------------------

_ATOMS = {"q": Q, "x": X, "y": Y, "z": Z}


def parse_poly(text: str) -> MultiPoly:
    """Read a polynomial from a string such as "-1/2*(x-1)" or "q^2*x + 1".

    Accepts +, -, *, /, parentheses and integer powers written ^ or **.
    Division must be exact (by a constant or an exact polynomial factor).
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"unreadable polynomial {text!r}: {exc.msg}") from None
    return _eval_node(tree.body, text)


def _eval_node(node: ast.expr, text: str) -> MultiPoly:
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, text)
        right = _eval_node(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.is_constant():
                value = right.as_fraction()
                if value == 0:
                    raise DomainError(f"division by zero in {text!r}")
                return left / value
            return left.divexact(right)
        if isinstance(node.op, ast.Pow):
            if not right.is_constant() or right.as_fraction().denominator != 1:
                raise DomainError(f"non-integer power in {text!r}")
            return left ** int(right.as_fraction())
        raise DomainError(f"unsupported operator in {text!r}")
    if isinstance(node, ast.UnaryOp):
        operand = _eval_node(node.operand, text)
        if isinstance(node.op, ast.USub):
            return -operand
        if isinstance(node.op, ast.UAdd):
            return operand
        raise DomainError(f"unsupported operator in {text!r}")
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int):
            return MultiPoly.const(node.value)
        raise DomainError(f"non-integer literal {node.value!r} in {text!r}")
    if isinstance(node, ast.Name):
        if node.id in _ATOMS:
            return _ATOMS[node.id]
        raise DomainError(f"unknown name {node.id!r} in {text!r}")
    raise DomainError(f"unsupported syntax in {text!r}")


# -- q-analogues -----------------------------------------------------------------


def q_int(n: int) -> MultiPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise DomainError(f"[n]_q needs n >= 0, got {n}")
    return _raw({(i, 0, 0, 0): Fraction(1) for i in range(n)})


def q_factorial(n: int) -> MultiPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    if n < 0:
        raise DomainError(f"[n]_q! needs n >= 0, got {n}")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def q_binomial(k: int, n: int) -> MultiPoly:
    """Gaussian binomial: [k]_q! / ([n]_q! [k-n]_q!), requiring 0 <= n <= k.

    The factorial ratio always divides exactly, so the result is a
    polynomial with nonnegative integer coefficients.
    """
    if not 0 <= n <= k:
        raise DomainError(f"q-binomial needs 0 <= n <= k, got k={k}, n={n}")
    return q_factorial(k).divexact(q_factorial(n) * q_factorial(k - n))


def binomial(n: int, k: int) -> int:
    """Ordinary binomial coefficient, 0 outside the Pascal triangle."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)
