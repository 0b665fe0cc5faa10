"""Kostka numbers, special rim hook tabloids, brick tabloids, and expansions.

Young diagrams follow the French convention: row 1 is the bottom row and
carries the largest part, and the "top left cell" is the first cell of the
highest row.  A special rim hook starts there and follows the northeast
boundary; removing it leaves a smaller partition diagram.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import Partition, partitions
from .errors import DomainError
from .polynomials import MultiPoly

Cell = tuple[int, int]  # (row, column), row 1 = bottom row, both 1-based


# -- semistandard tableaux ------------------------------------------------------


def kostka(shape: Partition, content: Partition) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Rows weakly increase, columns strictly increase; entry i is used
    content[i-1] times.
    """
    if shape.n != content.n:
        raise DomainError(f"size mismatch: |{shape}| != |{content}|")
    return sum(1 for _ in _ssyt_fixed_content(shape.parts, content.parts))


def _ssyt_fixed_content(shape: tuple[int, ...], content: tuple[int, ...]):
    """Backtrack over fillings row by row (English reading order)."""
    rows = len(shape)
    remaining = list(content)
    tableau = [[0] * shape[r] for r in range(rows)]

    def fill(pos: int):
        if pos == sum(shape):
            yield tuple(tuple(row) for row in tableau)
            return
        r, c = _cell_at(shape, pos)
        lo = tableau[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, tableau[r - 1][c] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] > 0:
                remaining[v - 1] -= 1
                tableau[r][c] = v
                yield from fill(pos + 1)
                tableau[r][c] = 0
                remaining[v - 1] += 1

    yield from fill(0)


def _cell_at(shape: tuple[int, ...], pos: int) -> tuple[int, int]:
    for r, width in enumerate(shape):
        if pos < width:
            return r, pos
        pos -= width
    raise IndexError(pos)


def ssyt_bounded_entries(shape: tuple[int, ...], m: int):
    """Yield content weight vectors of all SSYT with entries in 1..m."""
    rows = len(shape)
    tableau = [[0] * shape[r] for r in range(rows)]
    weight = [0] * m

    def fill(pos: int):
        if pos == sum(shape):
            yield tuple(weight)
            return
        r, c = _cell_at(shape, pos)
        lo = tableau[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, tableau[r - 1][c] + 1)
        for v in range(lo, m + 1):
            tableau[r][c] = v
            weight[v - 1] += 1
            yield from fill(pos + 1)
            weight[v - 1] -= 1
            tableau[r][c] = 0

    yield from fill(0)


# -- special rim hook tabloids -----------------------------------------------------


@dataclass(frozen=True)
class SpecialRimHookTabloid:
    """A tiling of a diagram by successive northeast-boundary hooks.

    Hooks are listed in removal order; each is the cell path of one hook,
    running from the then-current top left cell east and south along the
    boundary.  vertical_steps[i] counts the row drops inside hook i.
    """

    shape: Partition
    hooks: tuple[tuple[Cell, ...], ...]
    vertical_steps: tuple[int, ...]

    def content(self) -> Partition:
        return Partition(sorted((len(h) for h in self.hooks), reverse=True))

    def sign(self) -> int:
        return (-1) ** sum(self.vertical_steps)


def _hook_cells(shape: tuple[int, ...], end_row: int) -> tuple[Cell, ...]:
    """Cells of the hook that starts at the top left cell and ends in end_row.

    The hook swallows the whole top row, drops to the row below at that
    row's last column, runs east to its end, and repeats until end_row,
    where it stops at the row's last column (the only stop that leaves a
    left-justified diagram).
    """
    rows = len(shape)
    cells: list[Cell] = [(rows, c) for c in range(1, shape[rows - 1] + 1)]
    for r in range(rows - 1, end_row - 1, -1):
        cells.extend((r, c) for c in range(shape[r], shape[r - 1] + 1))
    return tuple(cells)


def enumerate_srht(shape: Partition):
    """All special rim hook tabloids of the given shape.

    Each recursion step peels one hook; a hook is determined by the row it
    ends in, and ending in row j removes the top row and trims every row
    between j and the top to one less than the length of the row above it.
    """
    def peel(current: tuple[int, ...], hooks, steps):
        if not current:
            yield SpecialRimHookTabloid(shape, tuple(hooks), tuple(steps))
            return
        rows = len(current)
        for j in range(1, rows + 1):
            successor = current[: j - 1] + tuple(p - 1 for p in current[j:])
            successor = tuple(p for p in successor if p)
            hooks.append(_hook_cells(current, j))
            steps.append(rows - j)
            yield from peel(successor, hooks, steps)
            hooks.pop()
            steps.pop()

    yield from peel(shape.parts, [], [])


@lru_cache(maxsize=None)
def _signed_contents(shape: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Signed tabloid counts of a shape, keyed by sorted hook-length content."""
    if not shape:
        return {(): 1}
    out: dict[tuple[int, ...], int] = {}
    rows = len(shape)
    for j in range(1, rows + 1):
        length = shape[j - 1] + rows - j
        successor = shape[: j - 1] + tuple(p - 1 for p in shape[j:])
        successor = tuple(p for p in successor if p)
        sign = -1 if (rows - j) % 2 else 1
        for content, count in _signed_contents(successor).items():
            key = tuple(sorted(content + (length,), reverse=True))
            out[key] = out.get(key, 0) + sign * count
    return out


def inverse_kostka(mu: Partition, lam: Partition) -> int:
    """Coefficient of the Schur function for lam in the monomial function for mu.

    Computed as the signed count of special rim hook tabloids of shape lam
    whose hook lengths are the parts of mu; the sign is minus one to the
    number of vertical steps.
    """
    if mu.n != lam.n:
        raise DomainError(f"size mismatch: |{mu}| != |{lam}|")
    return _signed_contents(lam.parts).get(mu.parts, 0)


# -- brick tabloids ------------------------------------------------------------------


def brick_tabloid_count(lam: Partition, mu: Partition) -> int:
    """Number of ways to split the rows of mu into bricks with lengths lam.

    Each row of mu is cut into an ordered sequence of bricks; the combined
    multiset of brick lengths over all rows must equal the parts of lam.
    """
    if lam.n != mu.n:
        raise DomainError(f"size mismatch: |{lam}| != |{mu}|")
    supply: dict[int, int] = {}
    for part in lam.parts:
        supply[part] = supply.get(part, 0) + 1

    def fill_row(row_remaining: int, next_rows: tuple[int, ...]) -> int:
        if row_remaining == 0:
            if not next_rows:
                return 1 if not any(supply.values()) else 0
            return fill_row(next_rows[0], next_rows[1:])
        total = 0
        for brick in list(supply):
            if supply[brick] and brick <= row_remaining:
                supply[brick] -= 1
                total += fill_row(row_remaining - brick, next_rows)
                supply[brick] += 1
        return total

    if not mu.parts:
        return 1 if not lam.parts else 0
    return fill_row(mu.parts[0], mu.parts[1:])


# -- symmetric function expansions ---------------------------------------------------


@dataclass(frozen=True)
class SymFunc:
    """Degree-n symmetric function as a coefficient map in one fixed basis."""

    degree: int
    basis: str
    coeffs: dict[Partition, Fraction]

    def __post_init__(self):
        if self.basis not in ("e", "h", "m", "s"):
            raise DomainError(f"unknown basis {self.basis!r}")
        clean = {}
        for part, coeff in self.coeffs.items():
            if part.n != self.degree:
                raise DomainError(f"{part} is not a partition of {self.degree}")
            coeff = Fraction(coeff)
            if coeff:
                clean[part] = coeff
        object.__setattr__(self, "coeffs", clean)

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for part in sorted(self.coeffs, key=lambda p: p.parts, reverse=True):
            c = self.coeffs[part]
            prefix = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            bits.append(f"{prefix}{self.basis}{part}")
        return " + ".join(bits).replace("+ -", "- ")


def h_to_e(mu: Partition) -> SymFunc:
    """Expansion of the complete homogeneous function for mu over the e basis.

    The coefficient of e_lam is the signed brick tabloid count
    (-1)^(n - length(lam)) |B_(lam, mu)|.
    """
    n = mu.n
    coeffs: dict[Partition, Fraction] = {}
    for lam in partitions(n):
        count = brick_tabloid_count(lam, mu)
        if count:
            coeffs[lam] = Fraction((-1) ** (n - lam.length) * count)
    return SymFunc(n, "e", coeffs)


@dataclass(frozen=True)
class MonomialExpansion:
    """Exact polynomial in x_1..x_m, stored as exponent-tuple -> coefficient."""

    m: int
    terms: dict[tuple[int, ...], Fraction]

    def __post_init__(self):
        clean = {}
        for exp, coeff in self.terms.items():
            exp = tuple(exp)
            if len(exp) != self.m:
                raise DomainError(f"exponent {exp} has wrong arity for m={self.m}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exp] = coeff
        object.__setattr__(self, "terms", clean)

    def __add__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        if self.m != other.m:
            raise DomainError("variable-count mismatch")
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            elif exp in out:
                del out[exp]
        return MonomialExpansion(self.m, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MonomialExpansion(
                self.m, {e: c * other for e, c in self.terms.items()}
            )
        if self.m != other.m:
            raise DomainError("variable-count mismatch")
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MonomialExpansion(self.m, out)

    __rmul__ = __mul__

    def swap_variables(self, i: int, j: int) -> "MonomialExpansion":
        """Exchange x_i and x_j (1-based); symmetric polynomials are fixed."""
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            e = list(exp)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            out[tuple(e)] = c
        return MonomialExpansion(self.m, out)


def _expansion_one(m: int) -> MonomialExpansion:
    return MonomialExpansion(m, {(0,) * m: Fraction(1)})


@lru_cache(maxsize=None)
def _elementary(k: int, m: int) -> MonomialExpansion:
    terms = {}
    for subset in itertools.combinations(range(m), k):
        exp = [0] * m
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = Fraction(1)
    return MonomialExpansion(m, terms)


@lru_cache(maxsize=None)
def _homogeneous(k: int, m: int) -> MonomialExpansion:
    terms = {}
    for combo in itertools.combinations_with_replacement(range(m), k):
        exp = [0] * m
        for i in combo:
            exp[i] += 1
        terms[tuple(exp)] = Fraction(1)
    return MonomialExpansion(m, terms)


@lru_cache(maxsize=None)
def _product_expansion(basis: str, parts: tuple[int, ...], m: int) -> MonomialExpansion:
    build = _elementary if basis == "e" else _homogeneous
    if not parts:
        return _expansion_one(m)
    return _product_expansion(basis, parts[1:], m) * build(parts[0], m)


def expand_in_vars(basis: str, lam: Partition, m: int) -> MonomialExpansion:
    """Evaluate a basis element in m variables, exactly.

    e and h are products over the parts; m symmetrises the monomial with
    exponent lam; s sums the weights of all SSYT with entries up to m.
    This is the independent oracle for every basis identity in the package.
    """
    if basis in ("e", "h"):
        return _product_expansion(basis, lam.parts, m)
    if basis == "m":
        padded = lam.parts + (0,) * (m - lam.length)
        if lam.length > m:
            return MonomialExpansion(m, {})
        terms = {exp: Fraction(1) for exp in set(itertools.permutations(padded))}
        return MonomialExpansion(m, terms)
    if basis == "s":
        terms: dict[tuple[int, ...], Fraction] = {}
        for weight in ssyt_bounded_entries(lam.parts, m):
            terms[weight] = terms.get(weight, Fraction(0)) + 1
        return MonomialExpansion(m, terms)
    raise DomainError(f"unknown basis {basis!r}")


def expand_symfunc(f: SymFunc, m: int) -> MonomialExpansion:
    out = MonomialExpansion(m, {})
    for part, coeff in f.coeffs.items():
        out = out + expand_in_vars(f.basis, part, m) * coeff
    return out
