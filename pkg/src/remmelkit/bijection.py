"""Signed-set machinery producing explicit bijections between partition classes.

Two families of forbidden multisets A_1, A_2, ... and B_1, B_2, ... whose
max-multiplicity unions have equal sums over every finite index subset give
a bijection between the partitions of n avoiding the A_i and those avoiding
the B_i.  The bijection is chased through two toggle involutions linked by a
sign-preserving cross map, in the style of the Garsia-Milne involution
principle.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Partition, partition_count, partitions
from .errors import DomainError, InternalError

DEFAULT_MAX_ACTIVE = 20


@dataclass(frozen=True)
class PartitionFamily:
    """Indexed family of forbidden part-multisets.

    kind is one of even_parts (the i-th multiset is {2i}), repeated ({i, i}),
    multiples ({m i}), or explicit (a finite list of multisets).  Indices
    are 1-based; at level n only indices whose multiset sums to at most n
    are active, since larger multisets cannot embed in a partition of n.
    """

    kind: str
    m: int = 0
    sets: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.kind not in ("even_parts", "repeated", "multiples", "explicit"):
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.kind == "multiples" and self.m < 1:
            raise DomainError("multiples family needs m >= 1")
        if self.kind == "explicit":
            if not self.sets or any(
                not s or any(p < 1 for p in s) for s in self.sets
            ):
                raise DomainError("explicit family needs nonempty positive multisets")
            object.__setattr__(
                self, "sets", tuple(tuple(sorted(s)) for s in self.sets)
            )

    def multiset(self, i: int) -> tuple[int, ...]:
        """The i-th forbidden multiset, sorted ascending."""
        if i < 1:
            raise DomainError(f"family indices are 1-based, got {i}")
        if self.kind == "even_parts":
            return (2 * i,)
        if self.kind == "repeated":
            return (i, i)
        if self.kind == "multiples":
            return (self.m * i,)
        if i > len(self.sets):
            raise DomainError(f"explicit family has no index {i}")
        return self.sets[i - 1]

    def active_indices(self, n: int) -> list[int]:
        """Indices whose multiset could embed in a partition of n."""
        if self.kind == "explicit":
            return [i for i in range(1, len(self.sets) + 1) if sum(self.sets[i - 1]) <= n]
        step = {"even_parts": 2, "repeated": 2, "multiples": self.m}[self.kind]
        return list(range(1, n // step + 1))

    def describe(self) -> str:
        if self.kind == "multiples":
            return f"multiples:{self.m}"
        if self.kind == "explicit":
            return "explicit:" + ";".join(",".join(map(str, s)) for s in self.sets)
        return self.kind


def family_from_json(payload) -> PartitionFamily:
    """Read {"kind": "even_parts" | "repeated" | "multiples" | "explicit", ...}."""
    if isinstance(payload, str):
        payload = json.loads(payload)
    if not isinstance(payload, dict) or "kind" not in payload:
        raise DomainError('family JSON must be an object with a "kind" key')
    kind = payload["kind"]
    if kind == "multiples":
        return PartitionFamily("multiples", m=int(payload["m"]))
    if kind == "explicit":
        return PartitionFamily(
            "explicit", sets=tuple(tuple(map(int, s)) for s in payload["sets"])
        )
    return PartitionFamily(kind)


# -- multiset helpers -----------------------------------------------------------


def _contains(parts: Counter, needed: tuple[int, ...]) -> bool:
    counted = Counter(needed)
    return all(parts[p] >= k for p, k in counted.items())


def _max_union(family: PartitionFamily, indices) -> Counter:
    out: Counter = Counter()
    for i in indices:
        for p, k in Counter(family.multiset(i)).items():
            if out[p] < k:
                out[p] = k
    return out


def _counter_sum(c: Counter) -> int:
    return sum(p * k for p, k in c.items())


# -- the sum condition ------------------------------------------------------------


def sum_condition_witness(
    a: PartitionFamily, b: PartitionFamily, n: int, max_active: int | None = DEFAULT_MAX_ACTIVE
):
    """The smallest index subset violating the union-sum condition, or None.

    Every subset S of indices active at level n must satisfy
    sum(union of A_i) = sum(union of B_i), unions taken with maximum
    multiplicity.  The check is exponential in the number of active
    indices, so a configurable cap guards it.
    """
    active = sorted(set(a.active_indices(n)) | set(b.active_indices(n)))
    if max_active is not None and len(active) > max_active:
        raise DomainError(
            f"{len(active)} active indices exceed the cap {max_active}; "
            "raise max_active to force the exponential subset check"
        )
    for size in range(1, len(active) + 1):
        for subset in itertools.combinations(active, size):
            if _counter_sum(_max_union(a, subset)) != _counter_sum(
                _max_union(b, subset)
            ):
                return subset
    return None


def check_sum_condition(
    a: PartitionFamily, b: PartitionFamily, n: int, max_active: int | None = DEFAULT_MAX_ACTIVE
) -> bool:
    """True iff every active index subset has equal union sums on both sides."""
    return sum_condition_witness(a, b, n, max_active) is None


@lru_cache(maxsize=256)
def _condition_holds(a: PartitionFamily, b: PartitionFamily, n: int) -> bool:
    return sum_condition_witness(a, b, n, max_active=None) is None


# -- avoiders and signed pairs ------------------------------------------------------


def avoiders(family: PartitionFamily, n: int) -> list[Partition]:
    """Partitions of n containing no active forbidden multiset, descending lex."""
    active = family.active_indices(n)
    multisets = [family.multiset(i) for i in active]
    out = []
    for lam in partitions(n):
        parts = Counter(lam.parts)
        if not any(_contains(parts, s) for s in multisets):
            out.append(lam)
    return out


@dataclass(frozen=True)
class SignedPair:
    """A partition with a set of indices whose multisets it contains."""

    partition: Partition
    indices: frozenset[int]

    @property
    def sign(self) -> int:
        return -1 if len(self.indices) % 2 else 1


def signed_pairs(family: PartitionFamily, n: int) -> list[SignedPair]:
    """Every (partition of n, index subset) with all indexed multisets embedded."""
    out = []
    active = family.active_indices(n)
    for lam in partitions(n):
        parts = Counter(lam.parts)
        containing = [i for i in active if _contains(parts, family.multiset(i))]
        for size in range(len(containing) + 1):
            for subset in itertools.combinations(containing, size):
                out.append(SignedPair(lam, frozenset(subset)))
    return out


def toggle_involution(family: PartitionFamily, n: int, pair: SignedPair) -> SignedPair:
    """Toggle the least active index whose multiset embeds in the partition.

    Pairs whose partition avoids the family entirely are the fixed points;
    for them the index set is necessarily empty.
    """
    parts = Counter(pair.partition.parts)
    for i in family.active_indices(n):
        if _contains(parts, family.multiset(i)):
            return SignedPair(pair.partition, pair.indices ^ {i})
    if pair.indices:
        raise InternalError(f"non-embeddable indices recorded on {pair}")
    return pair


def is_toggle_fixed(family: PartitionFamily, n: int, pair: SignedPair) -> bool:
    parts = Counter(pair.partition.parts)
    return not any(
        _contains(parts, family.multiset(i)) for i in family.active_indices(n)
    )


def _replace(lam: Partition, remove: Counter, insert: Counter) -> Partition:
    parts = Counter(lam.parts)
    for p, k in remove.items():
        if parts[p] < k:
            raise InternalError(f"cannot remove {remove} from {lam}")
        parts[p] -= k
    for p, k in insert.items():
        parts[p] += k
    return Partition(sorted(parts.elements(), reverse=True))


def cross_map(
    a: PartitionFamily, b: PartitionFamily, n: int, pair: SignedPair
) -> SignedPair:
    """Swap the indexed A-union out of the partition for the B-union.

    Sign-preserving, and a bijection between the two signed sets exactly
    because the union sums agree on the recorded index set.
    """
    return SignedPair(
        _replace(pair.partition, _max_union(a, pair.indices), _max_union(b, pair.indices)),
        pair.indices,
    )


def gm_map(a: PartitionFamily, b: PartitionFamily, n: int, lam: Partition) -> Partition:
    """Chase one A-avoider through the signed sets to its B-avoider image.

    Starting from the cross image of (lam, {}), alternately apply the
    B-side toggle, pull back through the cross map, apply the A-side
    toggle, and push forward again, until the B-side toggle fixes the
    pair.  The chase is guaranteed to terminate within the size of the
    signed set; running past a generous cap means an invariant is broken.
    """
    if lam.n != n:
        raise DomainError(f"{lam} is not a partition of {n}")
    if not is_toggle_fixed(a, n, SignedPair(lam, frozenset())):
        raise DomainError(f"{lam} does not avoid family {a.describe()}")
    if not _condition_holds(a, b, n):
        raise DomainError("families fail the union-sum condition")
    active = sorted(set(a.active_indices(n)) | set(b.active_indices(n)))
    cap = 2 * partition_count(n) * (1 << len(active)) + 4
    pair = cross_map(a, b, n, SignedPair(lam, frozenset()))
    steps = 0
    while not is_toggle_fixed(b, n, pair):
        back = cross_map(b, a, n, toggle_involution(b, n, pair))
        pair = cross_map(a, b, n, toggle_involution(a, n, back))
        steps += 1
        if steps > cap:
            raise InternalError("involution chase failed to terminate")
    if pair.indices:
        raise InternalError("chase ended on a pair with indices still set")
    return pair.partition
