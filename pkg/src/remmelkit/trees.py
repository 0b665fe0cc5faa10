"""Bijection between functions {2..n-1} -> {1..n} and labeled trees on n vertices.

A function is drawn as a functional digraph; its cycles, together with the
virtual singleton cycles {n} and {1}, are laid out left to right in
decreasing order of minimum element, each written as a path from its
minimum.  Erasing loops, joining consecutive cycles end to start, and
undirecting all edges gives a tree, and the construction reverses from the
path between n and 1.  Ranking is a mixed-radix encoding of the function
values, so trees inherit an exact rank in [0, n^(n-2)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InternalError

Edge = tuple[int, int]


@dataclass(frozen=True)
class EndoFunction:
    """A map from {2..n-1} into {1..n}, the domain of the tree bijection."""

    n: int
    values: tuple[int, ...]  # values[i] = image of i + 2

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"need n >= 2, got {self.n}")
        if len(self.values) != max(self.n - 2, 0):
            raise DomainError(
                f"expected {self.n - 2} values for n={self.n}, got {len(self.values)}"
            )
        if any(not 1 <= v <= self.n for v in self.values):
            raise DomainError(f"values outside 1..{self.n}: {self.values}")

    def __call__(self, i: int) -> int:
        if not 2 <= i <= self.n - 1:
            raise DomainError(f"{i} outside the domain 2..{self.n - 1}")
        return self.values[i - 2]

    @property
    def domain(self) -> range:
        return range(2, self.n)

    def as_text(self) -> str:
        return ",".join(map(str, self.values))

    @classmethod
    def from_text(cls, n: int, text: str) -> "EndoFunction":
        text = text.strip()
        values = tuple(int(v) for v in text.split(",")) if text else ()
        return cls(n, values)


@dataclass(frozen=True)
class LabeledTree:
    """A tree on vertices 1..n stored as sorted undirected edges."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        object.__setattr__(self, "edges", norm)
        if self.n < 1:
            raise DomainError(f"need n >= 1, got {self.n}")
        if len(norm) != self.n - 1 or len(set(norm)) != self.n - 1:
            raise DomainError(f"a tree on {self.n} vertices needs {self.n - 1} edges")
        if any(not (1 <= a <= self.n and 1 <= b <= self.n) or a == b for a, b in norm):
            raise DomainError(f"edge endpoints outside 1..{self.n}")
        seen = {1}
        stack = [1]
        adj = self.adjacency()
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n:
            raise DomainError("edge set is not connected")

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def as_text(self) -> str:
        return "\n".join(f"{a}-{b}" for a, b in self.edges)

    @classmethod
    def from_text(cls, text: str) -> "LabeledTree":
        edges = []
        vertices: set[int] = set()
        for line in text.strip().splitlines():
            line = line.strip()
            if not line:
                continue
            a, _, b = line.partition("-")
            edge = (int(a), int(b))
            edges.append(edge)
            vertices.update(edge)
        if not vertices:
            raise DomainError("no edges given")
        return cls(max(vertices), tuple(edges))


def _function_cycles(f: EndoFunction) -> list[list[int]]:
    """Cycles of the functional digraph restricted to the true domain.

    An element is cyclic iff following f from it returns to it without
    leaving the domain {2..n-1}.
    """
    cyclic: list[list[int]] = []
    state: dict[int, int] = {}  # 0 = in progress, 1 = resolved
    for start in f.domain:
        if state.get(start):
            continue
        path = []
        v = start
        while 2 <= v <= f.n - 1 and state.get(v) is None:
            state[v] = 0
            path.append(v)
            v = f(v)
        if 2 <= v <= f.n - 1 and state[v] == 0 and v in path:
            cyclic.append(path[path.index(v) :])
        for u in path:
            state[u] = 1
    return cyclic


def func_to_tree(f: EndoFunction) -> LabeledTree:
    """Turn a function into the tree its prescribed drawing defines.

    Cycles (including the virtual singletons {n} and {1}) are sorted by
    decreasing minimum and written as paths from their minima; loops
    vanish, consecutive cycles are joined last element to first element,
    and every non-cycle value becomes an undirected edge.
    """
    cycles = _function_cycles(f)
    rotated = []
    for cycle in cycles:
        low = min(cycle)
        at = cycle.index(low)
        rotated.append(cycle[at:] + cycle[:at])
    rotated.append([f.n])
    rotated.append([1])
    rotated.sort(key=lambda c: -c[0])
    edges: list[Edge] = []
    for cycle in rotated:
        edges.extend((cycle[i], cycle[i + 1]) for i in range(len(cycle) - 1))
    for left, right in zip(rotated, rotated[1:]):
        edges.append((left[-1], right[0]))
    on_cycle = {v for cycle in rotated for v in cycle}
    for i in f.domain:
        if i not in on_cycle:
            edges.append((i, f(i)))
    return LabeledTree(f.n, tuple(edges))


def tree_to_func(tree: LabeledTree) -> EndoFunction:
    """Invert func_to_tree by reading the path between n and 1.

    The left-to-right minima of that path mark where the drawing joined
    consecutive cycles, so the path splits back into cycle segments; all
    off-path edges point toward the path, and the images of 1 and n are
    discarded since they lie outside the function's domain.
    """
    n = tree.n
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    adj = tree.adjacency()
    parent = {n: 0}
    stack = [n]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    path = [1]
    while path[-1] != n:
        path.append(parent[path[-1]])
    path.reverse()

    segments: list[list[int]] = []
    best = None
    for v in path:
        if best is None or v < best:
            segments.append([v])
            best = v
        else:
            segments[-1].append(v)

    values: dict[int, int] = {}
    for segment in segments:
        for i, v in enumerate(segment):
            values[v] = segment[(i + 1) % len(segment)]
    on_path = set(path)
    order = list(path)
    for v in order:
        for w in adj[v]:
            if w not in on_path and w not in values:
                values[w] = v
                order.append(w)

    missing = [i for i in range(2, n) if i not in values]
    if missing:
        raise InternalError(f"off-path vertices left unoriented: {missing}")
    return EndoFunction(n, tuple(values[i] for i in range(2, n)))


def rank(f: EndoFunction) -> int:
    """Mixed-radix rank: sum of (f(i) - 1) n^(i-2) over the domain."""
    total = 0
    for i in reversed(f.domain):
        total = total * f.n + (f(i) - 1)
    return total


def unrank(r: int, n: int) -> EndoFunction:
    """Inverse of rank; r must lie in [0, n^(n-2))."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if not 0 <= r < n ** (n - 2):
        raise DomainError(f"rank {r} outside [0, {n ** (n - 2)})")
    values = []
    for _ in range(n - 2):
        r, v = divmod(r, n)
        values.append(v + 1)
    return EndoFunction(n, tuple(values))


def tree_rank(tree: LabeledTree) -> int:
    return rank(tree_to_func(tree))


def tree_unrank(r: int, n: int) -> LabeledTree:
    return func_to_tree(unrank(r, n))
