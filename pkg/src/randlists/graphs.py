"""Immutable simple graphs and the constructions used throughout.

Vertices are dense integers 0..n-1. Generators place clique/copy blocks in
consecutive index ranges with isolated filler vertices last, so every
construction is deterministically labelled and reproducible.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 2**31 - 1


class Graph:
    """Simple undirected graph with sorted, duplicate-free adjacency lists.

    Immutable after construction; safe to share read-only across concurrent
    trials.
    """

    __slots__ = ("n", "adj", "_max_degree")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count out of range: {n}")
        neighbours: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            neighbours[u].add(v)
            neighbours[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbours
        )
        self._max_degree = max((len(a) for a in self.adj), default=0)

    @property
    def max_degree(self) -> int:
        return self._max_degree

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges()})"


def cycle_power(n: int, r: int) -> Graph:
    """The r-th power of the n-cycle: i adjacent to i±1, ..., i±r (mod n).

    Requires n >= 3 and 1 <= r < n/2; the wrap-around degenerate case
    r >= n/2 is rejected. The result has n*r edges and is 2r-regular.
    """
    if n < 3:
        raise ValueError("cycle power needs n >= 3")
    if r < 1 or 2 * r >= n:
        raise ValueError(f"radius must satisfy 1 <= r < n/2, got r={r}, n={n}")
    edges = [(i, (i + d) % n) for i in range(n) for d in range(1, r + 1)]
    return Graph(n, edges)


def disjoint_cliques(n: int, delta: int) -> Graph:
    """floor(n/(delta+1)) disjoint copies of K_{delta+1}, isolated filler last."""
    if n < 1:
        raise ValueError("need n >= 1")
    if not 0 <= delta < n:
        raise ValueError(f"need 0 <= delta < n, got delta={delta}, n={n}")
    size = delta + 1
    copies = n // size
    edges = []
    for c in range(copies):
        base = c * size
        edges.extend(combinations(range(base, base + size), 2))
    return Graph(n, edges)


def blow_up(g0: Graph, d: int) -> tuple[Graph, tuple[int, ...]]:
    """d-blow-up of g0 together with the vertex -> origin class map.

    Every origin vertex v becomes the class of d copies at indices
    v*d .. v*d + d - 1 (copies of the same origin are non-adjacent), and
    every origin edge becomes a complete bipartite join between classes.
    """
    if d < 1:
        raise ValueError("multiplicity must be >= 1")
    n = d * g0.n
    edges = []
    for u, v in g0.edges():
        for i in range(d):
            for j in range(d):
                edges.append((u * d + i, v * d + j))
    class_map = tuple(i // d for i in range(n))
    return Graph(n, edges), class_map


def complete_multipartite(part_size: int, parts: int) -> Graph:
    """Complete multipartite graph with ``parts`` parts of ``part_size`` each.

    Parts occupy consecutive index ranges; vertices are adjacent iff they
    lie in different parts.
    """
    if part_size < 1 or parts < 1:
        raise ValueError("part_size and parts must be >= 1")
    n = part_size * parts
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if u // part_size != v // part_size
    ]
    return Graph(n, edges)


@dataclass(frozen=True)
class ForbiddenSpec:
    """A forbidden subgraph: a clique K_t or a cycle of exact length."""

    kind: str  # "clique" | "cycle"
    size: int

    def __post_init__(self):
        if self.kind == "clique":
            if self.size < 2:
                raise ValueError("clique size must be >= 2")
        elif self.kind == "cycle":
            if self.size < 3:
                raise ValueError("cycle length must be >= 3")
        else:
            raise ValueError(f"unknown forbidden kind: {self.kind!r}")

    @classmethod
    def clique(cls, t: int) -> "ForbiddenSpec":
        return cls("clique", t)

    @classmethod
    def cycle(cls, length: int) -> "ForbiddenSpec":
        return cls("cycle", length)

    @classmethod
    def parse(cls, text: str) -> "ForbiddenSpec":
        """Parse "clique:t" or "cycle:l"."""
        kind, _, num = text.partition(":")
        if not num:
            raise ValueError(f"expected 'clique:t' or 'cycle:l', got {text!r}")
        return cls(kind.strip(), int(num))

    def __str__(self) -> str:
        return f"{self.kind}:{self.size}"


def _has_clique(g: Graph, t: int) -> bool:
    adj_sets = [set(a) for a in g.adj]

    def extend(clique_last: int, common: set[int], need: int) -> bool:
        if need == 0:
            return True
        for v in sorted(common):
            if v > clique_last and extend(v, common & adj_sets[v], need - 1):
                return True
        return False

    if t == 1:
        return g.n >= 1
    for v in range(g.n):
        if len(adj_sets[v]) >= t - 1 and extend(v, adj_sets[v], t - 1):
            return True
    return False


def _has_cycle_of_length(g: Graph, length: int) -> bool:
    # DFS for a simple cycle of exactly `length` vertices, rooted at its
    # minimum vertex so each cycle is searched once. Depth is capped at
    # `length`, fine for small forbidden cycles; not intended for large
    # dense hosts.
    adj_sets = [set(a) for a in g.adj]

    def dfs(root: int, current: int, depth: int, on_path: set[int]) -> bool:
        if depth == length - 1:
            return root in adj_sets[current]
        for w in g.adj[current]:
            if w > root and w not in on_path:
                on_path.add(w)
                if dfs(root, w, depth + 1, on_path):
                    return True
                on_path.remove(w)
        return False

    for root in range(g.n):
        if len(adj_sets[root]) >= 2 and dfs(root, root, 0, {root}):
            return True
    return False


def contains_forbidden(g: Graph, spec: ForbiddenSpec) -> bool:
    """True iff g contains the forbidden graph as a (not necessarily induced)
    subgraph."""
    if spec.kind == "clique":
        return _has_clique(g, spec.size)
    return _has_cycle_of_length(g, spec.size)


def is_free_of(g: Graph, specs: Iterable[ForbiddenSpec]) -> bool:
    """True iff g contains none of the forbidden subgraphs."""
    return not any(contains_forbidden(g, s) for s in specs)


def petersen() -> Graph:
    """The Petersen graph (outer 5-cycle, inner pentagram, spokes)."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
    return Graph(10, edges)
