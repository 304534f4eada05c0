"""Dangerous edges and their component structure.

An edge is dangerous when its endpoint lists intersect; only such edges can
be violated by a list colouring, so the spanning subgraph B of dangerous
edges is what the solver actually has to colour, one connected component at
a time.
"""

from __future__ import annotations

from .graphs import Graph
from .lists import ListAssignment, lists_intersect


class UnionFind:
    """Union-find with path compression."""

    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # attach the larger root under the smaller so roots stay minimal
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Components as sorted vertex tuples, ordered by smallest member."""
        groups: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            groups.setdefault(self.find(v), []).append(v)
        return tuple(tuple(vs) for _, vs in sorted(groups.items()))


class DangerousSubgraph:
    """The edge set B(G, L) plus its component partition."""

    __slots__ = ("host", "edges", "components", "adj")

    def __init__(
        self,
        host: Graph,
        edges: tuple[tuple[int, int], ...],
        components: tuple[tuple[int, ...], ...],
        adj: tuple[tuple[int, ...], ...],
    ):
        self.host = host
        self.edges = edges
        self.components = components
        self.adj = adj

    @property
    def max_order(self) -> int:
        return max((len(c) for c in self.components), default=0)

    def __repr__(self) -> str:
        return (
            f"DangerousSubgraph(edges={len(self.edges)}, "
            f"components={len(self.components)}, max_order={self.max_order})"
        )


def dangerous_subgraph(g: Graph, l: ListAssignment) -> DangerousSubgraph:
    """Keep exactly the edges of g whose endpoint lists intersect."""
    if l.n != g.n:
        raise ValueError(f"assignment covers {l.n} vertices, graph has {g.n}")
    uf = UnionFind(g.n)
    edges = []
    adj: list[list[int]] = [[] for _ in range(g.n)]
    lists = l.lists
    for u, v in g.edges():
        if lists_intersect(lists[u], lists[v]):
            edges.append((u, v))
            adj[u].append(v)
            adj[v].append(u)
            uf.union(u, v)
    return DangerousSubgraph(
        host=g,
        edges=tuple(edges),
        components=uf.components(),
        adj=tuple(tuple(a) for a in adj),  # rows already sorted: edges() is ordered
    )


def component_profile(d: DangerousSubgraph) -> list[int]:
    """Component orders in descending order; sums to n."""
    return sorted((len(c) for c in d.components), reverse=True)
