"""Exact chromatic and choice numbers for small graphs, and certification of
the largest order below which every filtered graph is k-choosable.

Choosability testing enumerates k-list assignments canonically (colours are
numbered in order of first use, killing permutation symmetry). A bad
assignment restricted to a vertex-minimal non-colourable set always lives on
a connected induced subgraph of minimum degree >= k and uses every colour on
at least two lists, so the search ranges only over such subgraphs and such
assignments; the verdict is still exact. All caps fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import CapExceededError, GraphParseError
from .graphio import parse_graph6, to_graph6
from .graphs import ForbiddenSpec, Graph, is_free_of
from .lists import ListAssignment
from .solver import exact_list_colouring

CHROMATIC_CAP = 16
CHOOSABILITY_CAP = 8


def _greedy_clique(g: Graph) -> list[int]:
    adj = [set(a) for a in g.adj]
    if g.n == 0:
        return []
    start = max(range(g.n), key=lambda v: (len(adj[v]), -v))
    clique = [start]
    cands = set(adj[start])
    while cands:
        v = max(sorted(cands), key=lambda u: len(adj[u] & cands))
        clique.append(v)
        cands &= adj[v]
    return clique


def _greedy_colour_count(g: Graph) -> int:
    # saturation-guided greedy for an upper bound
    colours = [-1] * g.n
    neighbour_colours: list[set[int]] = [set() for _ in range(g.n)]
    uncoloured = set(range(g.n))
    while uncoloured:
        v = max(sorted(uncoloured), key=lambda u: (len(neighbour_colours[u]), g.degree(u)))
        c = 0
        while c in neighbour_colours[v]:
            c += 1
        colours[v] = c
        uncoloured.remove(v)
        for w in g.adj[v]:
            if colours[w] == -1:
                neighbour_colours[w].add(c)
    return max(colours, default=-1) + 1


def chromatic_number(g: Graph, cap: int = CHROMATIC_CAP) -> int:
    """Exact chromatic number by branch and bound.

    Clique lower bound, saturation-greedy upper bound, then DSATUR-ordered
    backtracking in between.
    """
    if g.n > cap:
        raise CapExceededError(g.n, cap, "chromatic number")
    if g.n == 0:
        return 0
    best = _greedy_colour_count(g)
    lower = max(len(_greedy_clique(g)), 1)
    if lower == best:
        return best
    colours = [-1] * g.n
    neighbour_colours: list[set[int]] = [set() for _ in range(g.n)]

    def backtrack(used: int) -> None:
        nonlocal best
        if used >= best:
            return
        pending = [v for v in range(g.n) if colours[v] == -1]
        if not pending:
            best = used
            return
        v = max(pending, key=lambda u: (len(neighbour_colours[u]), g.degree(u), -u))
        for c in range(min(used + 1, best - 1)):
            if c in neighbour_colours[v]:
                continue
            colours[v] = c
            touched = []
            for w in g.adj[v]:
                if colours[w] == -1 and c not in neighbour_colours[w]:
                    neighbour_colours[w].add(c)
                    touched.append(w)
            backtrack(max(used, c + 1))
            colours[v] = -1
            for w in touched:
                neighbour_colours[w].remove(c)
            if best == lower:
                return

    backtrack(0)
    return best


@dataclass
class ChoosabilityReport:
    """Verdict of the exhaustive k-choosability test."""

    graph: Graph
    k: int
    choosable: bool
    bad_assignment: Optional[ListAssignment]
    universe: int


def _k_core(g: Graph, k: int) -> set[int]:
    """Vertices surviving iterated deletion of degree < k."""
    alive = set(range(g.n))
    degree = {v: g.degree(v) for v in alive}
    queue = [v for v in alive if degree[v] < k]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                degree[w] -= 1
                if degree[w] < k:
                    queue.append(w)
    return alive


def _candidate_subsets(g: Graph, core: set[int], k: int) -> list[tuple[int, ...]]:
    """Connected induced subsets of the core with minimum induced degree >= k,
    smallest first. A minimal non-colourable set always is one."""
    adj = [set(a) & core for a in g.adj]
    # connected components of the core
    comps: list[list[int]] = []
    seen: set[int] = set()
    for v in sorted(core):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    out: list[tuple[int, ...]] = []
    for comp in comps:
        for size in range(k + 1, len(comp) + 1):
            for subset in combinations(comp, size):
                inside = set(subset)
                if any(len(adj[v] & inside) < k for v in subset):
                    continue
                start = subset[0]
                reached = {start}
                stack = [start]
                while stack:
                    u = stack.pop()
                    for w in adj[u]:
                        if w in inside and w not in reached:
                            reached.add(w)
                            stack.append(w)
                if len(reached) == len(subset):
                    out.append(subset)
    out.sort(key=lambda s: (len(s), s))
    return out


def _search_bad_assignment(
    g: Graph, vertices: tuple[int, ...], k: int
) -> Optional[dict[int, tuple[int, ...]]]:
    """Find a non-colourable canonical k-assignment on an induced subgraph.

    Vertices are processed in BFS order from the smallest so shared-colour
    constraints bind early. Each list takes k-j colours already in use plus
    j fresh ones (numbered consecutively), and a branch dies once the
    colours still on a single list outnumber what the remaining vertices
    could repeat.
    """
    inside = set(vertices)
    order = []
    seen = set()
    for s in vertices:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in g.adj[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    queue.append(w)
    b_adj = {v: tuple(w for w in g.adj[v] if w in inside) for v in vertices}

    lists: dict[int, tuple[int, ...]] = {}
    colour_count: dict[int, int] = {}

    def recurse(pos: int, used: int) -> Optional[dict[int, tuple[int, ...]]]:
        remaining = len(order) - pos
        singles = sum(1 for c in colour_count.values() if c == 1)
        if singles > k * remaining:
            return None
        if pos == len(order):
            colouring = exact_list_colouring(
                vertices,
                b_adj,
                _RaggedLists(lists),
                cap=len(vertices),
            )
            return dict(lists) if colouring is None else None
        v = order[pos]
        for fresh in range(0, k + 1):
            if fresh > 0 and used + fresh > k * len(order) // 2:
                break  # every colour must repeat, so at most k*n/2 in total
            new_colours = tuple(range(used + 1, used + fresh + 1))
            for old in combinations(range(1, used + 1), k - fresh):
                lst = tuple(sorted(old + new_colours))
                lists[v] = lst
                for c in lst:
                    colour_count[c] = colour_count.get(c, 0) + 1
                found = recurse(pos + 1, used + fresh)
                for c in lst:
                    colour_count[c] -= 1
                    if not colour_count[c]:
                        del colour_count[c]
                del lists[v]
                if found is not None:
                    return found
        return None

    return recurse(0, 0)


class _RaggedLists:
    """Adapter exposing a vertex -> list mapping to the exact solver."""

    __slots__ = ("_lists",)

    def __init__(self, lists: dict[int, tuple[int, ...]]):
        self._lists = lists

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self._lists[v]


def _extend_bad_assignment(
    g: Graph, partial: dict[int, tuple[int, ...]], k: int
) -> ListAssignment:
    """Extend a bad assignment on a subset to all of g (extra vertices get
    {1..k}; restricting any colouring to the bad subset keeps it bad)."""
    default = tuple(range(1, k + 1))
    lists = tuple(partial.get(v, default) for v in range(g.n))
    m = max(k, max((c for lst in lists for c in lst), default=k))
    return ListAssignment(k, m, lists)


def is_k_choosable(g: Graph, k: int, cap: int = CHOOSABILITY_CAP) -> ChoosabilityReport:
    """Exact k-choosability verdict with a witness assignment when negative."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n > cap:
        raise CapExceededError(g.n, cap, "choosability")
    core = _k_core(g, k)
    if not core:
        return ChoosabilityReport(g, k, True, None, universe=k)
    core_graph_chi = chromatic_number(_induced(g, sorted(core)))
    if core_graph_chi > k:
        bad = {v: tuple(range(1, k + 1)) for v in sorted(core)}
        return ChoosabilityReport(
            g, k, False, _extend_bad_assignment(g, bad, k), universe=k
        )
    universe = max(k, k * len(core) // 2)
    for subset in _candidate_subsets(g, core, k):
        bad = _search_bad_assignment(g, subset, k)
        if bad is not None:
            return ChoosabilityReport(
                g, k, False, _extend_bad_assignment(g, bad, k), universe=universe
            )
    return ChoosabilityReport(g, k, True, None, universe=universe)


def _induced(g: Graph, vertices: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return Graph(len(vertices), edges)


def choice_number(g: Graph, cap: int = CHOOSABILITY_CAP) -> int:
    """Smallest k for which g is k-choosable; chi(g) <= ch(g) <= max_degree+1."""
    k = max(chromatic_number(g), 1)
    while True:
        if is_k_choosable(g, k, cap=cap).choosable:
            return k
        k += 1


@dataclass
class GSearchReport:
    """Outcome of scanning an enumeration stream for a non-choosable graph."""

    forbidden: tuple[ForbiddenSpec, ...]
    k: int
    certified_g: int
    exhausted: bool
    counterexample_graph6: Optional[str]
    counterexample: Optional[Graph]
    bad_assignment: Optional[ListAssignment]
    graphs_seen: int
    graphs_tested: int

    def to_json_dict(self) -> dict:
        out = {
            "forbidden": [str(s) for s in self.forbidden],
            "k": self.k,
            "certified_g": self.certified_g,
            "exhausted": self.exhausted,
            "graphs_seen": self.graphs_seen,
            "graphs_tested": self.graphs_tested,
            "counterexample": None,
        }
        if self.counterexample is not None:
            out["counterexample"] = {
                "graph6": self.counterexample_graph6,
                "n": self.counterexample.n,
                "bad_assignment": [list(l) for l in self.bad_assignment.lists],
            }
        return out


def g_search(
    forbidden: Iterable[ForbiddenSpec],
    k: int,
    stream: Iterable[str],
    cap: int = CHOOSABILITY_CAP,
) -> GSearchReport:
    """Scan a graph6 stream (non-decreasing vertex count) for the first
    filtered graph that is not k-choosable.

    Ties at the failing order are broken by lexicographic graph6 string, so
    the result does not depend on within-order stream order. ``certified_g``
    is the counterexample's order minus one, or the largest order seen when
    the stream is exhausted (reported with ``exhausted=True``).
    """
    specs = tuple(forbidden)
    seen = 0
    tested = 0
    last_order = 0
    failures: list[tuple[str, Graph, ListAssignment]] = []
    failing_order: Optional[int] = None
    for line, g in _parse_stream(stream):
        if g.n < last_order:
            raise GraphParseError(
                f"stream order violation: n={g.n} after n={last_order}"
            )
        last_order = g.n
        if failing_order is not None and g.n > failing_order:
            break
        seen += 1
        if not is_free_of(g, specs):
            continue
        tested += 1
        report = is_k_choosable(g, k, cap=cap)
        if not report.choosable:
            failures.append((to_graph6(g), g, report.bad_assignment))
            failing_order = g.n
    if failures:
        g6, graph, bad = min(failures, key=lambda t: t[0])
        return GSearchReport(
            forbidden=specs,
            k=k,
            certified_g=failing_order - 1,
            exhausted=False,
            counterexample_graph6=g6,
            counterexample=graph,
            bad_assignment=bad,
            graphs_seen=seen,
            graphs_tested=tested,
        )
    return GSearchReport(
        forbidden=specs,
        k=k,
        certified_g=last_order,
        exhausted=True,
        counterexample_graph6=None,
        counterexample=None,
        bad_assignment=None,
        graphs_seen=seen,
        graphs_tested=tested,
    )


def _parse_stream(stream: Iterable[str]):
    for raw in stream:
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
            if not line:
                continue
        yield line, parse_graph6(line)
