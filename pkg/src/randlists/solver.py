"""Deciding list-colourability and extracting minimal non-colourable witnesses.

The fast path per dangerous component: colour every vertex whose list holds a
colour appearing on no other list of the component, then try to finish the
residual with a system of distinct representatives (a maximum matching of the
vertex-colour incidence graph). The matching step is sound but not complete,
so a capped exact backtracking solver guarantees the verdict.

Tie-breaking everywhere is by smallest vertex index / smallest colour, so
witnesses and colourings are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .dangerous import DangerousSubgraph, dangerous_subgraph
from .errors import ComponentTooLargeError
from .graphs import Graph
from .lists import ListAssignment

DEFAULT_COMPONENT_CAP = 64


@dataclass
class Colouring:
    """Partial or total vertex -> colour map."""

    assignment: dict[int, int]

    def is_total(self, n: int) -> bool:
        return len(self.assignment) == n

    def violations(self, g: Graph, l: ListAssignment) -> list[str]:
        """Colours outside lists, or monochromatic edges with shared lists."""
        out = []
        for v, c in self.assignment.items():
            if c not in l[v]:
                out.append(f"vertex {v}: colour {c} not in list")
        for u, v in g.edges():
            cu, cv = self.assignment.get(u), self.assignment.get(v)
            if cu is not None and cu == cv:
                out.append(f"edge ({u},{v}) monochromatic in colour {cu}")
        return out


def reduce_unique_colours(
    component: Sequence[int], l: ListAssignment
) -> tuple[dict[int, int], list[int]]:
    """Single-pass unique-colour step.

    Every vertex owning a colour that appears on no other list of the
    component gets its smallest such colour. Unique colours cannot collide,
    so the partial colouring is conflict-free. Returns (partial colouring,
    residual vertices in ascending order).
    """
    count: dict[int, int] = {}
    for v in component:
        for c in l[v]:
            count[c] = count.get(c, 0) + 1
    partial: dict[int, int] = {}
    residual: list[int] = []
    for v in sorted(component):
        unique = [c for c in l[v] if count[c] == 1]
        if unique:
            partial[v] = unique[0]
        else:
            residual.append(v)
    return partial, residual


def _hopcroft_karp(
    left: Sequence[int], adj: Mapping[int, Sequence[int]]
) -> dict[int, int]:
    """Maximum bipartite matching; returns left -> right for matched vertices.

    Deterministic: augmentation follows the given left order and each
    adjacency list's order.
    """
    INF = float("inf")
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for r in adj.get(u, ()):
                w = match_r.get(r)
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for r in adj.get(u, ()):
            w = match_r.get(r)
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = r
                match_r[r] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if u not in match_l:
                dfs(u)
    return match_l


def rainbow_matching_colouring(
    residual: Sequence[int], l: ListAssignment
) -> Optional[Colouring]:
    """Colour the residual with pairwise-distinct colours if possible.

    Builds the vertex-colour incidence graph and computes a maximum matching;
    a matching saturating the residual yields an all-distinct (hence proper)
    colouring. Returns None when no saturating matching exists, which does
    NOT prove non-colourability, merely that this shortcut failed.
    """
    residual = sorted(residual)
    adj = {v: l[v] for v in residual}
    matching = _hopcroft_karp(residual, adj)
    if len(matching) < len(residual):
        return None
    return Colouring(dict(matching))


def exact_list_colouring(
    component: Iterable[int],
    b: DangerousSubgraph | Mapping[int, Sequence[int]],
    l: ListAssignment,
    cap: int = DEFAULT_COMPONENT_CAP,
) -> Optional[Colouring]:
    """Complete backtracking solver over the B-edges of a vertex set.

    Most-constrained vertex first (ties by index), candidate colours
    ascending, forward pruning of neighbour candidate sets. Returns a proper
    colouring iff one exists; raises ComponentTooLargeError above ``cap``.
    """
    vertices = sorted(component)
    if len(vertices) > cap:
        raise ComponentTooLargeError(len(vertices), cap)
    adj = b.adj if isinstance(b, DangerousSubgraph) else b
    inside = set(vertices)
    neigh = {v: [w for w in adj[v] if w in inside] for v in vertices}
    candidates = {v: set(l[v]) for v in vertices}
    assigned: dict[int, int] = {}

    def solve() -> bool:
        if len(assigned) == len(vertices):
            return True
        pending = [v for v in vertices if v not in assigned]
        v = min(pending, key=lambda u: (len(candidates[u]), u))
        for c in sorted(candidates[v]):
            assigned[v] = c
            pruned = []
            dead = False
            for w in neigh[v]:
                if w not in assigned and c in candidates[w]:
                    candidates[w].discard(c)
                    pruned.append(w)
                    if not candidates[w]:
                        dead = True
            if not dead and solve():
                return True
            for w in pruned:
                candidates[w].add(c)
            del assigned[v]
        return False

    if solve():
        return Colouring(dict(assigned))
    return None


def _solve_component(
    component: Sequence[int],
    b: DangerousSubgraph,
    l: ListAssignment,
    cap: int,
) -> Optional[Colouring]:
    """Unique-colour reduction, then rainbow matching, then exact fallback.

    The unique-colour choices are always safe: a colour on no other list of
    the component can never conflict and never shrinks anyone's options, so
    the fallback only needs to solve the residual.
    """
    partial, residual = reduce_unique_colours(component, l)
    if not residual:
        return Colouring(partial)
    rainbow = rainbow_matching_colouring(residual, l)
    if rainbow is not None:
        partial.update(rainbow.assignment)
        return Colouring(partial)
    exact = exact_list_colouring(residual, b, l, cap=cap)
    if exact is None:
        return None
    partial.update(exact.assignment)
    return Colouring(partial)


def is_colourable(
    g: Graph,
    l: ListAssignment,
    cap: int = DEFAULT_COMPONENT_CAP,
    b: DangerousSubgraph | None = None,
) -> tuple[bool, Optional[Colouring]]:
    """Decide whether g admits a proper colouring from the lists.

    Works component-by-component on the dangerous subgraph (a precomputed one
    may be passed to avoid recomputation). Non-dangerous edges cannot be
    monochromatic, so a colouring proper on B is proper on g.
    """
    if b is None:
        b = dangerous_subgraph(g, l)
    total: dict[int, int] = {}
    for comp in b.components:
        col = _solve_component(comp, b, l, cap)
        if col is None:
            return False, None
        total.update(col.assignment)
    return True, Colouring(total)


@dataclass
class WitnessChecks:
    """Structural facts recorded for a witness vertex set."""

    connected: bool
    min_colour_multiplicity: int
    max_matching: int
    hall_deficient_set: tuple[int, ...]
    hall_colour_set: tuple[int, ...]
    hall_deficiency_j: int


@dataclass
class Witness:
    """A vertex set U that is non-colourable from its restricted lists.

    ``f_edges`` is the bipartite incidence between U and the colours of
    L(U); ``checks`` holds the structural validations.
    """

    vertices: tuple[int, ...]
    order: int
    palette_used: int
    colours: tuple[int, ...]
    f_edges: tuple[tuple[int, int], ...]
    checks: WitnessChecks = field(repr=False)

    @classmethod
    def from_vertices(
        cls, b: DangerousSubgraph, l: ListAssignment, vertices: Iterable[int]
    ) -> "Witness":
        vs = tuple(sorted(vertices))
        colours = tuple(sorted({c for v in vs for c in l[v]}))
        f_edges = tuple((v, c) for v in vs for c in l[v])
        return cls(
            vertices=vs,
            order=len(vs),
            palette_used=len(colours),
            colours=colours,
            f_edges=f_edges,
            checks=_witness_checks(b, l, vs, colours),
        )

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "order": self.order,
            "palette_used": self.palette_used,
            "colours": list(self.colours),
            "f_edges": [list(e) for e in self.f_edges],
            "checks": {
                "connected": self.checks.connected,
                "min_colour_multiplicity": self.checks.min_colour_multiplicity,
                "max_matching": self.checks.max_matching,
                "hall_deficient_set": list(self.checks.hall_deficient_set),
                "hall_colour_set": list(self.checks.hall_colour_set),
                "hall_deficiency_j": self.checks.hall_deficiency_j,
            },
        }


def _b_connected(b: DangerousSubgraph, vertices: Sequence[int]) -> bool:
    inside = set(vertices)
    if not inside:
        return True
    start = min(inside)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in b.adj[u]:
            if w in inside and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == inside


def _witness_checks(
    b: DangerousSubgraph,
    l: ListAssignment,
    vertices: tuple[int, ...],
    colours: tuple[int, ...],
) -> WitnessChecks:
    adj = {v: l[v] for v in vertices}
    matching = _hopcroft_karp(list(vertices), adj)
    # Alternating-path reachability from unmatched vertices locates a set X
    # with |L(X)| = |X| - deficiency; any (|L(X)|+1)-subset of X gives the
    # deficient pair (X', Y) with L(X') within Y and |Y| = j.
    match_r = {c: v for v, c in matching.items()}
    reach_v = {v for v in vertices if v not in matching}
    reach_c: set[int] = set()
    frontier = list(reach_v)
    while frontier:
        nxt = []
        for v in frontier:
            for c in adj[v]:
                if c not in reach_c:
                    reach_c.add(c)
                    owner = match_r.get(c)
                    if owner is not None and owner not in reach_v:
                        reach_v.add(owner)
                        nxt.append(owner)
        frontier = nxt
    if reach_v and len(reach_c) < len(reach_v):
        x_set = tuple(sorted(reach_v))
        y_set = tuple(sorted(reach_c))
        trimmed = x_set[: len(y_set) + 1]
        deficiency_j = len(y_set)
    else:
        trimmed = ()
        y_set = ()
        deficiency_j = -1
    count: dict[int, int] = {}
    for v in vertices:
        for c in l[v]:
            count[c] = count.get(c, 0) + 1
    return WitnessChecks(
        connected=_b_connected(b, vertices),
        min_colour_multiplicity=min(count.values()) if count else 0,
        max_matching=len(matching),
        hall_deficient_set=trimmed,
        hall_colour_set=y_set,
        hall_deficiency_j=deficiency_j,
    )


def _subset_colourable(
    vertices: Sequence[int],
    b: DangerousSubgraph,
    l: ListAssignment,
    cap: int,
) -> bool:
    """Exact colourability of B restricted to a vertex set (it may have
    split into several pieces after deletions)."""
    inside = set(vertices)
    seen: set[int] = set()
    for v in sorted(inside):
        if v in seen:
            continue
        piece = [v]
        seen.add(v)
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in b.adj[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    piece.append(w)
                    queue.append(w)
        if _solve_component(sorted(piece), b, l, cap) is None:
            return False
    return True


def minimal_witness(
    g: Graph,
    l: ListAssignment,
    cap: int = DEFAULT_COMPONENT_CAP,
    b: DangerousSubgraph | None = None,
) -> Optional[Witness]:
    """Extract a minimal non-colourable vertex set, or None if colourable.

    Starting from the first non-colourable dangerous component, vertices are
    deleted in ascending index order whenever non-colourability persists,
    restarting after each successful deletion. The result is minimal (every
    one-vertex deletion is colourable), not necessarily minimum.
    """
    if b is None:
        b = dangerous_subgraph(g, l)
    bad: Optional[list[int]] = None
    for comp in b.components:
        if _solve_component(comp, b, l, cap) is None:
            bad = list(comp)
            break
    if bad is None:
        return None
    current = sorted(bad)
    changed = True
    while changed:
        changed = False
        for v in list(current):
            trial = [u for u in current if u != v]
            if trial and not _subset_colourable(trial, b, l, cap):
                current = trial
                changed = True
                break
    return Witness.from_vertices(b, l, current)


@dataclass
class WitnessReport:
    """Outcome of validating a witness; empty violations means all checks pass."""

    violations: tuple[str, ...]
    order: int
    palette_used: int
    bound_linear: float
    bound_half: float

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_witness(w: Witness, l: ListAssignment, k: int) -> WitnessReport:
    """Check the structure every minimal non-colourable set must have.

    (a) the witness spans a connected piece of B; (b) each colour of L(U)
    appears on at least two lists; (c) the vertex-colour incidence graph has
    no saturating matching; (d) the palette bounds l <= (ik - k(k-1))/2 and
    l <= ik/2 both hold.
    """
    violations = []
    i = w.order
    ell = w.palette_used
    if not w.checks.connected:
        violations.append("not-connected")
    if w.checks.min_colour_multiplicity < 2:
        violations.append("colour-on-single-list")
    if w.checks.max_matching >= i:
        violations.append("saturating-matching-exists")
    bound_linear = (i * k - k * (k - 1)) / 2
    bound_half = i * k / 2
    if ell > bound_linear:
        violations.append("palette-exceeds-linear-bound")
    if ell > bound_half:
        violations.append("palette-exceeds-half-bound")
    return WitnessReport(
        violations=tuple(violations),
        order=i,
        palette_used=ell,
        bound_linear=bound_linear,
        bound_half=bound_half,
    )


def brute_force_colourable(g: Graph, l: ListAssignment) -> bool:
    """Independent oracle: try every combination of list choices.

    Exponential; only for cross-checking the solver on small instances.
    """
    from itertools import product

    edges = list(g.edges())
    for choice in product(*l.lists):
        if all(choice[u] != choice[v] for u, v in edges):
            return True
    return False
