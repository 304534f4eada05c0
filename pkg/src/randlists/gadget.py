"""Planted blow-up gadgets: graphs engineered to become non-colourable as
soon as one copy samples the planted lists.

An instance is floor(n/delta) disjoint copies of the d-blow-up of a base
graph (which must be non-colourable from its planted lists), padded with
isolated filler vertices up to exactly n. The filler vertices receive lists
like everyone else but never affect colourability.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ColourableBaseError, GraphParseError
from .graphs import Graph, blow_up
from .lists import ListAssignment
from .solver import exact_list_colouring


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    g0: Graph
    planted: tuple[tuple[int, ...], ...]  # base lists, indexed by g0 vertex
    d: int
    copies: int
    delta: int
    # classes[c][v] = vertices of copy c playing the role of base vertex v
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def k(self) -> int:
        return len(self.planted[0])


def build_gadget(
    g0: Graph,
    l0: list[tuple[int, ...]] | tuple[tuple[int, ...], ...],
    d: int,
    n: int,
    delta: int,
) -> GadgetInstance:
    """Assemble the instance; rejects colourable bases with a proof colouring.

    Requires d * |V(g0)| <= delta (each copy fits the degree budget) and at
    least one copy, i.e. n // delta >= 1.
    """
    planted = tuple(tuple(sorted(lst)) for lst in l0)
    if len(planted) != g0.n:
        raise ValueError(f"planted lists cover {len(planted)} of {g0.n} vertices")
    sizes = {len(lst) for lst in planted}
    if len(sizes) != 1:
        raise ValueError("planted lists must all have the same size")
    (k,) = sizes
    if k < 1:
        raise ValueError("planted lists must be non-empty")
    if d < 0:
        raise ValueError("multiplicity must be >= 0")
    if d * g0.n > delta:
        raise ValueError(
            f"degree budget violated: d*|V(g0)| = {d * g0.n} > delta = {delta}"
        )
    copies = n // delta
    if copies < 1:
        raise ValueError("need at least one copy: n // delta >= 1")
    base_adj = {v: g0.adj[v] for v in range(g0.n)}
    m0 = max(c for lst in planted for c in lst)
    proof = exact_list_colouring(
        range(g0.n), base_adj, ListAssignment(k, m0, planted), cap=g0.n
    )
    if proof is not None:
        raise ColourableBaseError(proof.assignment)

    if d >= 1:
        blown, class_map = blow_up(g0, d)
        copy_size = blown.n
    else:
        copy_size = 0
    edges = []
    classes = []
    for c in range(copies):
        offset = c * copy_size
        copy_classes: list[list[int]] = [[] for _ in range(g0.n)]
        if d >= 1:
            for u, v in blown.edges():
                edges.append((offset + u, offset + v))
            for i, origin in enumerate(class_map):
                copy_classes[origin].append(offset + i)
        classes.append(tuple(tuple(cls) for cls in copy_classes))
    if copies * copy_size > n:
        raise ValueError("internal: copies exceed the vertex budget")
    graph = Graph(n, edges)
    return GadgetInstance(
        graph=graph,
        g0=g0,
        planted=planted,
        d=d,
        copies=copies,
        delta=delta,
        classes=tuple(classes),
    )


def has_bad_copy(inst: GadgetInstance, l: ListAssignment) -> bool:
    """True iff some copy has, in every origin class, a vertex whose sampled
    list equals the planted list of that class."""
    if l.n != inst.graph.n:
        raise ValueError(f"assignment covers {l.n} vertices, graph has {inst.graph.n}")
    for copy_classes in inst.classes:
        bad = True
        for v, cls in enumerate(copy_classes):
            target = inst.planted[v]
            if not any(l[u] == target for u in cls):
                bad = False
                break
        if bad:
            return True
    return False


def load_gadget_json(path: str) -> tuple[GadgetInstance, int]:
    """Load a gadget spec: base graph edge list, planted lists, d, n, delta.

    Returns the instance and the implied list size k.
    """
    with open(path, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    try:
        base_n = int(spec["base_n"])
        base_edges = [(int(u), int(v)) for u, v in spec["base_edges"]]
        planted = tuple(tuple(int(c) for c in lst) for lst in spec["planted_lists"])
        d = int(spec["d"])
        n = int(spec["n"])
        delta = int(spec["delta"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphParseError(f"bad gadget spec: {exc}") from exc
    g0 = Graph(base_n, base_edges)
    inst = build_gadget(g0, planted, d, n, delta)
    return inst, inst.k
