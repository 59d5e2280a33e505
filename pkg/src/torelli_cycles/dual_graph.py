"""Oriented multicurves encoded by their dual graphs.

A vertex is a complementary region (with its genus), an edge is a curve of
the multicurve.  An edge points from the region on the negative side of its
curve to the region on the positive side, so the boundary of every region is
null-homologous exactly when, at each vertex, the labels of incoming edges
sum to the labels of outgoing edges.

Weights are exact :class:`fractions.Fraction` values throughout.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

import networkx as nx

from .errors import GraphError, PreconditionError
from .homology import HomologyClass


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int = 0


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    label: HomologyClass

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class OrientedDualGraph:
    """Directed multigraph with region genera and homology labels on edges.

    Construction only checks referential integrity; the topological
    invariants are reported by :func:`validate`.
    """

    surface_genus: int
    vertices: tuple
    edges: tuple = ()

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple(self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        vids = [v.id for v in vertices]
        if len(set(vids)) != len(vids):
            raise GraphError("duplicate vertex id")
        eids = [e.id for e in edges]
        if len(set(eids)) != len(eids):
            raise GraphError("duplicate edge id")
        known = set(vids)
        for v in vertices:
            if v.genus < 0:
                raise GraphError(f"vertex {v.id}: negative region genus")
        for e in edges:
            if e.tail not in known or e.head not in known:
                raise GraphError(f"edge {e.id}: unknown endpoint")
            if e.label.genus != self.surface_genus:
                raise GraphError(
                    f"edge {e.id}: label length must be 2g = {2 * self.surface_genus}")
        object.__setattr__(self, "_vindex", {v.id: v for v in vertices})
        object.__setattr__(self, "_eindex", {e.id: e for e in edges})

    @classmethod
    def realize(cls, vertices: Sequence, arcs: Sequence) -> OrientedDualGraph:
        """Build a graph with labels coming from an actual surface.

        ``vertices`` is a sequence of ``(id, region_genus)`` and ``arcs`` of
        ``(id, tail, head)``.  The surface glued from the regions has genus
        ``sum(region genera) + first Betti number``.  Non-tree edges of a
        breadth-first spanning tree get the classes ``a_1, a_2, ...``; tree
        edge labels are then forced by the boundary relation.  The ``b_k``
        are the transverse loops through the non-tree edges, and the region
        handles take the remaining basis pairs.
        """
        vs = tuple(Vertex(str(v), int(g)) for v, g in vertices)
        arcs = [(str(e), str(t), str(h)) for e, t, h in arcs]
        betti = len(arcs) - len(vs) + 1
        genus = sum(v.genus for v in vs) + betti
        if genus < 1:
            raise GraphError("realized surface would be a sphere")

        adjacency: dict[str, list] = {v.id: [] for v in vs}
        for e, t, h in arcs:
            adjacency[t].append((e, h))
            adjacency[h].append((e, t))
        root = vs[0].id
        parent_edge: dict[str, str] = {}
        order = [root]
        seen = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for e, w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    parent_edge[w] = e
                    order.append(w)
                    queue.append(w)
        if len(seen) != len(vs):
            raise GraphError("graph is not connected")

        tree = set(parent_edge.values())
        labels: dict[str, HomologyClass] = {}
        k = 0
        for e, _, _ in arcs:
            if e not in tree:
                k += 1
                labels[e] = HomologyClass.a(genus, k)
        ends = {e: (t, h) for e, t, h in arcs}
        zero = HomologyClass.zero(genus)
        for v in reversed(order[1:]):
            pe = parent_edge[v]
            into = out = zero
            for e, t, h in arcs:
                if e == pe or t == h:
                    continue
                if h == v:
                    into = into + labels[e]
                if t == v:
                    out = out + labels[e]
            labels[pe] = (out - into) if ends[pe][1] == v else (into - out)
        edges = tuple(Edge(e, t, h, labels[e]) for e, t, h in arcs)
        return cls(genus, vs, edges)

    def vertex(self, vid: str) -> Vertex:
        return self._vindex[vid]

    def edge(self, eid: str) -> Edge:
        return self._eindex[eid]

    @property
    def vertex_ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    @property
    def edge_ids(self) -> list[str]:
        return [e.id for e in self.edges]

    def degree(self, vid: str) -> int:
        """Number of edge ends at ``vid``; a loop counts twice."""
        return sum((e.tail == vid) + (e.head == vid) for e in self.edges)

    def euler_contribution(self, vid: str) -> int:
        """Euler characteristic of the region: 2 - 2 genus - boundary circles."""
        return 2 - 2 * self.vertex(vid).genus - self.degree(vid)

    def in_edges(self, vid: str) -> list[Edge]:
        return [e for e in self.edges if e.head == vid]

    def out_edges(self, vid: str) -> list[Edge]:
        return [e for e in self.edges if e.tail == vid]

    def to_networkx(self, support: Optional[Iterable[str]] = None) -> nx.MultiDiGraph:
        keep = set(self.edge_ids if support is None else support)
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertex_ids)
        for e in self.edges:
            if e.id in keep:
                g.add_edge(e.tail, e.head, key=e.id)
        return g


@dataclass(frozen=True)
class Violation:
    invariant: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.invariant} ({self.subject}): {self.message}"


def validate(graph: OrientedDualGraph) -> list[Violation]:
    """All violated dual-graph invariants; an empty list means the graph is valid."""
    found = []
    g = graph.surface_genus
    if g < 2:
        found.append(Violation("surface genus", "graph", f"genus {g} < 2"))
    if graph.vertices and not nx.is_weakly_connected(graph.to_networkx()):
        found.append(Violation("connected", "graph", "underlying graph is not connected"))
    if not graph.vertices:
        found.append(Violation("connected", "graph", "graph has no vertices"))

    zero = HomologyClass.zero(g)
    for v in graph.vertices:
        into = sum((e.label for e in graph.in_edges(v.id)), zero)
        out = sum((e.label for e in graph.out_edges(v.id)), zero)
        if into != out:
            found.append(Violation(
                "boundary relation", v.id,
                f"region boundary not null-homologous: in {into} != out {out}"))

    total = 0
    for v in graph.vertices:
        chi = graph.euler_contribution(v.id)
        total += chi
        if chi > -1:
            kind = {(0, 0): "sphere", (0, 1): "disk", (0, 2): "annulus", (1, 0): "torus"}.get(
                (v.genus, graph.degree(v.id)), "non-hyperbolic")
            found.append(Violation("region type", v.id, f"{kind} region"))
    if total != 2 - 2 * g:
        found.append(Violation(
            "euler characteristic", "graph", f"regions sum to {total}, expected {2 - 2 * g}"))
    return found


def _check_support(graph: OrientedDualGraph, support) -> list[str]:
    if support is None:
        support = graph.edge_ids
    support = list(support)
    unknown = set(support) - set(graph.edge_ids)
    if unknown:
        raise GraphError(f"unknown edges in support: {sorted(unknown)}")
    return support


def is_recurrent(graph: OrientedDualGraph, support: Optional[Iterable[str]] = None) -> bool:
    """Whether every support edge lies on a directed cycle of the support subgraph."""
    support = _check_support(graph, support)
    if not support:
        raise PreconditionError("recurrence needs a nonempty support")
    component = {}
    for i, comp in enumerate(nx.strongly_connected_components(graph.to_networkx(support))):
        for v in comp:
            component[v] = i
    return all(component[graph.edge(e).tail] == component[graph.edge(e).head] for e in support)


MAX_SINK_VERTICES = 20


def sink_subsurfaces(graph: OrientedDualGraph,
                     support: Optional[Iterable[str]] = None) -> list[frozenset]:
    """Nonempty proper vertex sets that no support edge leaves.

    Each such set is a subsurface whose oriented boundary is a
    submulticurve.  Sets are listed by size, then by vertex order.
    """
    support = _check_support(graph, support)
    ids = graph.vertex_ids
    n = len(ids)
    if n > MAX_SINK_VERTICES:
        raise ValueError(f"sink enumeration is limited to {MAX_SINK_VERTICES} vertices")
    pos = {v: i for i, v in enumerate(ids)}
    arcs = [(pos[graph.edge(e).tail], pos[graph.edge(e).head]) for e in support]
    found = []
    for size in range(1, n):
        for combo in itertools.combinations(range(n), size):
            inside = set(combo)
            if all(h in inside for t, h in arcs if t in inside):
                found.append(frozenset(ids[i] for i in combo))
    return found


@dataclass(frozen=True)
class WeightedCycle:
    """A weighted oriented multicurve: a dual graph with nonnegative weights.

    ``weights`` is stored in edge order; pass a mapping from edge id to
    weight (missing edges get weight 0) or a sequence in edge order.
    """

    graph: OrientedDualGraph
    weights: tuple

    def __post_init__(self):
        w = self.weights
        if isinstance(w, Mapping):
            unknown = set(w) - set(self.graph.edge_ids)
            if unknown:
                raise GraphError(f"weights for unknown edges {sorted(unknown)}")
            w = tuple(Fraction(w.get(e, 0)) for e in self.graph.edge_ids)
        else:
            w = tuple(Fraction(x) for x in w)
            if len(w) != len(self.graph.edges):
                raise GraphError("one weight per edge expected")
        if any(x < 0 for x in w):
            raise PreconditionError("weights must be nonnegative")
        object.__setattr__(self, "weights", w)

    def weight(self, eid: str) -> Fraction:
        return self.weights[self.graph.edge_ids.index(eid)]

    @property
    def weight_map(self) -> dict[str, Fraction]:
        return dict(zip(self.graph.edge_ids, self.weights))

    @property
    def support(self) -> list[str]:
        return [e for e, w in zip(self.graph.edge_ids, self.weights) if w > 0]


def homology_class(cycle: WeightedCycle) -> HomologyClass:
    """Sum of weight times label over all edges."""
    total = HomologyClass.zero(cycle.graph.surface_genus)
    for e, w in zip(cycle.graph.edges, cycle.weights):
        if w:
            total = total + w * e.label
    return total


def is_reduced(cycle: WeightedCycle) -> bool:
    """No submulticurve of the positive-weight support is a boundary.

    Zero-weight curves are not part of the multicurve, so the regions on
    either side of them are merged before testing recurrence.
    """
    if not cycle.support:
        return True
    return is_recurrent(contract_zero_edges(cycle).graph)


def contract_zero_edges(cycle: WeightedCycle) -> WeightedCycle:
    """Delete zero-weight curves, merging the regions on either side.

    A component of the zero-weight subgraph with ``k`` vertices and ``m``
    edges becomes one region of genus ``sum + m - (k - 1)``; it keeps the
    id of its first vertex in graph order.
    """
    graph = cycle.graph
    zero = [e for e, w in zip(graph.edges, cycle.weights) if w == 0]
    if not zero:
        return cycle
    parent = {v: v for v in graph.vertex_ids}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    order = {v: i for i, v in enumerate(graph.vertex_ids)}
    for e in zero:
        a, b = find(e.tail), find(e.head)
        if a != b:
            if order[b] < order[a]:
                a, b = b, a
            parent[b] = a
    genus = {}
    size = {}
    nzero = {}
    for v in graph.vertices:
        r = find(v.id)
        genus[r] = genus.get(r, 0) + v.genus
        size[r] = size.get(r, 0) + 1
    for e in zero:
        r = find(e.tail)
        nzero[r] = nzero.get(r, 0) + 1
    vertices = tuple(
        Vertex(v.id, genus[v.id] + nzero.get(v.id, 0) - (size[v.id] - 1))
        for v in graph.vertices if find(v.id) == v.id)
    kept = [(e, w) for e, w in zip(graph.edges, cycle.weights) if w != 0]
    edges = tuple(Edge(e.id, find(e.tail), find(e.head), e.label) for e, _ in kept)
    return WeightedCycle(OrientedDualGraph(graph.surface_genus, vertices, edges),
                         tuple(w for _, w in kept))


def _sink_components(graph: OrientedDualGraph) -> list[set]:
    g = graph.to_networkx()
    cond = nx.condensation(g)
    return [set(cond.nodes[n]["members"]) for n in cond.nodes if cond.out_degree(n) == 0]


def drain_path(cycle: WeightedCycle) -> list[WeightedCycle]:
    """Successive stages of draining ``cycle`` down to a reduced multicurve.

    Each step subtracts ``t`` times the boundary of every minimal bounding
    subsurface at once (the sink components of the condensation), with
    ``t`` the smallest weight that reaches zero, then deletes the curves
    whose weight vanished.  The first entry is ``cycle`` with its
    zero-weight curves contracted; every later entry has strictly fewer
    edges than the one before it.
    """
    if homology_class(cycle).is_zero():
        raise PreconditionError(
            "draining would annihilate all curves: the homology class is zero")
    current = contract_zero_edges(cycle)
    path = [current]
    while not is_reduced(current):
        graph = current.graph
        entering = set()
        for sink in _sink_components(graph):
            entering.update(e.id for e in graph.edges if e.head in sink and e.tail not in sink)
        t = min(w for e, w in zip(graph.edge_ids, current.weights) if e in entering)
        weights = tuple(w - t if e in entering else w
                        for e, w in zip(graph.edge_ids, current.weights))
        current = contract_zero_edges(WeightedCycle(graph, weights))
        path.append(current)
    return path


def drain(cycle: WeightedCycle) -> WeightedCycle:
    """Deformation-retract a weighted multicurve onto a reduced one, same class."""
    return drain_path(cycle)[-1]
