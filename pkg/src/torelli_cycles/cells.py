"""Cells of the complex of reduced weighted multicurves in a fixed class.

For an oriented multicurve with dual graph ``G`` and a class ``x``, the cell
is the polytope of nonnegative edge weightings representing ``x``.  Any two
such weightings differ by a combination of region boundaries, so the cell
is parametrized by a potential ``l`` on the vertices (modulo constants):

    weight(e) = base(e) + l(head e) - l(tail e)

and we pin ``l`` to zero on the first vertex.  The polytope is compact
exactly when ``G`` is recurrent.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil
from typing import Optional, Sequence

from . import linalg
from .dual_graph import (
    Edge, OrientedDualGraph, Vertex, WeightedCycle, contract_zero_edges, homology_class,
    is_recurrent)
from .errors import DomainError, InfeasibleError, PreconditionError
from .homology import HomologyClass


class DegenerateCellError(DomainError):
    pass


def weight_W(cycle: WeightedCycle) -> Fraction:
    """Total weight, i.e. the total length of the metric dual graph."""
    return sum(cycle.weights, Fraction(0))


class CellPolytope:
    """The cell of ``graph`` in the class ``target`` around a basepoint weighting."""

    def __init__(self, graph: OrientedDualGraph, target: HomologyClass,
                 basepoint: Optional[Sequence] = None):
        if target.genus != graph.surface_genus:
            raise PreconditionError("target class and graph have different genus")
        self.graph = graph
        self.target = target
        if basepoint is None:
            basepoint = _solve_basepoint(graph, target)
        self.basepoint = tuple(Fraction(b) for b in basepoint)
        total = HomologyClass.zero(graph.surface_genus)
        for e, b in zip(graph.edges, self.basepoint):
            total = total + b * e.label
        if total != target:
            raise PreconditionError("basepoint does not represent the target class")
        ids = graph.vertex_ids
        self._pos = {v: i for i, v in enumerate(ids)}

    @classmethod
    def from_cycle(cls, cycle: WeightedCycle) -> CellPolytope:
        return cls(cycle.graph, homology_class(cycle), cycle.weights)

    @property
    def n_params(self) -> int:
        return len(self.graph.vertices) - 1

    def weights_at(self, potential: Sequence) -> tuple:
        """Weights for the potential given on vertices 2..n (vertex 1 pinned at 0)."""
        ell = (Fraction(0),) + tuple(Fraction(p) for p in potential)
        return tuple(
            b + ell[self._pos[e.head]] - ell[self._pos[e.tail]]
            for e, b in zip(self.graph.edges, self.basepoint))

    def contains(self, potential: Sequence) -> bool:
        return all(w >= 0 for w in self.weights_at(potential))

    def cycle_at(self, potential: Sequence) -> WeightedCycle:
        return WeightedCycle(self.graph, self.weights_at(potential))

    def vertex_potentials(self) -> list[tuple]:
        """Potentials of all extreme points, by exhaustive tight-set enumeration.

        A vertex of the polytope makes ``n - 1`` independent constraints
        tight; independent edge constraints are exactly the spanning trees
        of the graph, and a tight tree determines the potential by
        propagation from the pinned vertex.
        """
        graph = self.graph
        if any(b < 0 for e, b in zip(graph.edges, self.basepoint) if e.is_loop):
            return []
        n = len(graph.vertices)
        candidates = [i for i, e in enumerate(graph.edges) if not e.is_loop]
        found = []
        seen = set()
        for tree in itertools.combinations(candidates, n - 1):
            ell = _tree_potential(graph, self.basepoint, tree, self._pos)
            if ell is None:
                continue
            point = tuple(ell[1:])
            if point in seen or not self.contains(point):
                continue
            seen.add(point)
            found.append(point)
        return sorted(found)

    def vertices(self) -> list[WeightedCycle]:
        return [self.cycle_at(p) for p in self.vertex_potentials()]

    def affine_dimension(self) -> int:
        """Affine rank of the extreme points."""
        pts = self.vertex_potentials()
        if not pts:
            raise InfeasibleError("empty cell")
        origin = pts[0]
        return linalg.rank([[a - b for a, b in zip(p, origin)] for p in pts[1:]]) if len(pts) > 1 else 0


def _solve_basepoint(graph: OrientedDualGraph, target: HomologyClass) -> list:
    labels = [[e.label.coords[i] for e in graph.edges] for i in range(2 * graph.surface_genus)]
    if not graph.edges:
        if target.is_zero():
            return []
        raise InfeasibleError("no curves to represent a nonzero class")
    sol = linalg.solve(labels, target.coords)
    if sol is None:
        raise InfeasibleError(f"no weighting of these curves represents {target}")
    return sol


def _tree_potential(graph, base, tree, pos) -> Optional[list]:
    """Potential making every edge of ``tree`` weightless, or None if not a spanning tree."""
    n = len(graph.vertices)
    adjacency = {i: [] for i in range(n)}
    for i in tree:
        e = graph.edges[i]
        t, h = pos[e.tail], pos[e.head]
        # weight 0 means l(h) - l(t) = -base
        adjacency[t].append((h, -base[i]))
        adjacency[h].append((t, base[i]))
    ell: list = [None] * n
    ell[0] = Fraction(0)
    stack = [0]
    while stack:
        u = stack.pop()
        for w, delta in adjacency[u]:
            if ell[w] is None:
                ell[w] = ell[u] + delta
                stack.append(w)
    if any(v is None for v in ell):
        return None
    return ell


def _require_compact(graph: OrientedDualGraph) -> None:
    if not graph.edges or not is_recurrent(graph):
        raise PreconditionError("graph is not recurrent: the cell is not compact")


def cell_dimension(graph: OrientedDualGraph) -> int:
    """Dimension of the cell: one less than the number of complementary regions."""
    _require_compact(graph)
    return len(graph.vertices) - 1


def cell_vertices(graph: OrientedDualGraph, x: HomologyClass) -> list[WeightedCycle]:
    """All extreme points of the cell of ``graph`` representing ``x``, exactly."""
    _require_compact(graph)
    verts = CellPolytope(graph, x).vertices()
    if not verts:
        raise InfeasibleError(f"no nonnegative weighting represents {x}")
    return verts


def in_Cx(cycle: WeightedCycle, x: HomologyClass) -> bool:
    """Whether the point lies in the curve-complex level ``W = 1``."""
    if not x.is_primitive():
        raise PreconditionError(f"{x} is not primitive")
    if homology_class(cycle) != x:
        raise PreconditionError("the weighted multicurve does not represent x")
    return weight_W(cycle) == 1


def _fresh(prefix: str, taken) -> str:
    taken = set(taken)
    if prefix not in taken:
        return prefix
    for i in itertools.count(1):
        if f"{prefix}{i}" not in taken:
            return f"{prefix}{i}"


def pinch(cycle: WeightedCycle, v: str, e1: str, e2: str, side: str, t,
          new_vertex: Optional[str] = None, new_edge: Optional[str] = None) -> WeightedCycle:
    """Pinch segments of length ``t`` of two edges entering (or exiting) ``v``.

    The pinched segments become a single new edge of weight ``t`` between
    ``v`` and a new pair-of-pants vertex; ``e1`` and ``e2`` lose ``t`` each.
    """
    graph = cycle.graph
    t = Fraction(t)
    if side not in ("entering", "exiting"):
        raise ValueError(f"side must be 'entering' or 'exiting', not {side!r}")
    if v not in graph.vertex_ids:
        raise PreconditionError(f"unknown vertex {v}")
    if e1 == e2:
        raise PreconditionError("pinch needs two distinct edges")
    for e in (e1, e2):
        if e not in graph.edge_ids:
            raise PreconditionError(f"unknown edge {e}")
        end = graph.edge(e).head if side == "entering" else graph.edge(e).tail
        if end != v:
            raise PreconditionError(f"edge {e} is not {side} {v}")
    if (graph.vertex(v).genus, graph.degree(v)) == (0, 3):
        raise PreconditionError(f"region {v} is a pair of pants and cannot be pinched")
    if not 0 < t < min(cycle.weight(e1), cycle.weight(e2)):
        raise PreconditionError("pinch length must satisfy 0 < t < min(weights)")

    w = new_vertex or _fresh(f"{v}'", graph.vertex_ids)
    f = new_edge or _fresh(f"{e1}+{e2}", graph.edge_ids)
    edges, weights = [], []
    for e, k in zip(graph.edges, cycle.weights):
        if e.id in (e1, e2):
            if side == "entering":
                e = Edge(e.id, e.tail, w, e.label)
            else:
                e = Edge(e.id, w, e.head, e.label)
            k = k - t
        edges.append(e)
        weights.append(k)
    label = graph.edge(e1).label + graph.edge(e2).label
    edges.append(Edge(f, w, v, label) if side == "entering" else Edge(f, v, w, label))
    weights.append(t)
    out = OrientedDualGraph(graph.surface_genus, graph.vertices + (Vertex(w, 0),), tuple(edges))
    return WeightedCycle(out, tuple(weights))


def is_P_edge(graph: OrientedDualGraph) -> bool:
    """Whether a 1-cell has a pair-of-pants region."""
    if len(graph.vertices) != 2:
        raise PreconditionError("a 1-cell dual graph has exactly two vertices")
    return any((v.genus, graph.degree(v.id)) == (0, 3) for v in graph.vertices)


def traverse_edge(cycle: WeightedCycle, region: str, contract: bool = False) -> WeightedCycle:
    """Slide across a 1-cell by adding multiples of the boundary of ``region``.

    Edges entering ``region`` grow and edges leaving it shrink until the
    first of them reaches zero.  The result is the far endpoint of the
    1-cell on the same two-vertex graph, so traversing back from the other
    region returns the starting point; with ``contract=True`` the vanished
    curves are deleted instead.
    """
    graph = cycle.graph
    if len(graph.vertices) != 2:
        raise PreconditionError("edge traversal needs a two-vertex graph")
    if region not in graph.vertex_ids:
        raise PreconditionError(f"unknown region {region}")
    shrinking = [i for i, e in enumerate(graph.edges) if e.tail == region and not e.is_loop]
    growing = [i for i, e in enumerate(graph.edges) if e.head == region and not e.is_loop]
    if not shrinking:
        raise PreconditionError(f"direction infeasible: no weight decreases out of {region}")
    t = min(cycle.weights[i] for i in shrinking)
    if t == 0:
        raise PreconditionError(f"direction infeasible: already at the end of the edge towards {region}")
    weights = list(cycle.weights)
    for i in shrinking:
        weights[i] -= t
    for i in growing:
        weights[i] += t
    out = WeightedCycle(graph, tuple(weights))
    return contract_zero_edges(out) if contract else out


@dataclass(frozen=True)
class Polygon:
    """Boundary of a 2-cell: ``sides[i]`` joins ``vertices[i]`` to ``vertices[i+1]``.

    Each side records the curves whose weight vanishes along it.
    """

    vertices: tuple
    sides: tuple

    def __len__(self) -> int:
        return len(self.vertices)


def _angle_key(center):
    def half(d):
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1

    def cmp(p, q):
        dp = (p[0] - center[0], p[1] - center[1])
        dq = (q[0] - center[0], q[1] - center[1])
        if half(dp) != half(dq):
            return half(dp) - half(dq)
        cross = dp[0] * dq[1] - dp[1] * dq[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return functools.cmp_to_key(cmp)


def _polytope(graph, x) -> CellPolytope:
    if isinstance(graph, WeightedCycle):
        return CellPolytope.from_cycle(graph)
    return CellPolytope(graph, x)


def two_cell_boundary(graph, x: Optional[HomologyClass] = None) -> Polygon:
    """Counterclockwise boundary walk of a 2-cell.

    ``graph`` is a three-vertex dual graph (with ``x`` given) or a weighted
    multicurve inside the cell.
    """
    cell = _polytope(graph, x)
    _require_compact(cell.graph)
    if len(cell.graph.vertices) != 3:
        raise DegenerateCellError("a 2-cell has a three-vertex dual graph")
    pts = cell.vertex_potentials()
    if not pts:
        raise InfeasibleError("empty cell")
    if cell.affine_dimension() != 2:
        raise DegenerateCellError("the cell is lower-dimensional")
    center = (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))
    pts.sort(key=_angle_key(center))
    verts = [cell.cycle_at(p) for p in pts]
    sides = []
    for a, b in zip(verts, verts[1:] + verts[:1]):
        sides.append(frozenset(
            e for e, wa, wb in zip(cell.graph.edge_ids, a.weights, b.weights) if wa == 0 and wb == 0))
    return Polygon(tuple(verts), tuple(sides))


def canonical_triangulation(graph, x: Optional[HomologyClass] = None) -> list[tuple]:
    """Simplices of the canonical subdivision of a compact cell.

    The cell is cut by the hyperplanes on which two regions sit at the
    same point of the circle, i.e. where a difference of potentials is an
    integer.  With an integral extreme point as basepoint these are the
    hyperplanes ``l_u - l_v in Z`` and ``l_v in Z``, whose chambers in each
    unit cube are the ``d!`` simplices ``m, m + e_s1, m + e_s1 + e_s2, ...``
    for permutations ``s``.  Every facet of the cell lies on one of them, so
    the cell is a union of such simplices and a simplex belongs to it iff its
    vertices do.  Each simplex is returned as a tuple of integral weighted
    multicurves.
    """
    cell = _polytope(graph, x)
    _require_compact(cell.graph)
    corners = cell.vertices()
    if not corners:
        raise InfeasibleError("empty cell")
    integral = [c for c in corners if all(w.denominator == 1 for w in c.weights)]
    if not integral:
        raise DomainError("cell has no integral extreme point; is the class integral?")
    cell = CellPolytope(cell.graph, cell.target, integral[0].weights)
    d = cell.n_params
    if d == 0:
        return [(cell.cycle_at(()),)]
    pts = cell.vertex_potentials()
    if any(c.denominator != 1 for p in pts for c in p):
        raise DomainError("coincidence hyperplanes are not integral for this cell")
    lo = [floor(min(p[i] for p in pts)) for i in range(d)]
    hi = [ceil(max(p[i] for p in pts)) for i in range(d)]

    @functools.lru_cache(maxsize=None)
    def inside(point):
        return cell.contains(point)

    simplices = []
    for m in itertools.product(*(range(a, b) for a, b in zip(lo, hi))):
        for perm in itertools.permutations(range(d)):
            current = list(m)
            chain = [tuple(current)]
            for i in perm:
                current[i] += 1
                chain.append(tuple(current))
            if all(inside(p) for p in chain):
                simplices.append(tuple(cell.cycle_at(p) for p in chain))
    return simplices
