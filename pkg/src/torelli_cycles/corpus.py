"""Generators for test corpora of dual graphs.

Randomized generators take a :class:`random.Random`; :func:`make_rng`
seeds one from ``TORELLI_CYCLES_SEED`` so runs are reproducible.
"""

from __future__ import annotations

import itertools
import os
import random
from fractions import Fraction
from math import gcd

import networkx as nx

from .dual_graph import Edge, OrientedDualGraph, Vertex, WeightedCycle, homology_class
from .homology import HomologyClass

DEFAULT_SEED = 20100207


def make_rng(offset: int = 0) -> random.Random:
    seed = int(os.environ.get("TORELLI_CYCLES_SEED", DEFAULT_SEED))
    return random.Random(seed + offset)


def theta_graph() -> OrientedDualGraph:
    """The genus-2 edge: two pants, ``a, b`` from A to B and ``c`` back.

    Labels: ``[a] = a1``, ``[b] = a2``, ``[c] = a1 + a2``.
    """
    a1, a2 = HomologyClass.a(2, 1), HomologyClass.a(2, 2)
    return OrientedDualGraph(2, (Vertex("A"), Vertex("B")), (
        Edge("a", "A", "B", a1), Edge("b", "A", "B", a2), Edge("c", "B", "A", a1 + a2)))


def _assign_genera(rng, n, arcs, extra_genus=0.3):
    degree = [0] * n
    for t, h in arcs:
        degree[t] += 1
        degree[h] += 1
    genera = []
    for d in degree:
        g = 1 if d <= 2 else 0
        if rng.random() < extra_genus:
            g += 1
        genera.append(g)
    betti = len(arcs) - n + 1
    if sum(genera) + betti < 2:
        genera[rng.randrange(n)] += 2 - sum(genera) - betti
    return genera


def _build(n, arcs, genera) -> OrientedDualGraph:
    return OrientedDualGraph.realize(
        [(f"v{i}", g) for i, g in enumerate(genera)],
        [(f"e{k}", f"v{t}", f"v{h}") for k, (t, h) in enumerate(arcs)])


def random_recurrent_graph(rng, max_vertices: int = 6, max_extra: int = 3) -> OrientedDualGraph:
    """A valid strongly connected dual graph with realizable labels."""
    n = rng.randint(1, max_vertices)
    order = list(range(n))
    rng.shuffle(order)
    arcs = [(order[i], order[(i + 1) % n]) for i in range(n)]
    for _ in range(rng.randint(0, max_extra)):
        arcs.append((rng.randrange(n), rng.randrange(n)))
    rng.shuffle(arcs)
    return _build(n, arcs, _assign_genera(rng, n, arcs))


def random_valid_graph(rng, max_vertices: int = 6, max_extra: int = 3) -> OrientedDualGraph:
    """A valid connected dual graph, usually not recurrent."""
    n = rng.randint(1, max_vertices)
    arcs = []
    for v in range(1, n):
        u = rng.randrange(v)
        arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    # at least one arc beyond the tree, otherwise every label is forced to zero
    for _ in range(rng.randint(1, max(1, max_extra))):
        arcs.append((rng.randrange(n), rng.randrange(n)))
    rng.shuffle(arcs)
    return _build(n, arcs, _assign_genera(rng, n, arcs))


def random_weights(rng, graph: OrientedDualGraph, low: int = 1, high: int = 5) -> WeightedCycle:
    """Random integer weights in ``[low, high]`` with nonzero homology class."""
    if all(e.label.is_zero() for e in graph.edges) or high < 1:
        raise ValueError("no weighting of these curves has a nonzero class")
    while True:
        cycle = WeightedCycle(graph, tuple(rng.randint(low, high) for _ in graph.edges))
        if not homology_class(cycle).is_zero():
            return cycle


def primitive_interior_point(rng, graph: OrientedDualGraph) -> WeightedCycle:
    """A strictly positive rational weighting whose class is primitive."""
    cycle = random_weights(rng, graph)
    x = homology_class(cycle)
    g = 0
    for c in x.coords:
        g = gcd(g, c)
    return WeightedCycle(graph, tuple(Fraction(w, g) for w in cycle.weights))


def all_digraphs(max_vertices: int = 4, max_edges: int = 6, connected: bool = True):
    """Every directed multigraph (loops allowed) on labelled vertices.

    With ``connected`` only weakly connected ones are produced, otherwise
    every multigraph without isolated vertices.

    Yields ``OrientedDualGraph`` objects with zero labels in genus 2; only
    the combinatorics matters for recurrence questions.
    """
    for n in range(1, max_vertices + 1):
        ids = [f"v{i}" for i in range(n)]
        vertices = tuple(Vertex(v) for v in ids)
        pairs = list(itertools.product(range(n), repeat=2))
        zero = HomologyClass.zero(2)
        for m in range(1, max_edges + 1):
            for arcs in itertools.combinations_with_replacement(pairs, m):
                if connected and not _connected(n, arcs):
                    continue
                if not connected and len({v for arc in arcs for v in arc}) < n:
                    continue
                edges = tuple(Edge(f"e{k}", ids[t], ids[h], zero) for k, (t, h) in enumerate(arcs))
                yield OrientedDualGraph(2, vertices, edges)


def _connected(n, arcs) -> bool:
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for t, h in arcs:
        parent[find(t)] = find(h)
    return len({find(v) for v in range(n)}) == 1


def plateau_edge(rng) -> WeightedCycle:
    """An interior point of a 1-cell on which the total weight is constant.

    Two regions joined by ``m >= 2`` edges each way, so the region A is not
    a pair of pants and two of its entering edges can be pinched.
    """
    m = rng.randint(2, 3)
    arcs = [(0, 1)] * m + [(1, 0)] * m
    loops = rng.randint(0, 1)
    arcs += [(0, 0)] * loops
    genera = [rng.randint(0, 1), rng.randint(0, 1)]
    graph = _build(2, arcs, genera)
    return primitive_interior_point(rng, graph)


def is_strongly_connected(graph: OrientedDualGraph) -> bool:
    return nx.is_strongly_connected(graph.to_networkx())
