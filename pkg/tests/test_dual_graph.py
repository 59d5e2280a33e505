from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from torelli_cycles import corpus
from torelli_cycles.dual_graph import (
    Edge, OrientedDualGraph, Vertex, WeightedCycle, contract_zero_edges, drain, drain_path,
    homology_class, is_recurrent, is_reduced, sink_subsurfaces, validate)
from torelli_cycles.errors import PreconditionError
from torelli_cycles.homology import HomologyClass

A1 = HomologyClass.a(2, 1)
A2 = HomologyClass.a(2, 2)
ZERO = HomologyClass.zero(2)


def graph(g, vertices, edges):
    return OrientedDualGraph(g, tuple(Vertex(*v) for v in vertices), tuple(Edge(*e) for e in edges))


def on_cycle(arcs, k):
    """Brute force: arc k lies on a directed cycle iff its tail is reachable from its head."""
    t, h = arcs[k]
    seen, stack = {h}, [h]
    while stack:
        u = stack.pop()
        for a, b in arcs:
            if a == u and b not in seen:
                seen.add(b)
                stack.append(b)
    return t in seen


def invariants(g: OrientedDualGraph) -> set:
    return {v.invariant for v in validate(g)}


class TestValidate:
    def test_theta_ok(self, theta):
        assert validate(theta) == []

    def test_annulus(self):
        g = graph(2, [("A", 0), ("B", 2)], [("e", "A", "B", ZERO), ("f", "B", "A", ZERO)])
        found = validate(g)
        assert any(v.invariant == "region type" and v.subject == "A" and "annulus" in v.message
                   for v in found)

    def test_boundary_relation(self):
        g = graph(2, [("A", 0), ("B", 0)],
                  [("a", "A", "B", A1), ("b", "A", "B", A2), ("c", "B", "A", A1)])
        found = validate(g)
        assert {"boundary relation"} == {v.invariant for v in found}
        assert any("region boundary not null-homologous" in v.message for v in found)

    def test_euler(self):
        g = graph(3, [("A", 0), ("B", 0)],
                  [("a", "A", "B", HomologyClass.a(3, 1)), ("b", "A", "B", HomologyClass.a(3, 2)),
                   ("c", "B", "A", HomologyClass.a(3, 1) + HomologyClass.a(3, 2))])
        assert invariants(g) == {"euler characteristic"}

    def test_disconnected(self):
        g = graph(4, [("A", 1), ("B", 1)], [("a", "A", "A", HomologyClass.a(4, 1)),
                                            ("b", "B", "B", HomologyClass.a(4, 2))])
        assert "connected" in invariants(g)

    def test_unknown_endpoint(self):
        with pytest.raises(Exception):
            graph(2, [("A", 0)], [("a", "A", "Z", A1)])

    @pytest.mark.parametrize("seed", range(30))
    def test_corpus_graphs_valid(self, seed):
        rng = corpus.make_rng(seed)
        assert validate(corpus.random_valid_graph(rng)) == []
        assert validate(corpus.random_recurrent_graph(rng)) == []


class TestRecurrence:
    def test_single_loop(self):
        g = graph(2, [("A", 1)], [("a", "A", "A", A1)])
        assert validate(g) == []
        assert is_recurrent(g)

    def test_theta(self, theta):
        assert is_recurrent(theta)
        assert sink_subsurfaces(theta) == []

    def test_sink(self):
        g = graph(2, [("u", 0), ("v", 0)], [("e", "u", "v", ZERO), ("f", "u", "v", ZERO)])
        assert not is_recurrent(g)
        assert sink_subsurfaces(g) == [frozenset({"v"})]

    def test_chain(self):
        g = graph(2, [("u", 0), ("v", 0), ("w", 0)], [("e", "u", "v", ZERO), ("f", "v", "w", ZERO)])
        assert sink_subsurfaces(g) == [frozenset({"w"}), frozenset({"v", "w"})]

    def test_empty_support(self, theta):
        with pytest.raises(PreconditionError):
            is_recurrent(theta, [])

    def test_support_subset(self, theta):
        assert not is_recurrent(theta, ["a", "b"])
        assert is_recurrent(theta, ["a", "c"])
        assert sink_subsurfaces(theta, ["a", "b"]) == [frozenset({"B"})]

    @settings(max_examples=200)
    @given(st.integers(1, 4).flatmap(lambda n: st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=1, max_size=7)
        .map(lambda arcs: (n, arcs))))
    def test_against_brute_force(self, data):
        n, arcs = data
        g = graph(2, [(f"v{i}", 0) for i in range(n)],
                  [(f"e{k}", f"v{t}", f"v{h}", ZERO) for k, (t, h) in enumerate(arcs)])
        expected = all(on_cycle(arcs, k) for k in range(len(arcs)))
        assert is_recurrent(g) == expected
        # every sink set is closed, and all closed sets are found
        found = set(sink_subsurfaces(g))
        for mask in range(1, 2 ** n - 1):
            inside = {f"v{i}" for i in range(n) if mask >> i & 1}
            closed = all(f"v{h}" in inside for t, h in arcs if f"v{t}" in inside)
            assert (frozenset(inside) in found) == closed


class TestReduced:
    def test_theta_positive(self, theta):
        assert is_reduced(WeightedCycle(theta, {"a": 1, "b": 2, "c": 3}))

    def test_sink_support(self, theta):
        # a and c positive, b zero: the support a, c is a cycle
        assert is_reduced(WeightedCycle(theta, {"a": 1, "c": 1}))

    def test_non_recurrent_support(self):
        u = HomologyClass.a(3, 1)
        g = graph(3, [("a", 1), ("b", 1)], [("e1", "a", "b", u), ("e2", "a", "b", -u)])
        assert not is_reduced(WeightedCycle(g, {"e1": 2, "e2": 1}))

    def test_empty_support(self, theta):
        assert is_reduced(WeightedCycle(theta, {}))

    def test_vertex_of_genus2_tree(self, theta):
        # pa + qb is a vertex of the tree: a and b alone do not bound
        assert is_reduced(WeightedCycle(theta, {"a": 5, "b": 3}))


class TestHomologyClass:
    def test_zero_weights(self, theta):
        assert homology_class(WeightedCycle(theta, {})).is_zero()

    def test_theta(self, theta):
        assert homology_class(WeightedCycle(theta, {"a": 5, "b": 3})) == 5 * A1 + 3 * A2

    def test_rational(self, theta):
        c = WeightedCycle(theta, {"a": Fraction(1, 2), "c": Fraction(1, 3)})
        assert homology_class(c) == Fraction(5, 6) * A1 + Fraction(1, 3) * A2

    def test_negative_weight_rejected(self, theta):
        with pytest.raises(PreconditionError):
            WeightedCycle(theta, {"a": -1})


class TestContract:
    def test_no_zero(self, theta):
        c = WeightedCycle(theta, {"a": 1, "b": 1, "c": 1})
        assert contract_zero_edges(c) == c

    def test_merge_distinct(self, theta):
        out = contract_zero_edges(WeightedCycle(theta, {"a": 0, "b": 1, "c": 2}))
        (v,) = out.graph.vertices
        assert (v.genus, out.graph.degree(v.id)) == (0, 4)
        assert validate(out.graph) == []

    def test_zero_loop(self):
        g = graph(2, [("v", 0), ("w", 1)], [("l", "v", "v", A1), ("e", "v", "w", ZERO)])
        assert validate(g) == []
        out = contract_zero_edges(WeightedCycle(g, {"e": 1}))
        v = out.graph.vertex("v")
        assert (v.genus, out.graph.degree("v")) == (1, 1)
        assert validate(out.graph) == []

    @pytest.mark.parametrize("seed", range(40))
    def test_preserves_invariants(self, seed):
        rng = corpus.make_rng(100 + seed)
        g = corpus.random_valid_graph(rng)
        c = corpus.random_weights(rng, g, low=0, high=3)
        out = contract_zero_edges(c)
        assert validate(out.graph) == []
        assert homology_class(out) == homology_class(c)
        assert all(w > 0 for w in out.weights)


class TestDrain:
    def test_example(self):
        u = HomologyClass.a(3, 1)
        g = graph(3, [("a", 1), ("b", 1)], [("e1", "a", "b", u), ("e2", "a", "b", -u)])
        assert validate(g) == []
        c = WeightedCycle(g, {"e1": 2, "e2": 1})
        path = drain_path(c)
        assert len(path) == 2
        out = path[-1]
        (e,) = out.graph.edges
        (v,) = out.graph.vertices
        assert e.is_loop and e.label == u and out.weights == (1,)
        assert homology_class(out) == u
        assert validate(out.graph) == []

    def test_reduced_unchanged(self, theta):
        c = WeightedCycle(theta, {"a": 2, "b": 1, "c": 1})
        assert drain(c) == c

    def test_zero_class(self):
        g = graph(2, [("a", 0), ("b", 1)], [("e", "a", "b", ZERO), ("l", "a", "a", A1)])
        with pytest.raises(PreconditionError, match="annihilate"):
            drain(WeightedCycle(g, {"e": 1}))

    def test_union_of_sinks_would_stall(self):
        # sink sets {u,v} and {v,w} cover every vertex, so their union has no
        # boundary; draining must still progress
        zero = HomologyClass.zero(3)
        g = graph(3, [("u", 1), ("v", 0), ("w", 1)],
                  [("e", "u", "v", zero), ("f", "w", "v", zero), ("l", "v", "v", HomologyClass.a(3, 1))])
        assert frozenset({"u", "v"}) in sink_subsurfaces(g) and frozenset({"v", "w"}) in sink_subsurfaces(g)
        assert validate(g) == []
        c = WeightedCycle(g, {"e": 2, "f": 1, "l": 1})
        out = drain(c)
        assert is_reduced(out)
        assert homology_class(out) == homology_class(c)
        assert [e.id for e in out.graph.edges] == ["l"]

    @pytest.mark.parametrize("seed", range(60))
    def test_properties(self, seed):
        rng = corpus.make_rng(1000 + seed)
        g = corpus.random_valid_graph(rng)
        c = corpus.random_weights(rng, g, low=0, high=4)
        path = drain_path(c)
        out = path[-1]
        assert is_reduced(out)
        assert homology_class(out) == homology_class(c)
        assert len(path) - 1 <= len(g.edges)
        assert drain(out) == out
        assert validate(out.graph) == []


class TestRealize:
    @pytest.mark.parametrize("seed", range(30))
    def test_labels_span_exactly_the_boundaries(self, seed):
        g = corpus.random_recurrent_graph(corpus.make_rng(seed))
        labels = sympy.Matrix([[e.label.coords[i] for e in g.edges]
                               for i in range(2 * g.surface_genus)])
        assert len(g.edges) - labels.rank() == len(g.vertices) - 1
