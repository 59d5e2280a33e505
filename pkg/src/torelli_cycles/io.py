"""File formats: graph JSON and Graphviz DOT.

Graph JSON::

    {"surface_genus": 2,
     "vertices": [{"id": "A", "genus": 0}, ...],
     "edges": [{"id": "a", "tail": "A", "head": "B", "label": [1, 0, 0, 0]}, ...],
     "weights": {"a": "3/1", "b": "1/2"}}

Weights are exact rationals written as ``"p/q"`` strings; missing weights
are zero.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .cells import Polygon
from .dual_graph import Edge, OrientedDualGraph, Vertex, WeightedCycle, validate
from .errors import GraphError
from .genus2 import QuotientTree
from .homology import HomologyClass


class GraphValidationError(GraphError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise GraphError(f"weights must be exact integers or 'p/q' strings, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise GraphError(f"malformed rational {value!r}") from None


def cycle_to_json(cycle: WeightedCycle) -> dict:
    graph = cycle.graph
    return {
        "surface_genus": graph.surface_genus,
        "vertices": [{"id": v.id, "genus": v.genus} for v in graph.vertices],
        "edges": [{"id": e.id, "tail": e.tail, "head": e.head, "label": list(e.label.coords)}
                  for e in graph.edges],
        "weights": {e: format_rational(w) for e, w in zip(graph.edge_ids, cycle.weights)},
    }


def cycle_from_json(data: dict) -> WeightedCycle:
    try:
        g = int(data["surface_genus"])
        vertices = tuple(Vertex(str(v["id"]), int(v.get("genus", 0))) for v in data["vertices"])
        edges = []
        for e in data.get("edges", []):
            label = [int(c) for c in e["label"]]
            if len(label) != 2 * g:
                raise GraphError(f"edge {e['id']}: label length must be 2g = {2 * g}, got {len(label)}")
            edges.append(Edge(str(e["id"]), str(e["tail"]), str(e["head"]), HomologyClass(g, tuple(label))))
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph document: missing or bad field {exc}") from None
    graph = OrientedDualGraph(g, vertices, tuple(edges))
    weights = {str(k): parse_rational(v) for k, v in data.get("weights", {}).items()}
    return WeightedCycle(graph, weights)


def parse_graph_file(path) -> WeightedCycle:
    """Read and validate a graph JSON file."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"file not found: {path}")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON in {path}: {exc}") from None
    cycle = cycle_from_json(data)
    violations = validate(cycle.graph)
    if violations:
        raise GraphValidationError(violations)
    return cycle


def write_graph_file(cycle: WeightedCycle, path) -> None:
    Path(path).write_text(json.dumps(cycle_to_json(cycle), indent=2) + "\n")


def _quote(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(obj, name: str = "G") -> str:
    """DOT text for a dual graph or weighted multicurve."""
    if isinstance(obj, WeightedCycle):
        graph, weights = obj.graph, obj.weights
    else:
        graph, weights = obj, None
    lines = [f"digraph {name} {{"]
    for v in graph.vertices:
        lines.append(f"  {_quote(v.id)} [label={_quote(f'{v.id} g={v.genus}')}];")
    for i, e in enumerate(graph.edges):
        text = f"{e.id} {e.label}" if weights is None else f"{e.id} w={format_rational(weights[i])}, {e.label}"
        lines.append(f"  {_quote(e.tail)} -> {_quote(e.head)} [label={_quote(text)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: QuotientTree) -> str:
    lines = ["digraph quotient_tree {"]
    for node in tree.nodes:
        lines.append(f"  {_quote(node)} [label={_quote(f'{node} W={node.W}')}];")
    for node in tree.nodes:
        for child in tree.children.get(node, []):
            lines.append(f"  {_quote(node)} -> {_quote(child)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def polygon_to_dot(polygon: Polygon) -> str:
    """The boundary of a 2-cell as a cycle graph; nodes carry weights and W."""
    lines = ["graph two_cell {"]
    names = []
    for i, v in enumerate(polygon.vertices):
        ws = ",".join(format_rational(w) for w in v.weights)
        names.append(f"v{i}")
        lines.append(f"  v{i} [label={_quote(f'({ws}) W={format_rational(sum(v.weights))}')}];")
    for i, side in enumerate(polygon.sides):
        j = (i + 1) % len(names)
        lines.append(f"  {names[i]} -- {names[j]} [label={_quote('zero: ' + ','.join(sorted(side)))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
