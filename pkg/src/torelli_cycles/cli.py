"""Command line interface.

Exit status: 0 on success, 1 on domain errors (bad files, violated
preconditions), 2 on usage errors.  Every command accepts ``--json`` for a
machine-readable report with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import cells, dual_graph, genus2, io, twists
from .errors import DomainError
from .homology import HomologyClass


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "")
        raise _HelpExit(self.format_help() if message is None else message)


class _HelpExit(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _klass(text: str) -> HomologyClass:
    coords = _ints(text)
    if not coords or len(coords) % 2:
        raise argparse.ArgumentTypeError(f"label length must be 2g, got {len(coords)} coordinates")
    return HomologyClass.from_coords(coords)


def _slope(text: str) -> genus2.Slope:
    try:
        return genus2.Slope.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a slope p/q, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")

    parser = _Parser(prog="torelli-cycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check dual-graph invariants")
    p.add_argument("graph")

    p = sub.add_parser("recurrent", parents=[common], help="recurrence and sink subsurfaces")
    p.add_argument("graph")
    p.add_argument("--support", type=lambda s: [e for e in s.split(",") if e],
                   help="comma-separated edge ids (default: all edges)")

    p = sub.add_parser("drain", parents=[common], help="drain to a reduced multicurve")
    p.add_argument("graph")
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("cell", parents=[common], help="cells of the multicurve complex")
    p.add_argument("action", choices=["dim", "vertices", "triangulate", "boundary"])
    p.add_argument("graph")
    p.add_argument("--class", dest="klass", type=_klass,
                   help="target class (default: class of the file's weights)")
    p.add_argument("--dot", action="store_true", help="DOT output (boundary only)")

    g2 = sub.add_parser("genus2", help="the genus-2 slope and tree model")
    g2sub = g2.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = g2sub.add_parser("orbit", parents=[common])
    p.add_argument("slope", type=_slope)
    p = g2sub.add_parser("descend", parents=[common])
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = g2sub.add_parser("path", parents=[common])
    p.add_argument("s1", type=_slope)
    p.add_argument("s2", type=_slope)
    p = g2sub.add_parser("tree", parents=[common])
    p.add_argument("--max-w", type=int, required=True)

    p = sub.add_parser("torelli", parents=[common], help="is a twist word in the Torelli group")
    p.add_argument("--word", required=True, help='e.g. "T[1,0,0,0]^1 T[1,0,0,0]^-1"')
    p.add_argument("--genus", type=int, help="needed only for the empty word")

    p = sub.add_parser("lantern", parents=[common], help="check the lantern relation on homology")
    for name in "abcdxyz":
        p.add_argument(f"--{name}", type=_klass)

    p = sub.add_parser("pointpush", parents=[common], help="push a marked point around a loop")
    p.add_argument("--gamma", type=_klass, required=True)
    p.add_argument("--absolute", type=_klass)
    p.add_argument("--arc", type=int, default=1)
    return parser


def _weights(cycle) -> dict:
    return {e: io.format_rational(w) for e, w in zip(cycle.graph.edge_ids, cycle.weights)}


def _target(args, cycle) -> HomologyClass:
    return args.klass if args.klass is not None else dual_graph.homology_class(cycle)


def _cmd_validate(args):
    cycle = io.parse_graph_file(args.graph)
    return {"valid": True, "vertices": len(cycle.graph.vertices),
            "edges": len(cycle.graph.edges)}, "valid: true"


def _cmd_recurrent(args):
    cycle = io.parse_graph_file(args.graph)
    support = args.support if args.support is not None else cycle.graph.edge_ids
    rec = dual_graph.is_recurrent(cycle.graph, support)
    sinks = [sorted(s) for s in dual_graph.sink_subsurfaces(cycle.graph, support)]
    text = f"recurrent: {str(rec).lower()}"
    if sinks:
        text += "\nsink subsurfaces: " + " ".join("{" + ",".join(s) + "}" for s in sinks)
    return {"recurrent": rec, "sink_subsurfaces": sinks}, text


def _cmd_drain(args):
    cycle = io.parse_graph_file(args.graph)
    path = dual_graph.drain_path(cycle)
    out = path[-1]
    report = {"steps": len(path) - 1, "class": list(dual_graph.homology_class(out).coords),
              "result": io.cycle_to_json(out)}
    text = io.graph_to_dot(out) if args.dot else (
        f"steps: {len(path) - 1}\n" + json.dumps(io.cycle_to_json(out), indent=2))
    return report, text


def _cmd_cell(args):
    cycle = io.parse_graph_file(args.graph)
    graph = cycle.graph
    if args.action == "dim":
        d = cells.cell_dimension(graph)
        return {"dimension": d}, f"dimension: {d}"
    x = _target(args, cycle)
    if args.action == "vertices":
        verts = cells.cell_vertices(graph, x)
        data = [_weights(v) for v in verts]
        return {"class": list(x.coords), "vertices": data}, json.dumps(data, indent=2)
    if args.action == "triangulate":
        simplices = cells.canonical_triangulation(graph, x)
        data = [[_weights(v) for v in s] for s in simplices]
        return {"class": list(x.coords), "simplices": data}, json.dumps(data, indent=2)
    polygon = cells.two_cell_boundary(graph, x)
    data = {"vertices": [_weights(v) for v in polygon.vertices],
            "W": [io.format_rational(cells.weight_W(v)) for v in polygon.vertices],
            "sides": [sorted(s) for s in polygon.sides]}
    return data, io.polygon_to_dot(polygon) if args.dot else json.dumps(data, indent=2)


def _cmd_genus2(args):
    if args.action == "orbit":
        orbit = genus2.slope_orbit(args.slope)
        sep = orbit == genus2.Orbit.O10
        text = f"{args.slope}: {orbit.value}" + (" (separating)" if sep else "")
        return {"slope": str(args.slope), "orbit": orbit.value, "separating": sep}, text
    if args.action == "descend":
        start = genus2.WeightPair(args.p, args.q)
        path = [start] + genus2.euclidean_descent(start)
        text = "\n".join(f"{w}  W={w.W}" for w in path)
        return {"path": [[w.p, w.q] for w in path], "W": [w.W for w in path]}, text
    if args.action == "path":
        word = genus2.farey_tree_path(args.s1, args.s2)
        text = " ".join(f"T({s})^{k}" for s, k in word) or "(empty word)"
        return {"word": [[str(s), k] for s, k in word]}, text
    tree = genus2.quotient_tree(args.max_w)
    return {"nodes": [[w.p, w.q] for w in tree.nodes],
            "edges": [[[tree.parent[w].p, tree.parent[w].q], [w.p, w.q]]
                      for w in tree.nodes if tree.parent[w] is not None]}, io.tree_to_dot(tree)


def _cmd_torelli(args):
    word = twists.parse_word(args.word)
    result = twists.is_torelli(word, args.genus)
    return {"torelli": result, "word": str(word)}, f"torelli: {str(result).lower()}"


def _cmd_lantern(args):
    given = {k: getattr(args, k) for k in "abcdxyz"}
    if all(v is None for v in given.values()):
        classes = twists.standard_lantern()
    elif any(v is None for v in given.values()):
        raise UsageError("lantern: give all seven classes --a ... --z or none")
    else:
        classes = given
    ok = twists.lantern_matrix_check(**classes)
    return ({"lantern": ok, "classes": {k: list(v.coords) for k, v in classes.items()}},
            f"lantern: {str(ok).lower()}")


def _cmd_pointpush(args):
    gamma = args.gamma
    absolute = args.absolute if args.absolute is not None else HomologyClass.zero(gamma.genus)
    out = twists.point_push(gamma, twists.RelativeClass(absolute, args.arc))
    return ({"absolute": list(out.absolute.coords), "arc": out.arc_coefficient},
            f"absolute: {out.absolute}  arc: {out.arc_coefficient}")


COMMANDS = {
    "validate": _cmd_validate, "recurrent": _cmd_recurrent, "drain": _cmd_drain,
    "cell": _cmd_cell, "genus2": _cmd_genus2, "torelli": _cmd_torelli,
    "lantern": _cmd_lantern, "pointpush": _cmd_pointpush,
}


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; returns ``(exit status, report text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        return 2, str(exc).strip() + "\n" + parser.format_usage()
    except _HelpExit as exc:
        return 0, str(exc)
    as_json = getattr(args, "json", False)
    try:
        report, text = COMMANDS[args.command](args)
    except UsageError as exc:
        return 2, str(exc)
    except (DomainError, ValueError, FileNotFoundError) as exc:
        msg = str(exc)
        if isinstance(exc, FileNotFoundError) and "file not found" not in msg:
            msg = f"file not found: {exc.filename}"
        if as_json:
            return 1, json.dumps({"ok": False, "error": msg}, sort_keys=True)
        return 1, f"error: {msg}"
    if as_json:
        return 0, json.dumps({"ok": True, "command": args.command, **report}, sort_keys=True)
    return 0, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status == 0 else sys.stderr
    print(text.rstrip("\n"), file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
