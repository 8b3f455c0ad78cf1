"""
Artifacts Router
Subcommands: verify, render, gen
"""

import argparse
import logging
from typing import Callable, Dict, List, Union

from models import DIntervalRep, Graph
from routers.common import ExitVerdict, add_output_flags, emit_artifact, emit_model, emit_representation, load_input
from services.file_service import file_service
from services.generators_service import generators_service
from services.interval_service import interval_service
from services.svg_service import svg_service

logger = logging.getLogger(__name__)

Generated = Union[Graph, DIntervalRep]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="check a representation against a graph")
    parser.add_argument("representation", help="representation file")
    parser.add_argument("graph", help="edge list file")
    parser.add_argument("--unit", action="store_true", help="require unit lengths")
    parser.add_argument("--disjoint", action="store_true", help="require disjoint parts per vertex")
    parser.add_argument("--balanced", action="store_true", help="require equal lengths per vertex")
    parser.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    parser.set_defaults(handler=verify)

    parser = subparsers.add_parser("render", help="draw a representation as SVG")
    parser.add_argument("representation", help="representation file")
    parser.add_argument("-o", "--out", help="SVG path (default stdout)")
    parser.set_defaults(handler=render)

    parser = subparsers.add_parser("gen", help="emit a named graph or representation")
    parser.add_argument("name", help="e.g. counterexample:0, counterexample-d:3, balanced-gadget:3, kbip:5,3, random:100,4,7")
    add_output_flags(parser)
    parser.set_defaults(handler=gen)


# =============================================================================
# GENERATOR NAMES
# =============================================================================

def _ints(argument: str, count: int) -> List[int]:
    values = [int(x) for x in argument.split(",")] if argument else []
    if len(values) != count:
        raise ValueError(f"expected {count} integer argument(s), got {argument!r}")
    return values


GENERATORS: Dict[str, Callable[[str], Generated]] = {
    "counterexample": lambda a: generators_service.counterexample_graph(*_ints(a or "0", 1)),
    "counterexample-d": lambda a: generators_service.counterexample_d(*_ints(a, 1)),
    "balanced-gadget": lambda a: generators_service.balanced_gadget(*_ints(a, 1)),
    "kbip": lambda a: generators_service.complete_bipartite(*_ints(a, 2)),
    "random": lambda a: generators_service.random_interval_rep(*_ints(a, 3)),
    "counterexample-rep": lambda a: generators_service.counterexample_interval_rep(),
    "counterexample-unit-rep": lambda a: generators_service.counterexample_unit_rep(),
    "alg-figure": lambda a: generators_service.alg_figure_rep()[0],
    "e-graph": lambda a: generators_service.e_graph(),
    "star": lambda a: generators_service.star(*_ints(a, 1)),
    "path": lambda a: generators_service.path(*_ints(a, 1)),
    "cycle": lambda a: generators_service.cycle(*_ints(a, 1)),
}


def generate(name: str) -> Generated:
    """Resolve "<kind>[:<args>]" to a generated instance"""
    kind, _, argument = name.partition(":")
    if kind not in GENERATORS:
        raise ValueError(f"unknown generator {kind!r}, expected one of {sorted(GENERATORS)}")
    try:
        return GENERATORS[kind](argument)
    except TypeError as e:
        raise ValueError(f"bad arguments for {kind}: {argument!r}") from e


# =============================================================================
# HANDLERS
# =============================================================================

def verify(args: argparse.Namespace) -> int:
    rep = file_service.read_representation_file(args.representation)
    graph, _ = load_input(args.graph)
    report = interval_service.verify_representation(
        rep, graph, require_unit=args.unit, require_disjoint=args.disjoint, require_balanced=args.balanced
    )
    if args.json:
        emit_model(report)
    elif report.ok:
        print("ok")
    else:
        for violation in report.violations:
            print(f"{violation.kind}: {violation.witness}")
    return ExitVerdict.OK if report.ok else ExitVerdict.NO


def render(args: argparse.Namespace) -> int:
    rep = file_service.read_representation_file(args.representation)
    emit_artifact(svg_service.render_svg(rep), args.out)
    return ExitVerdict.OK


def gen(args: argparse.Namespace) -> int:
    item = generate(args.name)
    if isinstance(item, DIntervalRep):
        emit_representation(item, args)
    else:
        emit_artifact(file_service.write_graph(item, comment=f"generated: {args.name}"), args.out)
    return ExitVerdict.OK
