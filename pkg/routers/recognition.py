"""
Recognition Router
Subcommands: recognize-interval, claw-check
"""

import argparse
import logging

from routers.common import ExitVerdict, add_output_flags, emit_model, emit_representation, load_input
from schemas import ClawCheckResult
from services.graph_service import graph_service
from services.interval_service import interval_service
from services.recognition_service import recognition_service

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("recognize-interval", help="decide interval graph membership")
    parser.add_argument("graph", help="edge list or representation file")
    add_output_flags(parser)
    parser.set_defaults(handler=recognize_interval)

    parser = subparsers.add_parser("claw-check", help="look for an induced K_{1,t} or an E-claw")
    parser.add_argument("graph", help="edge list or representation file")
    parser.add_argument("-t", type=int, default=3, help="number of leaves of the star (default 3)")
    parser.add_argument("--e-claw", action="store_true", help="check E-claw freeness instead")
    parser.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    parser.set_defaults(handler=claw_check)


# =============================================================================
# HANDLERS
# =============================================================================

def recognize_interval(args: argparse.Namespace) -> int:
    graph, _ = load_input(args.graph)
    rep = recognition_service.recognize_interval(graph)
    if rep is None:
        print(f"not an interval graph: {graph}")
        return ExitVerdict.NO

    report = interval_service.verify_representation(rep, graph)
    if not report.ok:
        logger.error(f"Recognized representation failed verification: {report.kinds()}")
        return ExitVerdict.INPUT_ERROR
    emit_representation(rep, args)
    return ExitVerdict.OK


def claw_check(args: argparse.Namespace) -> int:
    graph, _ = load_input(args.graph)
    if args.e_claw:
        free, witness = graph_service.is_e_claw_free(graph)
        result = ClawCheckResult(free=free, witness=witness)
        text = "E-claw-free" if free else f"E-claw {witness}"
    else:
        star = graph_service.has_induced_star(graph, args.t)
        result = ClawCheckResult(free=star is None, t=args.t, witness=[star.center, *star.leaves] if star else None)
        text = f"K_{{1,{args.t}}}-free" if star is None else f"induced K_{{1,{args.t}}} {star}"

    if args.json:
        emit_model(result)
    else:
        print(text)
    return ExitVerdict.OK if result.free else ExitVerdict.NO
