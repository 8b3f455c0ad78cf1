"""
Split Router
Subcommand: check-split
"""

import argparse
import logging

from config import settings
from routers.common import ExitVerdict, add_threads_flag, emit_model, load_input
from schemas import SearchLimits
from services.file_service import file_service
from services.split_search_service import split_search_service

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("check-split", help="decide (disjoint) unit 2-interval membership")
    parser.add_argument("graph", help="edge list or representation file")
    parser.add_argument("--mode", choices=("disjoint", "nondisjoint"), default="disjoint")
    parser.add_argument("--node-budget", type=int, default=None, help="search node budget")
    parser.add_argument("--time-budget", type=float, default=None, help="wall clock budget in seconds")
    add_threads_flag(parser)
    parser.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    parser.add_argument("-o", "--out", help="write the unit 2-interval representation of a yes certificate")
    parser.set_defaults(handler=check_split)


def check_split(args: argparse.Namespace) -> int:
    graph, _ = load_input(args.graph)
    limits = SearchLimits(
        node_budget=args.node_budget or settings.node_budget,
        wall_clock_budget=args.time_budget or settings.time_budget_seconds,
        memo_limit=settings.memo_limit,
    )
    result = split_search_service.search_split(graph, args.mode, limits, threads=args.threads)

    if result.verdict == "yes" and args.out:
        rep = split_search_service.solution_to_representation(graph, result.solution, args.mode)
        file_service.write_text(args.out, file_service.dump_representation(rep))

    if args.json:
        emit_model(result)
    else:
        print(f"{result.verdict} ({args.mode}, {result.nodes} nodes, {result.elapsed_seconds:.2f}s)")
        if result.solution is not None:
            print(f"split vertices: {result.solution.split_vertices()}")

    if result.verdict == "yes":
        return ExitVerdict.OK
    return ExitVerdict.EXHAUSTED if result.verdict == "exhausted" else ExitVerdict.NO
