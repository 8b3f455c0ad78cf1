"""
Construction Router
Subcommands: build-unit, build-disjoint-unit, bench
"""

import argparse
import json
import logging
import time
from typing import List

from config import settings
from routers.common import ExitVerdict, add_output_flags, add_threads_flag, emit_representation, load_input
from schemas import BenchRow
from services.construction_service import construction_service
from services.generators_service import generators_service
from services.interval_service import interval_service

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    for name, handler, text in (
        ("build-unit", build_unit, "unit d-interval representation of a K_{1,2d+1}-free interval graph"),
        ("build-disjoint-unit", build_disjoint_unit, "disjoint variant for E-claw-free inputs"),
    ):
        parser = subparsers.add_parser(name, help=text)
        parser.add_argument("graph", help="edge list or one-interval representation file")
        parser.add_argument("-d", type=int, required=True, help="intervals per vertex")
        parser.add_argument("--no-pad", action="store_true", help="do not pad vertices with dummy intervals")
        add_threads_flag(parser)
        add_output_flags(parser)
        parser.set_defaults(handler=handler)

    parser = subparsers.add_parser("bench", help="scaling of the piece construction")
    parser.add_argument("--sizes", default="25000,50000,100000", help="comma separated interval counts")
    parser.add_argument("--max-m", type=int, default=4, help="bound on disjoint neighbours per interval")
    parser.add_argument("--seed", type=int, default=1)
    add_threads_flag(parser)
    parser.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    parser.set_defaults(handler=bench)


# =============================================================================
# HELPER FUNCTIONS
# =============================================================================

def _source(path: str):
    graph, rep = load_input(path)
    return graph, (rep if rep is not None and rep.is_single() else graph)


def _pad(args: argparse.Namespace) -> bool:
    return False if args.no_pad else settings.pad_dummies


def _threads(args: argparse.Namespace) -> int:
    return settings.threads if args.threads is None else args.threads


def _finish(result, graph, args: argparse.Namespace, disjoint: bool) -> int:
    report = interval_service.verify_representation(result, graph, require_unit=True, require_disjoint=disjoint)
    if not report.ok:
        logger.error(f"Constructed representation failed verification: {report.kinds()}")
        return ExitVerdict.INPUT_ERROR
    emit_representation(result, args)
    return ExitVerdict.OK


# =============================================================================
# HANDLERS
# =============================================================================

def build_unit(args: argparse.Namespace) -> int:
    graph, source = _source(args.graph)
    result = construction_service.build_unit_d_rep(source, args.d, pad=_pad(args), threads=_threads(args))
    return _finish(result, graph, args, disjoint=False)


def build_disjoint_unit(args: argparse.Namespace) -> int:
    graph, source = _source(args.graph)
    result = construction_service.build_disjoint_unit_d_rep_eclaw_free(
        source, args.d, pad=_pad(args), threads=_threads(args)
    )
    return _finish(result, graph, args, disjoint=True)


def bench(args: argparse.Namespace) -> int:
    sizes = [int(size) for size in args.sizes.split(",") if size.strip()]
    rows: List[BenchRow] = []
    for n in sizes:
        rep = generators_service.random_interval_rep(n, args.max_m, args.seed)
        started = time.perf_counter()
        plans = construction_service.plan_all(rep, threads=_threads(args))
        construction_service.build_underlying_family(plans)
        seconds = time.perf_counter() - started
        ratio = seconds / rows[-1].seconds if rows and rows[-1].seconds > 0 else None
        rows.append(BenchRow(intervals=n, seconds=seconds, ratio=ratio))
        logger.info(f"bench n={n}: {seconds:.3f}s")

    if args.json:
        print(json.dumps([row.model_dump(mode="json") for row in rows], sort_keys=True))
    else:
        print(f"{'intervals':>10}  {'seconds':>9}  {'ratio':>6}")
        for row in rows:
            ratio = f"{row.ratio:.2f}" if row.ratio is not None else "-"
            print(f"{row.intervals:>10}  {row.seconds:>9.3f}  {ratio:>6}")
    return ExitVerdict.OK
