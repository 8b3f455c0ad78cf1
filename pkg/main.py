import argparse
import logging
import sys
from typing import List, Optional

from config import settings
from routers import artifacts, construction, recognition, split
from routers.common import ExitVerdict
from services.construction_service import ClawBoundExceeded, NotEClawFree, NotInterval

logger = logging.getLogger(__name__)

REFUTATION_LEVELS = {"off": logging.CRITICAL + 1, "info": logging.INFO, "trace": logging.DEBUG}


def configure_logging() -> None:
    logging.basicConfig(
        level=settings.log_level.upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    refutation = logging.getLogger("dinterval.refutation")
    refutation.setLevel(REFUTATION_LEVELS[settings.dinterval_log])
    refutation.disabled = settings.dinterval_log == "off"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dinterval",
        description="Unit d-interval constructions, split search and counterexample generators",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Include routers
    recognition.register(subparsers)
    construction.register(subparsers)
    split.register(subparsers)
    artifacts.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, dispatch to the subcommand handler and map the outcome to an exit code"""
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitVerdict.OK if e.code == 0 else ExitVerdict.INPUT_ERROR

    try:
        return int(args.handler(args))
    except (ClawBoundExceeded, NotInterval, NotEClawFree) as e:
        print(f"{args.command}: {e}", file=sys.stderr)
        return ExitVerdict.NO
    except (ValueError, OSError) as e:
        print(f"{args.command}: {e}", file=sys.stderr)
        return ExitVerdict.INPUT_ERROR
    except Exception:
        logger.exception(f"{args.command} failed")
        return ExitVerdict.INPUT_ERROR


if __name__ == "__main__":
    sys.exit(run())
