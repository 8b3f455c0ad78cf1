"""
Shared Router Helpers
Exit codes, input loading and output emission for the subcommand routers
"""

import argparse
import json
import logging
import sys
from enum import IntEnum
from pathlib import Path
from typing import Optional, Tuple

from pydantic import BaseModel

from models import DIntervalRep, Graph
from services.file_service import file_service
from services.interval_service import interval_service

logger = logging.getLogger(__name__)


class ExitVerdict(IntEnum):
    OK = 0
    NO = 1
    INPUT_ERROR = 2
    EXHAUSTED = 3


# =============================================================================
# ARGUMENTS
# =============================================================================

def add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    parser.add_argument("-o", "--out", help="write the artifact to this path instead of stdout")


def add_threads_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=None, help="parallelism degree (default from settings)")


# =============================================================================
# INPUT
# =============================================================================

def load_input(path: str) -> Tuple[Graph, Optional[DIntervalRep]]:
    """Read an edge list or a representation file; a representation also yields its graph"""
    if file_service.looks_like_representation(path):
        rep = file_service.read_representation_file(path)
        return interval_service.d_intersection_graph(rep), rep
    return file_service.read_graph_file(path), None


# =============================================================================
# OUTPUT
# =============================================================================

def dumps(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), sort_keys=True)


def emit_model(model: BaseModel) -> None:
    print(dumps(model))


def emit_artifact(text: str, out: Optional[str]) -> None:
    if out:
        file_service.write_text(Path(out), text)
    else:
        sys.stdout.write(text)


def emit_representation(rep: DIntervalRep, args: argparse.Namespace) -> None:
    """Representation JSON; compact and key-sorted with --json, indented by ascending id otherwise"""
    if args.json:
        text = dumps(file_service.representation_document(rep)) + "\n"
    else:
        text = file_service.dump_representation(rep)
    emit_artifact(text, args.out)
