"""
File Format Service
Reads and writes the edge-list graph format and the JSON representation format
"""

import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple, Union

from pydantic import ValidationError

from models import DIntervalRep, Graph, GraphError, Interval, RepresentationError
from schemas import RepresentationDocument

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

_ID_PATTERN = re.compile(r"[0-9]+")


class GraphFormatError(GraphError):
    """Raised when an edge-list document is malformed; carries the offending line number"""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class RepresentationFormatError(RepresentationError):
    """Raised when a representation JSON document cannot be decoded"""
    pass


class FileService:
    """Parsing and serialization of graphs and d-interval representations"""

    # =============================================================================
    # EDGE LISTS
    # =============================================================================

    def parse_graph(self, text: str) -> Graph:
        """Parse an edge-list document.

        Lines starting with '#' (and blank lines) are ignored; the first other
        line must be "p <n>", every following one "e <u> <v>" with u < v.

        Args:
            text: The document

        Returns:
            The described Graph

        Raises:
            GraphFormatError: On a malformed line, an out-of-range id, a reversed or duplicate edge, or a self-loop
        """
        n = None
        seen: Dict[Tuple[int, int], int] = {}
        edges: List[Tuple[int, int]] = []

        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()

            if n is None:
                if len(fields) != 2 or fields[0] != "p" or not _ID_PATTERN.fullmatch(fields[1]):
                    raise GraphFormatError(f"expected 'p <n>', got {line!r}", line_no)
                n = int(fields[1])
                continue

            if len(fields) != 3 or fields[0] != "e":
                raise GraphFormatError(f"expected 'e <u> <v>', got {line!r}", line_no)
            if not all(_ID_PATTERN.fullmatch(x) for x in fields[1:]):
                raise GraphFormatError(f"vertex ids must be integers, got {line!r}", line_no)
            u, v = int(fields[1]), int(fields[2])
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", line_no)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} out of range 1..{n}", line_no)
            if u > v:
                raise GraphFormatError(f"edge endpoints must be listed as u < v, got {u} {v}", line_no)
            key = (u, v)
            if key in seen:
                raise GraphFormatError(
                    f"duplicate edge {key[0]}-{key[1]} (first on line {seen[key]})", line_no
                )
            seen[key] = line_no
            edges.append(key)

        if n is None:
            raise GraphFormatError("missing 'p <n>' header")
        return Graph(n, edges)

    def write_graph(self, g: Graph, comment: str = "") -> str:
        lines = [f"# {row}" for row in comment.splitlines()] if comment else []
        lines.append(f"p {g.n}")
        lines.extend(f"e {u} {v}" for u, v in g.edges)
        return "\n".join(lines) + "\n"

    def read_graph_file(self, path: PathLike) -> Graph:
        logger.debug(f"Reading edge list {path}")
        return self.parse_graph(Path(path).read_text(encoding="utf-8"))

    # =============================================================================
    # REPRESENTATIONS
    # =============================================================================

    def load_representation(self, text: str) -> DIntervalRep:
        try:
            document = RepresentationDocument.model_validate_json(text)
        except ValidationError as e:
            raise RepresentationFormatError(f"Invalid representation document: {e}") from e

        parts = {}
        for key, pairs in document.vertices.items():
            parts[int(key)] = [Interval(Fraction(l.strip()), Fraction(r.strip())) for l, r in pairs]
        return DIntervalRep(document.d, parts)

    def representation_document(self, rep: DIntervalRep) -> RepresentationDocument:
        vertices = {
            str(v): [(str(iv.l), str(iv.r)) for iv in intervals]
            for v, intervals in sorted(rep.items())
        }
        return RepresentationDocument(d=rep.d, vertices=vertices)

    def dump_representation(self, rep: DIntervalRep) -> str:
        document = self.representation_document(rep)
        # ascending numeric ids, not the lexicographic order sort_keys would give
        return json.dumps(document.model_dump(mode="json"), indent=2) + "\n"

    def read_representation_file(self, path: PathLike) -> DIntervalRep:
        logger.debug(f"Reading representation {path}")
        return self.load_representation(Path(path).read_text(encoding="utf-8"))

    def write_text(self, path: PathLike, text: str) -> None:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")

    def looks_like_representation(self, path: PathLike) -> bool:
        """Representation files are JSON objects; everything else is read as an edge list"""
        path = Path(path)
        if path.suffix.lower() == ".json":
            return True
        head = path.read_text(encoding="utf-8").lstrip()[:1]
        return head == "{"


# Global file service instance
file_service = FileService()
