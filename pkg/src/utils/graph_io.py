"""
Graph file reading: the JSON document format and the plain edge-list format.

JSON:   {"n": 4, "edges": [[1, 2], ...], "adjacency_order": {"2": [3, 1]}}
Edges:  first line "n m", then m lines "u v"; blank lines and '#' comments skipped.
"""

import json
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError

from src.exceptions import DomainError, GraphParseError
from src.graph_core import build_graph
from src.logger_config import mclosed_logger
from src.models import Graph, Labeling
from src.utils.path_utils import resolve_input_path

FORMATS = ("auto", "json", "edges")


class GraphDocument(BaseModel):
    """On-disk JSON shape of a graph."""

    n: int = Field(..., ge=1, description="Number of vertices")
    edges: List[List[int]] = Field(default_factory=list, description="Unordered vertex pairs")
    adjacency_order: Optional[Dict[int, List[int]]] = Field(
        None, description="Optional neighbor order per vertex; missing vertices keep ascending order")
    name: Optional[str] = Field(None, description="Free-form instance name")


def _format_validation_error(e: ValidationError) -> str:
    first = e.errors()[0]
    where = ".".join(str(part) for part in first["loc"])
    return f"{where}: {first['msg']}" if where else first["msg"]


def _edge_lines(text: str) -> List[int]:
    """Line number of each entry of the top-level "edges" array, in order."""
    match = re.search(r'"edges"\s*:\s*\[', text)
    if match is None:
        return []
    lines = []
    depth = 1
    for pos in range(match.end(), len(text)):
        ch = text[pos]
        if ch == "[":
            depth += 1
            if depth == 2:
                lines.append(text.count("\n", 0, pos) + 1)
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
    return lines


def _check_edges(doc: GraphDocument, lines: List[int], source: str) -> None:
    seen: Dict[Tuple[int, int], int] = {}
    for index, pair in enumerate(doc.edges):
        line = lines[index] if index < len(lines) else None
        if len(pair) != 2:
            raise GraphParseError(f"edges[{index}]: expected two endpoints, got {pair}", source, line)
        u, v = pair
        if u == v:
            raise GraphParseError(f"edges[{index}]: loop at vertex {u}", source, line)
        if not (1 <= u <= doc.n and 1 <= v <= doc.n):
            raise GraphParseError(f"edges[{index}]: endpoint outside 1..{doc.n} in {pair}", source, line)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"edges[{index}]: duplicate of edges[{seen[key]}]", source, line)
        seen[key] = index


def parse_json_graph(text: str, source: str = "<input>") -> Graph:
    """
    Parse the JSON document format.

    Raises:
        GraphParseError: on invalid JSON, a schema mismatch or an invalid graph;
            problems with one edge carry that entry's line
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError(f"invalid JSON: {e.msg}", source, e.lineno)

    try:
        doc = GraphDocument.model_validate(raw)
    except ValidationError as e:
        loc = e.errors()[0]["loc"]
        line = None
        if len(loc) >= 2 and loc[0] == "edges" and isinstance(loc[1], int):
            lines = _edge_lines(text)
            line = lines[loc[1]] if loc[1] < len(lines) else None
        raise GraphParseError(_format_validation_error(e), source, line)

    _check_edges(doc, _edge_lines(text), source)
    try:
        return build_graph(doc.n, doc.edges, doc.adjacency_order)
    except DomainError as e:
        raise GraphParseError(str(e), source)


def parse_edge_list(text: str, source: str = "<input>") -> Graph:
    """
    Parse the "n m" header plus m "u v" lines format.

    Raises:
        GraphParseError: with the offending line number
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        fields = content.split()
        if len(fields) != 2:
            raise GraphParseError(f"expected two integers, got {content!r}", source, lineno)
        try:
            rows.append((lineno, int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphParseError(f"expected two integers, got {content!r}", source, lineno)

    if not rows:
        raise GraphParseError("missing 'n m' header", source, 1)
    header_line, n, m = rows[0]
    if n < 1 or m < 0:
        raise GraphParseError(f"bad header: n={n} m={m}", source, header_line)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise GraphParseError(f"header announces {m} edges, found {len(body)}", source, last)

    edges = []
    seen = {}
    for lineno, u, v in body:
        if u == v or not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"invalid edge {u} {v} for n={n}", source, lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {u} {v} (first on line {seen[key]})", source, lineno)
        seen[key] = lineno
        edges.append(key)
    return build_graph(n, edges)


def load_graph(path: Union[str, Path], format: str = "auto") -> Graph:
    """
    Load a graph from a file; bare names resolve against the bundled data directory.

    Args:
        path: File path or bundled instance name ("fig2")
        format: auto, json or edges; auto picks json for a .json suffix or a
            document starting with '{'

    Raises:
        GraphParseError: unreadable or malformed input (exit 65)
    """
    if format not in FORMATS:
        raise GraphParseError(f"unknown format {format!r}, expected one of {FORMATS}", str(path))
    resolved = resolve_input_path(str(path))
    try:
        text = resolved.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphParseError(f"cannot read input: {e.strerror or e}", str(resolved))

    chosen = format
    if chosen == "auto":
        chosen = "json" if resolved.suffix.lower() == ".json" or text.lstrip().startswith("{") else "edges"

    graph = parse_json_graph(text, str(resolved)) if chosen == "json" else parse_edge_list(text, str(resolved))
    mclosed_logger.debug(f"📄 Loaded {resolved} ({chosen}): n={graph.n}, |E|={graph.edge_count}")
    return graph


def parse_labeling(text: str, n: int) -> Labeling:
    """
    Inline labeling "3,1,2" or "[3, 1, 2]": entry v is the label of vertex v.

    Raises:
        GraphParseError: if the text is not a list of integers
        NotBijectiveError: if it is not a permutation of 1..n
    """
    stripped = text.strip().lstrip("[").rstrip("]")
    try:
        perm = tuple(int(part) for part in stripped.replace(" ", "").split(",") if part)
    except ValueError:
        raise GraphParseError(f"labeling {text!r} is not a comma-separated list of integers", "--labeling")
    if len(perm) != n:
        raise GraphParseError(f"labeling has {len(perm)} entries, the graph has {n} vertices", "--labeling")
    return Labeling(perm=perm)


def dump_graph(g: Graph, path: Union[str, Path]) -> Path:
    """Write g in the JSON document format."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8") as handle:
        json.dump(g.as_json(), handle, indent=2)
    return target
