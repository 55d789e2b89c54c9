"""
Text, JSON, JSON-lines, CSV and DOT renderings of toolkit results.

Schemas (frozen, see docs/FORMATS.md):
    edge table JSON   {"N": int, "d": int, "rows": [[int, ...], ...]}
    cycles JSON-lines {"N": int, "d": int} then one JSON array per line
    histogram CSV     header "n,f", one row per neighbor count, sorted by n
    graph JSON        {"N": int, "d": int, "nodes": [[...], ...], "edges": [[s, t], ...]}
    Hamilton JSON-lines
                      {"N", "d", "join_rule", "closed", "exhausted", "count"} then
                      {"cycle": [...], "move": "cross=a,b;join=p,q" | null} per line
"""

from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple
import json
import logging

import networkx as nx
from pydantic import ValidationError

from app.models.crossjoin_models import CrossJoinGraph, CrossJoinMove
from app.models.cycle_models import DeBruijnCycle
from app.models.digraph_models import DigraphParams, EdgeTable
from app.models.hamilton_models import HamiltonPathResult
from app.services.cycle_service import cycle_service
from app.utils.errors import DomainError

logger = logging.getLogger(__name__)


def _dumps(payload: object) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _params_from_header(line: str, source: str) -> DigraphParams:
    try:
        header = json.loads(line)
        return DigraphParams(N=header["N"], d=header["d"])
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise DomainError(f"{source}: malformed header line ({e})")
    except ValidationError as e:
        raise DomainError(f"{source}: invalid parameters in header ({e.errors()[0]['msg']})")


# Edge table

def edge_table_text(table: EdgeTable) -> str:
    return "\n".join(
        f"{x} -> {', '.join(str(y) for y in row)}" for x, row in enumerate(table.rows)
    )


def edge_table_json(table: EdgeTable) -> str:
    return _dumps({"N": table.params.N, "d": table.params.d, "rows": table.rows})


def edge_table_dot(table: EdgeTable) -> str:
    """
    DOT digraph of G_B(N, d); repeated residues (N = d) become parallel edges
    """
    graph = nx.MultiDiGraph(name=f"G_B_{table.params.N}_{table.params.d}")
    graph.add_nodes_from(range(table.params.N))
    for x, row in enumerate(table.rows):
        for r, y in enumerate(row):
            graph.add_edge(x, y, label=str(r))
    return nx.nx_pydot.to_pydot(graph).to_string()


# Cycles

def cycles_json(params: DigraphParams, cycles: Iterable[DeBruijnCycle]) -> str:
    return _dumps({"N": params.N, "d": params.d, "cycles": [list(c.vertices) for c in cycles]})


def write_cycles_jsonl(stream: TextIO, params: DigraphParams, cycles: Iterable[DeBruijnCycle]) -> int:
    """
    Stream cycles as JSON-lines: a parameter header, then one array per line

    Returns:
        Number of cycles written
    """
    stream.write(_dumps({"N": params.N, "d": params.d}) + "\n")
    count = 0
    for cycle in cycles:
        stream.write(_dumps(list(cycle.vertices)) + "\n")
        count += 1
    return count


def read_cycles_jsonl(lines: Sequence[str], source: str = "<cycles>",
                      params: Optional[DigraphParams] = None) -> Tuple[DigraphParams, List[DeBruijnCycle]]:
    """
    Read a JSON-lines cycles file, validating every cycle

    Args:
        lines: File lines, header first
        source: Name used in error messages
        params: Expected parameters; a mismatching header is rejected

    Returns:
        (parameters, cycles)

    Raises:
        DomainError: On a malformed file or a mismatching header
        CycleValidationError: On an invalid cycle
    """
    body = [line for line in lines if line.strip()]
    if not body:
        raise DomainError(f"{source}: empty cycles file")
    header = _params_from_header(body[0], source)
    if params is not None and header != params:
        raise DomainError(f"{source}: file holds {header.label()}, expected {params.label()}")

    cycles: List[DeBruijnCycle] = []
    for number, line in enumerate(body[1:], start=2):
        try:
            vertices = json.loads(line)
        except json.JSONDecodeError as e:
            raise DomainError(f"{source}:{number}: not JSON ({e})")
        cycles.append(cycle_service.validate(header, _vertex_list(vertices, f"{source}:{number}")))
    return header, cycles


def _vertex_list(value: object, where: str) -> List[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise DomainError(f"{where}: expected a JSON array of integers")
    return value


# Cross-join

def histogram_csv(histogram: Dict[int, int], sparse: bool = False) -> str:
    """
    CSV "n,f" sorted by n; zero rows fill the gaps between the extremes
    unless sparse
    """
    lines = ["n,f"]
    if histogram:
        keys = sorted(histogram) if sparse else range(min(histogram), max(histogram) + 1)
        lines.extend(f"{n},{histogram.get(n, 0)}" for n in keys)
    return "\n".join(lines)


def crossjoin_graph_json(graph: CrossJoinGraph) -> str:
    return _dumps({
        "N": graph.params.N,
        "d": graph.params.d,
        "nodes": [list(cycle.vertices) for cycle in graph.nodes],
        "edges": [list(edge) for edge in graph.edges()],
    })


def crossjoin_graph_dot(graph: CrossJoinGraph) -> str:
    dot_graph = nx.nx_pydot.to_pydot(graph.to_networkx())
    dot_graph.set_name(f"C_{graph.params.N}_{graph.params.d}")
    return dot_graph.to_string()


# Algorithm H

def write_hamilton_jsonl(stream: TextIO, result: HamiltonPathResult) -> None:
    header = {
        "N": result.params.N,
        "d": result.params.d,
        "join_rule": result.join_rule,
        "closed": result.closed,
        "exhausted": result.exhausted,
        "count": len(result.cycles),
    }
    stream.write(_dumps(header) + "\n")
    for cycle, move in zip(result.cycles, result.incoming_moves()):
        entry = {"cycle": list(cycle.vertices), "move": move.to_notation() if move else None}
        stream.write(_dumps(entry) + "\n")


def read_hamilton_jsonl(lines: Sequence[str], source: str = "<hamilton>") -> HamiltonPathResult:
    """
    Read a saved Algorithm H result

    Cycles are validated; moves are parsed but not re-applied here.

    Raises:
        DomainError: On a malformed file
    """
    body = [line for line in lines if line.strip()]
    if not body:
        raise DomainError(f"{source}: empty result file")
    params = _params_from_header(body[0], source)
    header = json.loads(body[0])

    cycles: List[DeBruijnCycle] = []
    moves: List[CrossJoinMove] = []
    for number, line in enumerate(body[1:], start=2):
        where = f"{source}:{number}"
        try:
            entry = json.loads(line)
        except json.JSONDecodeError as e:
            raise DomainError(f"{where}: not JSON ({e})")
        if isinstance(entry, dict):
            if "cycle" not in entry:
                raise DomainError(f"{where}: entry has no 'cycle'")
            vertices, move_text = entry["cycle"], entry.get("move")
        elif isinstance(entry, list):
            vertices, move_text = entry, None
        else:
            raise DomainError(f"{where}: expected an object or a JSON array")
        if move_text is not None and not isinstance(move_text, str):
            raise DomainError(f"{where}: 'move' must be a string or null")
        cycles.append(cycle_service.validate(params, _vertex_list(vertices, where)))
        if move_text:
            try:
                moves.append(CrossJoinMove.parse(move_text))
            except ValueError as e:
                raise DomainError(f"{source}:{number}: {e}")

    try:
        return HamiltonPathResult(
            params=params,
            join_rule=header.get("join_rule", "largest"),
            cycles=cycles,
            moves=moves,
            closed=bool(header.get("closed", False)),
            exhausted=bool(header.get("exhausted", False)),
        )
    except ValidationError as e:
        raise DomainError(f"{source}: {e.errors()[0]['msg']}")


def _cell_width(n: int) -> int:
    return len(str(n - 1)) + 1


def _marker_line(n: int, marks: Dict[int, str]) -> str:
    width = _cell_width(n)
    cells = [(marks.get(p, " ") * len(str(n - 1))).rjust(width) for p in range(1, n + 1)]
    return "".join(cells).rstrip()


def hamilton_table(result: HamiltonPathResult) -> str:
    """
    Render a result as numbered rows of vertices; under each row a marker
    line puts '^' under the cross pair (i, i') and '_' under the join pair
    (j, j') of the move leaving that row. When the pairs share a position
    the two kinds of marker go on separate lines.
    """
    n = result.params.N
    width = _cell_width(n)
    label_width = len(str(len(result.cycles))) + 2
    lines: List[str] = []
    for label, (cycle, move) in enumerate(result.annotated_rows(), start=1):
        row = "".join(str(x).rjust(width) for x in cycle.vertices)
        lines.append(f"{label})".rjust(label_width) + row)
        if move is None:
            continue
        cross = {p: "^" for p in move.cross}
        join = {p: "_" for p in move.join}
        if cross.keys() & join.keys():
            # shared position: cross and join markers get a line each
            lines.append(" " * label_width + _marker_line(n, cross))
            lines.append(" " * label_width + _marker_line(n, join))
        else:
            lines.append(" " * label_width + _marker_line(n, {**cross, **join}))
    lines.append(f"closed: {str(result.closed).lower()}")
    return "\n".join(lines)
