from argparse import Namespace
from typing import TextIO
import json
import logging

from pydantic import ValidationError

from app.cli.common import add_global_flags, emit, load_cycle, require_params, run_command
from app.cli.distance import add_pair_flags, load_pair
from app.models.cli_models import RunConfig
from app.models.crossjoin_models import CrossJoinMove
from app.models.cycle_models import DeBruijnCycle
from app.services.crossjoin_service import crossjoin_service
from app.utils.errors import DomainError, InvalidMoveError
from app.utils.serializers import (
    crossjoin_graph_dot,
    crossjoin_graph_json,
    histogram_csv,
    write_cycles_jsonl,
)
from app.utils.validators import parse_pair

logger = logging.getLogger(__name__)


def _add_cycle_flags(parser) -> None:
    parser.add_argument("--cycle", help="cycle as comma-separated vertices (any rotation)")
    parser.add_argument("--cycle-file", help="JSON-lines cycles file")
    parser.add_argument("--index", type=int, default=1, help="1-based entry in --cycle-file")


def register(subparsers) -> None:
    parser = subparsers.add_parser("crossjoin", help="cross-join operations and the cross-join graph")
    actions = parser.add_subparsers(dest="action", required=True)

    apply = actions.add_parser("apply", help="apply one cross-join move")
    add_global_flags(apply)
    _add_cycle_flags(apply)
    apply.add_argument("--move", help="move notation cross=a,b;join=p_in,p_out (1-based positions)")
    apply.add_argument("--cross", help="cross pair positions a,b")
    apply.add_argument("--join", help="join pair positions p_in,p_out")
    apply.add_argument("--cross-vertices", help="cross pair given as vertices")
    apply.add_argument("--join-vertices", help="join pair given as vertices")

    neighbors = actions.add_parser("neighbors", help="distinct cross-join neighbors of a cycle")
    add_global_flags(neighbors)
    _add_cycle_flags(neighbors)
    neighbors.add_argument("--count-only", action="store_true", help="print only the number of neighbors")
    neighbors.add_argument("--moves", action="store_true", help="list every valid move with its result")

    histogram = actions.add_parser("histogram", help="how many cycles have n cross-join neighbors")
    add_global_flags(histogram)
    histogram.add_argument("--count", choices=["cycles", "moves"], default="cycles",
                           help="count distinct neighbor cycles (default) or valid moves")
    histogram.add_argument("--sparse", action="store_true", help="omit zero rows from the CSV")

    connectivity = actions.add_parser("connectivity", help="connected components of C(N, d)")
    add_global_flags(connectivity)

    path = actions.add_parser("path", help="cross-join walk from u to v with decreasing distance")
    add_global_flags(path)
    add_pair_flags(path)

    graph = actions.add_parser("graph", help="export C(N, d)")
    add_global_flags(graph)

    parser.set_defaults(handler=cmd_crossjoin)


def _resolve_move(u: DeBruijnCycle, args: Namespace) -> CrossJoinMove:
    given = [args.move is not None, args.cross is not None or args.join is not None,
             args.cross_vertices is not None or args.join_vertices is not None]
    if sum(given) != 1:
        raise DomainError("give the move once: --move, --cross/--join, or --cross-vertices/--join-vertices")
    try:
        if args.move is not None:
            return CrossJoinMove.parse(args.move)
        if args.cross is not None or args.join is not None:
            if args.cross is None or args.join is None:
                raise DomainError("--cross and --join go together")
            return CrossJoinMove(cross=parse_pair(args.cross), join=parse_pair(args.join))
    except DomainError:
        raise
    except ValidationError as e:
        raise InvalidMoveError(e.errors()[0]["msg"])
    except ValueError as e:
        raise InvalidMoveError(str(e))
    if args.cross_vertices is None or args.join_vertices is None:
        raise DomainError("--cross-vertices and --join-vertices go together")
    return crossjoin_service.move_from_vertices(
        u, parse_pair(args.cross_vertices), parse_pair(args.join_vertices)
    )


def _apply(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    params = require_params(config)
    u = load_cycle(params, args.cycle, args.cycle_file, args.index)
    move = _resolve_move(u, args)
    result = crossjoin_service.apply_move(u, move)
    if config.output_format == "json":
        emit(stream, json.dumps({"move": move.to_notation(), "cycle": list(result.vertices)}))
    else:
        emit(stream, result.to_text())
    return 0


def _neighbors(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    params = require_params(config)
    u = load_cycle(params, args.cycle, args.cycle_file, args.index)
    found = sorted(crossjoin_service.neighbors(u), key=lambda c: c.vertices)
    fmt = config.output_format

    if args.moves:
        rows = [(move, crossjoin_service.apply_move(u, move)) for move in crossjoin_service.enumerate_moves(u)]
        if fmt == "json":
            emit(stream, json.dumps([{"move": m.to_notation(), "cycle": list(c.vertices)} for m, c in rows]))
        else:
            emit(stream, "\n".join(f"{m.to_notation()} -> {c.to_text()}" for m, c in rows))
        return 0

    if args.count_only:
        emit(stream, json.dumps({"count": len(found)}) if fmt == "json" else str(len(found)))
    elif fmt == "jsonl":
        write_cycles_jsonl(stream, params, found)
    elif fmt == "json":
        emit(stream, json.dumps({"cycle": list(u.vertices), "count": len(found),
                                 "neighbors": [list(c.vertices) for c in found]}))
    else:
        emit(stream, "\n".join(c.to_text() for c in found))
    return 0


def _histogram(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    params = require_params(config)
    histogram = crossjoin_service.neighbor_histogram(
        params, count=args.count, budget=config.budget, threads=config.threads
    )
    fmt = config.output_format
    if fmt == "json":
        emit(stream, json.dumps({"N": params.N, "d": params.d, "count": args.count,
                                 "histogram": {str(n): f for n, f in histogram.items()}}))
    else:
        emit(stream, histogram_csv(histogram, sparse=args.sparse))
    return 0


def _connectivity(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    params = require_params(config)
    graph = crossjoin_service.build_crossjoin_graph(params, budget=config.budget, threads=config.threads)
    connected, components = crossjoin_service.is_connected(graph)
    if config.output_format == "json":
        emit(stream, json.dumps({"N": params.N, "d": params.d, "connected": connected,
                                 "components": components, "nodes": len(graph.nodes),
                                 "edges": graph.edge_count}))
    else:
        noun = "component" if components == 1 else "components"
        verdict = "connected" if connected else "disconnected"
        emit(stream, f"{verdict}, {components} {noun}, {len(graph.nodes)} nodes")
    return 0


def _path(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    u, v = load_pair(config, args)
    steps = crossjoin_service.crossjoin_path(u, v)
    if config.output_format == "json":
        emit(stream, json.dumps({
            "start": list(u.vertices),
            "steps": [{"move": m.to_notation(), "cycle": list(c.vertices)} for m, c in steps],
        }))
    else:
        lines = [f"start: {u.to_text()}"]
        lines.extend(f"{k}) {m.to_notation()} -> {c.to_text()}" for k, (m, c) in enumerate(steps, start=1))
        lines.append(f"steps: {len(steps)}")
        emit(stream, "\n".join(lines))
    return 0


def _graph(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    params = require_params(config)
    graph = crossjoin_service.build_crossjoin_graph(params, budget=config.budget, threads=config.threads)
    renderer = crossjoin_graph_json if config.output_format == "json" else crossjoin_graph_dot
    emit(stream, renderer(graph))
    return 0


_ACTIONS = {
    "apply": _apply,
    "neighbors": _neighbors,
    "histogram": _histogram,
    "connectivity": _connectivity,
    "path": _path,
    "graph": _graph,
}


def cmd_crossjoin(args: Namespace) -> int:
    """Dispatch a crossjoin subaction."""
    return run_command(f"crossjoin {args.action}", args, _ACTIONS[args.action])
