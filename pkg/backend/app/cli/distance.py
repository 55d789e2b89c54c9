from argparse import Namespace
from typing import TextIO
import json

from app.cli.common import add_global_flags, emit, load_cycle, require_params, run_command
from app.models.cli_models import RunConfig
from app.services.cycle_service import common_prefix_length, cycle_service


def add_pair_flags(parser) -> None:
    """--u/--v inline, or --cycle-file with --u-index/--v-index."""
    parser.add_argument("--u", help="first cycle, comma-separated vertices")
    parser.add_argument("--v", help="second cycle, comma-separated vertices")
    parser.add_argument("--cycle-file", help="JSON-lines cycles file to take u and v from")
    parser.add_argument("--u-index", type=int, default=1, help="1-based entry of u in --cycle-file")
    parser.add_argument("--v-index", type=int, default=2, help="1-based entry of v in --cycle-file")


def load_pair(config: RunConfig, args: Namespace):
    params = require_params(config)
    u = load_cycle(params, args.u, None if args.u else args.cycle_file, args.u_index, what="u")
    v = load_cycle(params, args.v, None if args.v else args.cycle_file, args.v_index, what="v")
    return u, v


def register(subparsers) -> None:
    parser = subparsers.add_parser("distance", help="D(u, v) = N - length of the common prefix")
    add_global_flags(parser)
    add_pair_flags(parser)
    parser.set_defaults(handler=cmd_distance)


def _distance(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    u, v = load_pair(config, args)
    value = cycle_service.distance(u, v)
    if config.output_format == "json":
        prefix = common_prefix_length(u.vertices, v.vertices)
        emit(stream, json.dumps({"N": u.N, "common_prefix": prefix, "distance": value}))
    else:
        emit(stream, str(value))
    return 0


def cmd_distance(args: Namespace) -> int:
    return run_command("distance", args, _distance)
