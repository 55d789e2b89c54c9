from argparse import Namespace
from typing import TextIO
import json

from app.cli.common import add_global_flags, emit, run_command
from app.models.cli_models import RunConfig
from app.services.cycle_service import cycle_service
from app.utils.errors import DomainError


def register(subparsers) -> None:
    parser = subparsers.add_parser("counts", help="closed-form counts")
    parser.add_argument("kind", choices=["debruijn", "chang"],
                        help="debruijn: (d!)^(d^(k-1))/d^k; chang: (2^(k-1)-1)(2^(k-1)-2)/6")
    parser.add_argument("--k", type=int, required=True, help="order k")
    add_global_flags(parser)
    parser.set_defaults(handler=cmd_counts)


def _counts(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    if args.kind == "debruijn":
        if config.d is None:
            raise DomainError("'counts debruijn' needs --d")
        value = int(cycle_service.count_formula(config.d, args.k))
    else:
        value = int(cycle_service.chang_count(args.k))

    if config.output_format == "json":
        emit(stream, json.dumps({"kind": args.kind, "d": config.d, "k": args.k, "value": value}))
    else:
        emit(stream, str(value))
    return 0


def cmd_counts(args: Namespace) -> int:
    return run_command("counts", args, _counts)
