from argparse import Namespace
from typing import TextIO
import json
import logging

from app.cli.common import add_global_flags, emit, require_params, run_command
from app.models.cli_models import RunConfig
from app.services.cycle_service import cycle_service
from app.utils.errors import InvariantViolationError
from app.utils.serializers import cycles_json, write_cycles_jsonl

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("cycles", help="enumerate or count the de Bruijn cycles of G_B(N, d)")
    add_global_flags(parser)
    parser.add_argument("--count-only", action="store_true",
                        help="print the number of cycles (and the formula verdict when N = d^k)")
    parser.set_defaults(handler=cmd_enumerate)


def _count(config: RunConfig, stream: TextIO) -> int:
    params = require_params(config)
    count = cycle_service.count_cycles(params, budget=config.budget, threads=config.threads)
    k = cycle_service.is_de_bruijn_power(params)
    expected = int(cycle_service.count_formula(params.d, k)) if k is not None else None

    if config.output_format == "json":
        payload = {"N": params.N, "d": params.d, "count": count}
        if expected is not None:
            payload.update({"k": k, "formula": expected, "agree": count == expected})
        emit(stream, json.dumps(payload))
    else:
        lines = [str(count)]
        if expected is not None:
            lines.append(f"formula (d={params.d}, k={k}): {expected}")
            lines.append("AGREE" if count == expected else "DISAGREE")
        emit(stream, "\n".join(lines))

    if expected is not None and count != expected:
        raise InvariantViolationError(
            f"enumerated {count} cycles of {params.label()} but the formula gives {expected}"
        )
    return 0


def _enumerate(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    if args.count_only:
        return _count(config, stream)
    params = require_params(config)
    cycles = cycle_service.enumerate_cycles(params, budget=config.budget, threads=config.threads)
    fmt = config.output_format
    if fmt == "jsonl":
        write_cycles_jsonl(stream, params, cycles)
    elif fmt == "json":
        emit(stream, cycles_json(params, cycles))
    else:
        for cycle in cycles:
            stream.write(cycle.to_text() + "\n")
    return 0


def cmd_enumerate(args: Namespace) -> int:
    """Stream the cycles of G_B(N, d), or count them with --count-only."""
    return run_command("cycles", args, _enumerate)
