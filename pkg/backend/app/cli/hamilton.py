from argparse import Namespace
from typing import TextIO
import json
import logging

from app.cli.common import add_global_flags, emit, load_cycle, require_params, run_command
from app.models.cli_models import RunConfig
from app.services.cycle_service import cycle_service
from app.services.hamilton_service import hamilton_service
from app.utils.errors import DomainError
from app.utils.serializers import hamilton_table, read_hamilton_jsonl, write_hamilton_jsonl

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("hamilton", help="Algorithm H over the cross-join graph")
    actions = parser.add_subparsers(dest="action", required=True)

    run = actions.add_parser("run", help="Hamiltonian path from a seed cycle")
    add_global_flags(run)
    run.add_argument("--seed", help="seed cycle as comma-separated vertices; defaults to the prefer-largest cycle")
    run.add_argument("--seed-file", help="JSON-lines cycles file holding the seed")
    run.add_argument("--index", type=int, default=1, help="1-based entry in --seed-file")
    run.add_argument("--join-rule", choices=["largest", "smallest"], default="largest")

    verify = actions.add_parser("verify", help="check a saved Algorithm H result")
    add_global_flags(verify)
    verify.add_argument("--result-file", required=True, help="JSON-lines file written by 'hamilton run --format jsonl'")

    find = actions.add_parser("find-cycle-seed", help="first seed whose path closes into a Hamiltonian cycle")
    add_global_flags(find)
    find.add_argument("--join-rule", choices=["largest", "smallest"], default="largest")
    find.add_argument("--all", action="store_true", help="list every cycle-initiating seed")

    parser.set_defaults(handler=cmd_hamilton)


def _run(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    params = require_params(config)
    if args.seed is None and args.seed_file is None:
        seed = cycle_service.greedy_generate(params, preference="largest")
        if seed is None:
            raise DomainError(f"{params.label()} has no de Bruijn cycle to seed from")
    else:
        seed = load_cycle(params, args.seed, args.seed_file, args.index, what="seed")

    result = hamilton_service.run_algorithm_h(seed, join_rule=args.join_rule)
    hamilton_service.check_result(result)
    if config.output_format == "jsonl":
        write_hamilton_jsonl(stream, result)
    else:
        emit(stream, hamilton_table(result))
    return 0


def _verify(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    with open(args.result_file, encoding="utf-8") as handle:
        result = read_hamilton_jsonl(handle.readlines(), source=args.result_file)
    params = result.params
    if config.n is not None or config.d is not None:
        expected = require_params(config)
        if expected != params:
            raise DomainError(f"{args.result_file} holds {params.label()}, expected {expected.label()}")

    hamilton_service.check_result(result)
    hamiltonian = hamilton_service.is_hamiltonian_path(result, params, budget=config.budget)
    closed = hamiltonian and result.closed
    if config.output_format == "json":
        emit(stream, json.dumps({"N": params.N, "d": params.d, "cycles": len(result.cycles),
                                 "hamiltonian_path": hamiltonian, "closed": closed}))
    else:
        emit(stream, "\n".join([
            f"cycles: {len(result.cycles)}",
            f"hamiltonian path: {str(hamiltonian).lower()}",
            f"closed: {str(closed).lower()}",
        ]))
    return 0


def _find_cycle_seed(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    params = require_params(config)
    if args.all:
        seeds = hamilton_service.find_cycle_seeds(params, args.join_rule, budget=config.budget,
                                                  threads=config.threads)
    else:
        seed = hamilton_service.find_cycle_seed(params, args.join_rule, budget=config.budget,
                                                threads=config.threads)
        seeds = [seed] if seed is not None else []

    if config.output_format == "json":
        emit(stream, json.dumps({"N": params.N, "d": params.d, "join_rule": args.join_rule,
                                 "seeds": [list(s.vertices) for s in seeds]}))
    else:
        emit(stream, "\n".join(s.to_text() for s in seeds) if seeds else "none")
    return 0


_ACTIONS = {
    "run": _run,
    "verify": _verify,
    "find-cycle-seed": _find_cycle_seed,
}


def cmd_hamilton(args: Namespace) -> int:
    """Dispatch a hamilton subaction."""
    return run_command(f"hamilton {args.action}", args, _ACTIONS[args.action])
