from argparse import ArgumentParser, Namespace
from contextlib import contextmanager
from typing import Callable, Iterator, Optional, TextIO
import logging
import os
import sys
import tempfile

from pydantic import ValidationError

from app.config.settings import settings
from app.models.cli_models import ALLOWED_FORMATS, RunConfig
from app.models.cycle_models import DeBruijnCycle
from app.models.digraph_models import DigraphParams
from app.services.cycle_service import cycle_service
from app.utils.errors import DeBruijnError, DomainError
from app.utils.serializers import read_cycles_jsonl
from app.utils.validators import parse_int_list

logger = logging.getLogger(__name__)

Handler = Callable[[RunConfig, Namespace, TextIO], int]


def add_global_flags(parser: ArgumentParser) -> None:
    """Flags every command accepts."""
    parser.add_argument("--n", type=int, help="number of vertices N")
    parser.add_argument("--d", type=int, help="out-degree d")
    parser.add_argument("--format", choices=["text", "json", "csv", "dot", "jsonl"],
                        help="output format (defaults per command)")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--threads", type=int, default=settings.threads,
                        help="worker processes for enumeration and census")
    parser.add_argument("--budget", type=int, default=settings.enumeration_budget,
                        help="maximum number of cycles to enumerate")


def build_config(command: str, args: Namespace) -> RunConfig:
    fmt = args.format
    if fmt is None and settings.default_format in ALLOWED_FORMATS.get(command, ()):
        fmt = settings.default_format
    try:
        return RunConfig(
            command=command,
            n=args.n,
            d=args.d,
            format=fmt,
            out=args.out,
            threads=args.threads,
            budget=args.budget,
        )
    except ValidationError as e:
        raise DomainError(_first_message(e))


def require_params(config: RunConfig) -> DigraphParams:
    if config.n is None or config.d is None:
        raise DomainError(f"'{config.command}' needs both --n and --d")
    try:
        return DigraphParams(N=config.n, d=config.d)
    except ValidationError as e:
        raise DomainError(_first_message(e))


def load_cycle(params: DigraphParams, text: Optional[str], path: Optional[str] = None,
               index: int = 1, what: str = "cycle") -> DeBruijnCycle:
    """
    Resolve a cycle given inline as "0,1,3,..." or as entry `index` (1-based)
    of a JSON-lines cycles file

    Raises:
        DomainError: If neither or both sources are given, or the file is short
        CycleValidationError: If the vertices are not a de Bruijn cycle
    """
    if (text is None) == (path is None):
        raise DomainError(f"give the {what} either inline or as a file, exactly once")
    if text is not None:
        return cycle_service.validate(params, parse_int_list(text))
    with open(path, encoding="utf-8") as handle:
        _, cycles = read_cycles_jsonl(handle.readlines(), source=path, params=params)
    if not 1 <= index <= len(cycles):
        raise DomainError(f"{path} holds {len(cycles)} cycles; no entry {index}")
    return cycles[index - 1]


@contextmanager
def _output(config: RunConfig) -> Iterator[TextIO]:
    """
    Output stream for one command; --out is written to a temporary file next
    to the target and moved into place only when the command succeeds
    """
    if config.out is None:
        yield sys.stdout
        return
    target = os.path.abspath(config.out)
    handle = tempfile.NamedTemporaryFile(
        "w", encoding="utf-8", dir=os.path.dirname(target),
        prefix=f".{os.path.basename(target)}.", suffix=".tmp", delete=False,
    )
    try:
        with handle:
            yield handle
    except BaseException:
        os.unlink(handle.name)
        raise
    os.replace(handle.name, target)


def run_command(command: str, args: Namespace, handler: Handler) -> int:
    """
    Run a command handler, mapping failures onto exit codes

    Returns:
        0 on success, otherwise the exit code carried by the error
        (2 input, 3 budget, 4 internal invariant)
    """
    try:
        config = build_config(command, args)
        logger.debug(f"Running {command} with {config.model_dump(exclude_none=True)}")
        with _output(config) as stream:
            return handler(config, args, stream)
    except DeBruijnError as e:
        logger.error(f"Error running {command}: {e.detail}")
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        message = _first_message(e)
        logger.error(f"Invalid input for {command}: {message}")
        print(f"error: {message}", file=sys.stderr)
        return DomainError.exit_code
    except OSError as e:
        logger.error(f"I/O error running {command}: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return DomainError.exit_code
    except Exception as e:
        logger.exception(f"Unexpected error running {command}: {str(e)}")
        print(f"internal error: {e}", file=sys.stderr)
        return 4


def _first_message(error: ValidationError) -> str:
    first = error.errors()[0]
    message = first["msg"]
    return message[len("Value error, "):] if message.startswith("Value error, ") else message


def emit(stream: TextIO, text: str) -> None:
    stream.write(text)
    if text and not text.endswith("\n"):
        stream.write("\n")
