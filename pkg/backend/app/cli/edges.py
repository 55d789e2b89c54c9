from argparse import Namespace
from typing import TextIO
import logging

from app.cli.common import add_global_flags, emit, require_params, run_command
from app.models.cli_models import RunConfig
from app.services.graph_service import graph_service
from app.utils.serializers import edge_table_dot, edge_table_json, edge_table_text

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("edges", help="list every edge of G_B(N, d)")
    add_global_flags(parser)
    parser.set_defaults(handler=cmd_edges)


def _edges(config: RunConfig, args: Namespace, stream: TextIO) -> int:
    table = graph_service.edge_table(require_params(config))
    renderers = {"text": edge_table_text, "json": edge_table_json, "dot": edge_table_dot}
    emit(stream, renderers[config.output_format](table))
    return 0


def cmd_edges(args: Namespace) -> int:
    """Print the edge table of G_B(N, d)."""
    return run_command("edges", args, _edges)
