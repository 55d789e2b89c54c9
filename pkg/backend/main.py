import argparse
import logging
import sys
from typing import List, Optional

from app.cli import counts, crossjoin, cycles, distance, edges, hamilton
from app.config.settings import settings


def configure_logging() -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file, encoding="utf-8"))
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        handlers=handlers,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="debruijn",
        description="Generalized de Bruijn digraphs, cross-joins and Hamiltonian paths over de Bruijn cycles",
    )
    parser.add_argument("--version", action="version", version=f"{settings.app_name} {settings.app_version}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (edges, cycles, counts, distance, crossjoin, hamilton):
        module.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors already; keep 0 for --help/--version
        return int(e.code or 0)
    return args.handler(args)


if __name__ == "__main__":
    configure_logging()
    sys.exit(main())
