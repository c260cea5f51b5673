"""
TrustProp command-line application.

Builds the argument parser, registers the command modules and dispatches to
their handlers.
"""

import argparse
import logging
import sys
from typing import List, Optional

from trustprop import __version__, config


def create_parser() -> argparse.ArgumentParser:
    """Application factory for the argument parser."""
    parser = argparse.ArgumentParser(
        prog="trustprop",
        description="Trust inference over bounded-length paths with pruned enumeration",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", dest="log_level", default=config.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level")

    register_commands(parser)
    return parser


def register_commands(parser: argparse.ArgumentParser) -> None:
    """Register all command modules."""
    from trustprop.commands import compare, evaluate, generate, infer, ingest, sweep

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    for module in (ingest, generate, infer, compare, evaluate, sweep):
        module.register(subparsers)


def configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO),
                        format=config.LOG_FORMAT, stream=sys.stderr, force=True)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and run one command.

    Returns:
        Process exit code
    """
    parser = create_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    if not getattr(args, "handler", None):
        parser.print_help()
        return 2
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
