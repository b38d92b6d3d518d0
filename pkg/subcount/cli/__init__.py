"""CLI command aggregator."""
import argparse

from subcount.cli import count, table, trace, verify
from subcount.config import LOG_LEVELS, settings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subcount",
        description="Exact counts of maximal subbundles of generic vector bundles on curves.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    parser.add_argument("--log-level", dest="log_level", type=str.upper, choices=LOG_LEVELS, default=None)
    parser.add_argument("--log-file", dest="log_file", default=None, help="Append JSON log lines to this file")
    parser.add_argument("--workers", type=int, default=None, help="Threads used by verify")

    subparsers = parser.add_subparsers(dest="command", required=True)
    count.register(subparsers)
    table.register(subparsers)
    verify.register(subparsers)
    trace.register(subparsers)
    return parser


__all__ = ["build_parser"]
