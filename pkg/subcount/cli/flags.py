"""Shared flag definitions and the handler result type."""
import argparse
from typing import NamedTuple


class CommandResult(NamedTuple):
    """Text written to stdout and the process exit code."""
    output: str
    exit_code: int = 0


def add_instance_flags(parser: argparse.ArgumentParser) -> None:
    """Flags describing a problem instance (r, d, r', g)."""
    parser.add_argument("--r", type=int, required=True, help="Rank of the ambient bundle")
    parser.add_argument("--d", type=int, required=True, help="Degree of the ambient bundle")
    parser.add_argument("--r-prime", dest="r_prime", type=int, required=True,
                        help="Rank of the sought subbundles")
    parser.add_argument("--g", type=int, required=True, help="Genus of the curve")
