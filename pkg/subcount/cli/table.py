"""
`table`: counts for g = 1..max-g.
"""
import argparse
import logging
from typing import Optional

from subcount.cli import render
from subcount.cli.flags import CommandResult
from subcount.config import Settings
from subcount.core.exceptions import InvalidInstanceError, UnsupportedRankPairError
from subcount.models.problem import CaseKind, SupportedCase
from subcount.services.counting_service import counting_service

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("table", help="Tabulate counts by genus")
    parser.add_argument("--case", choices=[k.value for k in CaseKind], required=True)
    parser.add_argument("--r", type=int, default=None, help="Rank (required for --case line)")
    parser.add_argument("--max-g", dest="max_g", type=int, required=True)
    parser.add_argument("--format", choices=("csv", "jsonl", "json", "text"), default="csv")
    parser.set_defaults(handler=cmd_table)


def resolve_case(kind: CaseKind, r: Optional[int]) -> SupportedCase:
    """Supported case from the --case/--r flags."""
    if kind is CaseKind.RANK_TWO_OF_FOUR:
        if r is not None and r != 4:
            raise UnsupportedRankPairError(f"rank2of4 requires r = 4; got {r}", details={"r": r})
        return SupportedCase.rank_two_of_four()
    if r is None:
        raise InvalidInstanceError("--r is required for --case line")
    return counting_service.build(SupportedCase, "Invalid rank", kind=kind, r=r)


def cmd_table(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Rows (g, a_g, b_g) or (g, r^g); CSV with a header row by default."""
    case = resolve_case(CaseKind(args.case), args.r)
    rows = list(counting_service.table_rows(case, args.max_g))
    logger.info(f"Tabulated {case} for g=1..{args.max_g}", extra={"case": case.kind.value, "max_g": args.max_g})
    return CommandResult(render.table(rows, args.format))
