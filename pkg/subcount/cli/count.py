"""
`count`: number of maximal subbundles of a generic bundle.
"""
import argparse
import logging

from subcount.cli import render
from subcount.cli.flags import CommandResult, add_instance_flags
from subcount.config import Settings
from subcount.schemas.output_dto import Method
from subcount.services.counting_service import counting_service
from subcount.services.invariants_service import invariants_service

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("count", help="Count maximal subbundles of a generic bundle")
    add_instance_flags(parser)
    parser.add_argument("--method", choices=[m.value for m in Method], default=None,
                        help="Run a single computation path (default: all, cross-checked)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.set_defaults(handler=cmd_count)


def cmd_count(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """
    Solve d' and count.

    Exit codes: 0 success, 1 paths disagree, 2 invalid or ill-posed instance,
    3 unsupported rank pair.
    """
    problem = invariants_service.make_problem(args.r, args.d, args.r_prime, args.g)
    method = Method(args.method) if args.method else None
    record = counting_service.count(problem, method, default_methods=settings.DEFAULT_METHODS)
    logger.info(
        f"Counted r={record.r} d={record.d} r'={record.r_prime} g={record.g}: d'={record.d_prime}",
        extra={"genus": record.g, "case": record.case.value, "method": record.method.value},
    )

    if args.format == "json":
        return CommandResult(render.to_json(record))
    return CommandResult(render.output_record_text(record))
