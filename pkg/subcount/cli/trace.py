"""
`trace`: one step of the degeneration argument, as an auditable tree.
"""
import argparse
import logging

from subcount.cli.flags import CommandResult, add_instance_flags
from subcount.config import Settings
from subcount.cli import render
from subcount.services.degeneration_service import degeneration_service
from subcount.services.invariants_service import invariants_service

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("trace", help="Decompose a count by degree splitting (g >= 2)")
    add_instance_flags(parser)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.set_defaults(handler=cmd_trace)


def cmd_trace(args: argparse.Namespace, settings: Settings) -> CommandResult:
    problem = invariants_service.make_problem(args.r, args.d, args.r_prime, args.g)
    case = invariants_service.classify_case(problem)
    solved = invariants_service.solve_dprime(problem)
    tree = degeneration_service.build_trace(case, solved.parity, problem.g, solved)
    logger.info(
        f"Traced {case} g={tree.genus} d'={tree.d_prime}: total {tree.total}",
        extra={"genus": tree.genus, "case": case.kind.value, "parity": tree.parity.value},
    )

    if args.format == "text":
        return CommandResult(degeneration_service.render_trace_text(tree))
    return CommandResult(render.to_json(tree))
