"""
`verify`: equivalence suite across all computation paths.
"""
import argparse
import logging

from subcount.cli import render
from subcount.cli.flags import CommandResult
from subcount.config import Settings
from subcount.core.exceptions import EXIT_OK, EXIT_VERIFICATION_FAILED
from subcount.services.counting_service import counting_service

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="Cross-check every computation path and identity")
    parser.add_argument("--max-g", dest="max_g", type=int, default=512)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.set_defaults(handler=cmd_verify)


def cmd_verify(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Per-identity pass counts; exit 1 on any mismatch."""
    report = counting_service.verify(args.max_g, settings.VERIFY_MAX_WORKERS)
    output = render.to_json(report) if args.format == "json" else render.verification_report_text(report)
    if not report.passed:
        logger.error(
            f"Verification failed with {len(report.mismatches)} mismatch(es)",
            extra={"max_g": report.max_g, "mismatches": len(report.mismatches)},
        )
        return CommandResult(output, EXIT_VERIFICATION_FAILED)
    return CommandResult(output, EXIT_OK)
