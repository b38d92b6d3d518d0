"""
Command-line entry point.
Builds settings from flags, configures logging and maps errors to exit codes.
"""
import json
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from subcount.cli import build_parser
from subcount.config import build_settings
from subcount.core.exceptions import EXIT_INVALID_INSTANCE, SubcountError, exit_code_for
from subcount.core.logging_config import setup_logging

logger = logging.getLogger(__name__)


def _report_error(message: str, details: Optional[dict] = None) -> None:
    print(f"error: {message}", file=sys.stderr)
    if details:
        print(json.dumps(details, default=str, sort_keys=True), file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one CLI command.

    Returns:
        Exit code: 0 success, 1 verification failure, 2 invalid instance, 3 unsupported rank pair
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 for --help/--version
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID_INSTANCE

    try:
        run_settings = build_settings(
            LOG_LEVEL=args.log_level,
            LOG_FILE=args.log_file,
            VERIFY_MAX_WORKERS=args.workers,
        )
    except PydanticValidationError as e:
        _report_error("invalid settings", {"errors": [err["msg"] for err in e.errors()]})
        return EXIT_INVALID_INSTANCE

    try:
        setup_logging(
            log_level=run_settings.LOG_LEVEL,
            log_file=run_settings.LOG_FILE,
            max_bytes=run_settings.LOG_MAX_BYTES,
            backup_count=run_settings.LOG_BACKUP_COUNT,
        )
    except OSError as e:
        _report_error("cannot open log file", {"log_file": run_settings.LOG_FILE, "reason": str(e)})
        return EXIT_INVALID_INSTANCE
    logger.debug(f"Running {args.command}", extra={"command": args.command})

    try:
        result = args.handler(args, run_settings)
    except SubcountError as exc:
        logger.warning(f"{args.command} failed: {exc.message}", extra={"exit_code": exc.exit_code})
        _report_error(exc.message, exc.details)
        return exc.exit_code
    except Exception as exc:
        logger.error(f"Unhandled exception in {args.command}: {exc}", exc_info=True)
        _report_error("unexpected failure", {"exception": repr(exc)})
        return exit_code_for(exc)

    print(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
