"""
Centralized logging configuration.
Console output goes to stderr; the optional log file receives JSON lines with rotation.
"""
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional

from pythonjsonlogger import jsonlogger

JSON_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s %(module)s %(funcName)s %(lineno)d"


def setup_logging(
        log_level: str = "WARNING",
        log_file: Optional[str] = None,
        max_bytes: int = 10485760,
        backup_count: int = 5
) -> None:
    """
    Setup application logging with file rotation and console output.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Path to log file (if None, only console logging)
        max_bytes: Maximum log file size before rotation
        backup_count: Number of backup files to keep
    """
    level = getattr(logging, log_level.upper())

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers.clear()

    # stdout carries command output, so the console handler writes to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    ))
    root_logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding="utf-8"
        )
        file_handler.setLevel(min(level, logging.INFO))
        file_handler.setFormatter(jsonlogger.JsonFormatter(JSON_LOG_FORMAT))
        root_logger.addHandler(file_handler)
        root_logger.setLevel(min(level, logging.INFO))

    logging.getLogger(__name__).debug("Logging configured", extra={"log_level": log_level})

