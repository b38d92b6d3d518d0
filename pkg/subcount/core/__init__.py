"""Core utilities package."""
from subcount.core.exceptions import (
    SubcountError,
    InvalidInstanceError,
    InvalidArgumentError,
    NoValidDPrimeError,
    UnsupportedRankPairError,
    VerificationError,
    exit_code_for,
)
from subcount.core.logging_config import setup_logging

__all__ = [
    "SubcountError",
    "InvalidInstanceError",
    "InvalidArgumentError",
    "NoValidDPrimeError",
    "UnsupportedRankPairError",
    "VerificationError",
    "exit_code_for",
    "setup_logging",
]
