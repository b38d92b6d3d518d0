"""
Custom exception classes with detailed error handling.
Each exception carries the process exit code the CLI reports for it.
"""
from typing import Optional, Dict, Any

from pydantic import ValidationError as PydanticValidationError

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INSTANCE = 2
EXIT_UNSUPPORTED_RANK_PAIR = 3


class SubcountError(Exception):
    """Base exception class for application-specific errors."""

    def __init__(
            self,
            message: str,
            exit_code: int = EXIT_VERIFICATION_FAILED,
            details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class InvalidInstanceError(SubcountError):
    """Raised when a problem instance or a command flag is malformed."""

    def __init__(self, message: str = "Invalid instance", details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            exit_code=EXIT_INVALID_INSTANCE,
            details=details
        )


class InvalidArgumentError(InvalidInstanceError):
    """Raised when an operation's precondition is violated."""


class NoValidDPrimeError(InvalidInstanceError):
    """Raised when no integer d' satisfies the finiteness condition."""

    def __init__(self, message: str = "No integer d' satisfies the finiteness condition",
                 details: Optional[Dict[str, Any]] = None):
        super().__init__(message=message, details=details)


class UnsupportedRankPairError(SubcountError):
    """Raised for rank pairs other than r' = 1 and (r, r') = (4, 2)."""

    def __init__(self, message: str = "Unsupported rank pair", details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            exit_code=EXIT_UNSUPPORTED_RANK_PAIR,
            details=details
        )


class VerificationError(SubcountError):
    """Raised when independent computation paths disagree."""

    def __init__(self, message: str = "Computation paths disagree", details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            exit_code=EXIT_VERIFICATION_FAILED,
            details=details
        )


def from_pydantic(exc: PydanticValidationError, message: str = "Invalid instance") -> InvalidInstanceError:
    """
    Convert a pydantic validation failure into an InvalidInstanceError.

    Args:
        exc: Pydantic validation error
        message: Summary message

    Returns:
        InvalidInstanceError whose details carry the pydantic error list
    """
    errors = [
        {"loc": list(err.get("loc", ())), "msg": err.get("msg", "")}
        for err in exc.errors()
    ]
    return InvalidInstanceError(message, details={"errors": errors})


def exit_code_for(exception: BaseException) -> int:
    """
    Map any exception to the CLI exit-code contract.

    Args:
        exception: Raised exception

    Returns:
        0 success, 1 verification failure, 2 invalid instance, 3 unsupported rank pair
    """
    if isinstance(exception, SubcountError):
        return exception.exit_code
    if isinstance(exception, PydanticValidationError):
        return EXIT_INVALID_INSTANCE
    return EXIT_VERIFICATION_FAILED
