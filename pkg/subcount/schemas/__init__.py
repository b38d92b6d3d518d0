"""Pydantic schemas package."""
from subcount.schemas.output_dto import (
    Method, ALL_METHODS, OutputRecord, LineTableRow, RankTwoTableRow,
    IdentityTally, Mismatch, VerificationReport,
)

__all__ = [
    "Method", "ALL_METHODS", "OutputRecord", "LineTableRow", "RankTwoTableRow",
    "IdentityTally", "Mismatch", "VerificationReport",
]
