"""Exact counts of maximal subbundles of generic vector bundles on curves."""
import sys

# counts pass 4300 decimal digits near g = 4760; str/int conversion must stay unbounded
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

from subcount.models import ParityClass, SupportedCase, SubbundleProblem, SolvedProblem, TransferSystem, TraceTree  # noqa: E402
from subcount.services import (  # noqa: E402
    invariants_service,
    recurrence_service,
    closed_forms_service,
    degeneration_service,
    counting_service,
)

__version__ = "1.0.0"

__all__ = [
    "ParityClass",
    "SupportedCase",
    "SubbundleProblem",
    "SolvedProblem",
    "TransferSystem",
    "TraceTree",
    "invariants_service",
    "recurrence_service",
    "closed_forms_service",
    "degeneration_service",
    "counting_service",
]
