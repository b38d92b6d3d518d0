"""Domain models package."""
from subcount.models.problem import ParityClass, CaseKind, SupportedCase, SubbundleProblem, SolvedProblem
from subcount.models.counts import CountValue, CountVector, TransferSystem
from subcount.models.trace import SplitType, GenusOneBase, ContributionRecord, TraceTree

__all__ = [
    "ParityClass", "CaseKind", "SupportedCase", "SubbundleProblem", "SolvedProblem",
    "CountValue", "CountVector", "TransferSystem",
    "SplitType", "GenusOneBase", "ContributionRecord", "TraceTree",
]
