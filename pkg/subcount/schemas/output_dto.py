"""Output Data Transfer Objects for the CLI."""
import enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from subcount.models.counts import CountValue
from subcount.models.problem import CaseKind, ParityClass


class Method(str, enum.Enum):
    """Independent computation paths."""
    RECURRENCE = "recurrence"
    MATRIX_POWER = "matrix-power"
    BINOMIAL_SUM = "binomial-sum"
    EIGEN_FORM = "eigen-form"


ALL_METHODS: Tuple[Method, ...] = tuple(Method)


class OutputRecord(BaseModel):
    """Result of `count`: the instance echo plus the count."""
    r: int
    d: int
    r_prime: int
    d_prime: int
    g: int
    parity: ParityClass
    case: CaseKind
    count: CountValue
    method: Method
    methods_run: List[Method]
    agreement: bool

    model_config = ConfigDict(frozen=True)


class LineTableRow(BaseModel):
    """Table row for line subbundles: (g, r^g)."""
    g: int
    count: CountValue


class RankTwoTableRow(BaseModel):
    """Table row for rank-two subbundles of rank-four bundles: (g, a_g, b_g)."""
    g: int
    a_g: CountValue
    b_g: CountValue


class IdentityTally(BaseModel):
    """Pass/fail counts of one identity across the sweep."""
    identity: str
    passed: int = 0
    failed: int = 0


class Mismatch(BaseModel):
    """A failed identity at one genus."""
    g: int
    identity: str
    detail: str = ""


class VerificationReport(BaseModel):
    """Genus-ordered outcome of the equivalence suite."""
    max_g: int = Field(..., ge=1)
    tallies: List[IdentityTally]
    mismatches: List[Mismatch]
    base_case: Optional[Tuple[CountValue, CountValue]] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.mismatches
