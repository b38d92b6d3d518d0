"""Audited decomposition of a genus-g count into degree-splitting contributions."""
import enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from subcount.models.counts import CountValue
from subcount.models.problem import ParityClass, SolvedProblem, SupportedCase


class SplitType(str, enum.Enum):
    """How d' divides between the elliptic tail and the genus-(g-1) side."""
    ZERO_FULL = "0,d'"
    ONE_SHIFTED = "1,d'-1"
    ONE_FULL = "1,d'"

    @property
    def elliptic_degree(self) -> int:
        return 0 if self is SplitType.ZERO_FULL else 1

    @property
    def genus_shift(self) -> int:
        """Amount subtracted from d' on the genus side."""
        return 1 if self is SplitType.ONE_SHIFTED else 0

    def concrete(self, d_prime: int) -> Tuple[int, int]:
        return self.elliptic_degree, d_prime - self.genus_shift


class GenusOneBase(BaseModel):
    """Count of maximal subbundles of a generic bundle on an elliptic curve."""
    case: SupportedCase
    parity: Optional[ParityClass] = None
    count: CountValue

    model_config = ConfigDict(frozen=True)


class ContributionRecord(BaseModel):
    """
    One degree splitting of the induction step.

    Attributes:
        split_type: Symbolic split
        split: Concrete (elliptic, genus-side) degrees, when d' is known
        elliptic_count: Subbundles on the elliptic side compatible with a fixed fibre direction
        recursive_count: Subbundles on the genus-(g-1) side
        product: Contribution to the total (0 when excluded)
        excluded: True when the split cannot occur for a generic gluing
        reason: Why the split is excluded (empty otherwise)
        elliptic_instance: Elliptic-side instance, when d' is known
        genus_instance: Genus-side instance, when d' is known
    """
    split_type: SplitType
    split: Optional[Tuple[int, int]] = None
    elliptic_count: CountValue
    recursive_count: CountValue
    product: CountValue
    excluded: bool = False
    reason: str = ""
    elliptic_instance: Optional[SolvedProblem] = None
    genus_instance: Optional[SolvedProblem] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_product(self) -> "ContributionRecord":
        if self.excluded:
            if self.product != 0 or not self.reason:
                raise ValueError("excluded records have product 0 and a reason")
        else:
            if self.product != self.elliptic_count * self.recursive_count:
                raise ValueError("product must equal elliptic_count * recursive_count")
            if self.reason:
                raise ValueError("contributing records carry no reason")
        return self


class TraceTree(BaseModel):
    """
    Single-level decomposition of the genus-g count.

    Attributes:
        genus: Genus g of the decomposed curve (>= 2)
        case: Rank pair
        parity: Parity of d'
        d_prime: Concrete d', when known
        records: Contribution records in split order
        total: Sum of the contributing products
        annotations: Fixed notes on claims the trace documents but does not check
    """
    genus: int
    case: SupportedCase
    parity: ParityClass
    d_prime: Optional[int] = None
    records: Tuple[ContributionRecord, ...]
    total: CountValue
    annotations: Tuple[str, ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_total(self) -> "TraceTree":
        if self.total != sum(rec.product for rec in self.records if not rec.excluded):
            raise ValueError("total must equal the sum of contributing products")
        return self

    @property
    def contributing(self) -> Tuple[ContributionRecord, ...]:
        return tuple(rec for rec in self.records if not rec.excluded)

    @property
    def excluded(self) -> Tuple[ContributionRecord, ...]:
        return tuple(rec for rec in self.records if rec.excluded)
