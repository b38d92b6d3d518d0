"""Problem instances: the numeric setup (r, d, r', g) and its solved degree d'."""
import enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ParityClass(str, enum.Enum):
    """Parity of the subbundle degree d'."""
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, value: int) -> "ParityClass":
        """Parity of an integer (negative values included)."""
        return cls.EVEN if value % 2 == 0 else cls.ODD

    def flipped(self) -> "ParityClass":
        return ParityClass.ODD if self is ParityClass.EVEN else ParityClass.EVEN

    @property
    def slot(self) -> int:
        """Position in an (even, odd) count vector."""
        return 0 if self is ParityClass.EVEN else 1


class CaseKind(str, enum.Enum):
    """Rank pairs for which counts are known."""
    LINE = "line"
    RANK_TWO_OF_FOUR = "rank2of4"


class SupportedCase(BaseModel):
    """
    A supported rank pair.

    Attributes:
        kind: LINE (r' = 1, any r >= 2) or RANK_TWO_OF_FOUR ((r, r') = (4, 2))
        r: Rank of the ambient bundle
    """
    kind: CaseKind
    r: int = Field(..., ge=2)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_rank(self) -> "SupportedCase":
        if self.kind is CaseKind.RANK_TWO_OF_FOUR and self.r != 4:
            raise ValueError("rank2of4 requires r = 4")
        return self

    @classmethod
    def line(cls, r: int) -> "SupportedCase":
        return cls(kind=CaseKind.LINE, r=r)

    @classmethod
    def rank_two_of_four(cls) -> "SupportedCase":
        return cls(kind=CaseKind.RANK_TWO_OF_FOUR, r=4)

    @property
    def r_prime(self) -> int:
        return 1 if self.kind is CaseKind.LINE else 2

    def __str__(self) -> str:
        if self.kind is CaseKind.LINE:
            return f"line(r={self.r})"
        return "rank2of4"


class SubbundleProblem(BaseModel):
    """
    Numeric instance of the counting problem.

    Attributes:
        r: Rank of the ambient bundle (>= 2)
        d: Degree of the ambient bundle (any integer)
        r_prime: Rank of the sought subbundles (1 <= r_prime < r)
        g: Genus of the curve (>= 1)
    """
    r: int = Field(..., ge=2)
    d: int
    r_prime: int = Field(..., ge=1)
    g: int = Field(..., ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_ranks(self) -> "SubbundleProblem":
        if self.r_prime >= self.r:
            raise ValueError("r_prime must be smaller than r")
        return self

    @property
    def finiteness_rhs(self) -> int:
        """r'(r - r')(g - 1)."""
        return self.r_prime * (self.r - self.r_prime) * (self.g - 1)


class SolvedProblem(BaseModel):
    """
    A problem together with the unique degree d' forced by the finiteness condition.

    Attributes:
        problem: The instance
        d_prime: Degree of the sought subbundles
        parity: Parity of d_prime
    """
    problem: SubbundleProblem
    d_prime: int
    parity: ParityClass

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_condition(self) -> "SolvedProblem":
        p = self.problem
        if p.r_prime * p.d - p.r * self.d_prime != p.finiteness_rhs:
            raise ValueError("d_prime does not satisfy r'd - rd' = r'(r - r')(g - 1)")
        if self.parity is not ParityClass.of(self.d_prime):
            raise ValueError("parity does not match d_prime")
        return self
