"""Exact count containers and the transfer system of one genus increment."""
import re
from typing import Annotated, Any, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, model_validator

_DECIMAL = re.compile(r"0|[1-9][0-9]*")


def _parse_decimal(value: Any) -> Any:
    if isinstance(value, str):
        if not _DECIMAL.fullmatch(value):
            raise ValueError(f"not a canonical decimal integer: {value!r}")
        return int(value)
    return value


def _to_decimal(value: int) -> str:
    return str(value)


# Nonnegative big integer; JSON carries it as a decimal string.
CountValue = Annotated[
    int,
    BeforeValidator(_parse_decimal),
    Field(ge=0),
    PlainSerializer(_to_decimal, return_type=str, when_used="json"),
]


class CountVector(BaseModel):
    """Labelled vector of counts, e.g. (a_g, b_g) labelled ("even", "odd")."""
    entries: Tuple[CountValue, ...]
    labels: Tuple[str, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_shape(self) -> "CountVector":
        if not self.entries or len(self.entries) != len(self.labels):
            raise ValueError("entries and labels must have equal length >= 1")
        return self

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]


class TransferSystem(BaseModel):
    """
    Genus-1 base counts plus the integer matrix applied per additional genus.

    Attributes:
        name: Display name
        matrix: k x k nonnegative integer matrix
        base: Genus-1 count vector of length k
    """
    name: str
    matrix: Tuple[Tuple[Annotated[int, Field(ge=0)], ...], ...]
    base: CountVector

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_square(self) -> "TransferSystem":
        k = len(self.base)
        if len(self.matrix) != k or any(len(row) != k for row in self.matrix):
            raise ValueError(f"matrix must be {k}x{k} to match the base vector")
        return self

    @property
    def dimension(self) -> int:
        return len(self.base)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.base.labels
