"""
Exact evaluation of the genus recursion.
Two paths: naive iteration (the oracle) and matrix exponentiation by squaring.
"""
import logging
from typing import Sequence, Tuple

from subcount.models.counts import CountVector, TransferSystem
from subcount.models.problem import CaseKind, SupportedCase
from subcount.services.base_service import BaseService

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]

PARITY_LABELS = ("even", "odd")

# a_{g+1} = 6 a_g + 2 b_g, b_{g+1} = 6 b_g + 2 a_g with (a_1, b_1) = (6, 2)
RANK_TWO_OF_FOUR = TransferSystem(
    name="rank2of4",
    matrix=((6, 2), (2, 6)),
    base=CountVector(entries=(6, 2), labels=PARITY_LABELS),
)


def line_subbundle_system(r: int) -> TransferSystem:
    """One state; each extra genus multiplies the count by r, starting from r at genus 1."""
    return TransferSystem(
        name=f"line(r={r})",
        matrix=((r,),),
        base=CountVector(entries=(r,), labels=("count",)),
    )


def identity_matrix(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, inner, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(m))
        for i in range(n)
    )


def mat_vec(a: Matrix, v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


class RecurrenceService(BaseService):
    """Big-integer evaluation of a transfer system."""

    def system_for(self, case: SupportedCase) -> TransferSystem:
        """Built-in transfer system of a supported case."""
        if case.kind is CaseKind.RANK_TWO_OF_FOUR:
            return RANK_TWO_OF_FOUR
        return line_subbundle_system(case.r)

    def step(self, state: CountVector, system: TransferSystem) -> CountVector:
        """
        Apply one genus increment: matrix times state.

        Raises:
            InvalidArgumentError: If the state length differs from the system dimension
        """
        self.require(
            len(state) == system.dimension,
            "state length must equal the system dimension",
            state_length=len(state), dimension=system.dimension,
        )
        return CountVector(entries=mat_vec(system.matrix, state.entries), labels=system.labels)

    def iterate(self, system: TransferSystem, g: int) -> CountVector:
        """
        Genus-g counts by applying `step` (g - 1) times to the base.

        Raises:
            InvalidArgumentError: If g < 1
        """
        self.require(g >= 1, "g must be at least 1", g=g)
        state = system.base
        for _ in range(g - 1):
            state = self.step(state, system)
        return state

    def mat_pow(self, system: TransferSystem, n: int) -> Matrix:
        """
        matrix**n by exponentiation by squaring; n = 0 gives the identity.

        Raises:
            InvalidArgumentError: If n < 0
        """
        self.require(n >= 0, "n must be nonnegative", n=n)
        result = identity_matrix(system.dimension)
        square = system.matrix
        while n:
            if n & 1:
                result = mat_mul(result, square)
            n >>= 1
            if n:
                square = mat_mul(square, square)
        return result

    def count_at_genus(self, system: TransferSystem, g: int) -> CountVector:
        """
        Genus-g counts as mat_pow(system, g - 1) applied to the base.

        Raises:
            InvalidArgumentError: If g < 1
        """
        self.require(g >= 1, "g must be at least 1", g=g)
        power = self.mat_pow(system, g - 1)
        return CountVector(entries=mat_vec(power, system.base.entries), labels=system.labels)


recurrence_service = RecurrenceService()
