"""
Closed formulas for the counts, independent of the recursion.
"""
import logging
from typing import Iterator

from subcount.models.problem import ParityClass
from subcount.services.base_service import BaseService

logger = logging.getLogger(__name__)


def binomial_row(n: int) -> Iterator[int]:
    """C(n, 0), ..., C(n, n) by the multiplicative rule; every intermediate quotient is exact."""
    coefficient = 1
    for k in range(n + 1):
        yield coefficient
        coefficient = coefficient * (n - k) // (k + 1)


class ClosedFormsService(BaseService):
    """Direct evaluation of the counting formulas."""

    def count_line_subbundles(self, r: int, g: int) -> int:
        """Number r^g of maximal line subbundles of a generic rank-r bundle."""
        self.require(r >= 2, "r must be at least 2", r=r)
        self.require(g >= 1, "g must be at least 1", g=g)
        return r ** g

    def line_eigen(self, r: int, g: int) -> int:
        """Genus-1 count r times the single eigenvalue r raised to g - 1."""
        self.require(r >= 2, "r must be at least 2", r=r)
        self.require(g >= 1, "g must be at least 1", g=g)
        return r * pow(r, g - 1)

    def _parity_sum(self, g: int, first: int) -> int:
        # sum of C(g, j) 6^(g-j) 2^j over j in [first, g] with j = first (mod 2)
        self.require(g >= 1, "g must be at least 1", g=g)
        return sum(
            coefficient * 6 ** (g - j) * 2 ** j
            for j, coefficient in enumerate(binomial_row(g))
            if j % 2 == first
        )

    def a_binomial(self, g: int) -> int:
        """a_g as the even-index binomial sum."""
        return self._parity_sum(g, 0)

    def b_binomial(self, g: int) -> int:
        """b_g as the odd-index binomial sum."""
        return self._parity_sum(g, 1)

    def a_eigen(self, g: int) -> int:
        """a_g = (8^g + 4^g) / 2, from the eigenvalues 6 + 2 and 6 - 2."""
        self.require(g >= 1, "g must be at least 1", g=g)
        return (8 ** g + 4 ** g) // 2

    def b_eigen(self, g: int) -> int:
        """b_g = (8^g - 4^g) / 2."""
        self.require(g >= 1, "g must be at least 1", g=g)
        return (8 ** g - 4 ** g) // 2

    def count_rank2_of_4(self, g: int, parity: ParityClass) -> int:
        """Rank-two maximal subbundles of a generic rank-four bundle: a_g for even d', b_g for odd."""
        if parity is ParityClass.EVEN:
            return self.a_binomial(g)
        return self.b_binomial(g)


closed_forms_service = ClosedFormsService()
