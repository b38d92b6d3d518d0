"""
Finiteness condition, the d' solver and the dimension formulas.
"""
import logging
from typing import Tuple

from subcount.core.exceptions import (
    InvalidInstanceError, NoValidDPrimeError, UnsupportedRankPairError, VerificationError,
)
from subcount.models.problem import ParityClass, SolvedProblem, SubbundleProblem, SupportedCase
from subcount.services.base_service import BaseService

logger = logging.getLogger(__name__)


class InvariantsService(BaseService):
    """Numerical invariants of the counting problem."""

    def _check_ranks(self, r: int, r_prime: int, g: int) -> None:
        self.require(r >= 2, "r must be at least 2", InvalidInstanceError, r=r)
        self.require(1 <= r_prime < r, "r_prime must satisfy 1 <= r_prime < r",
                     InvalidInstanceError, r=r, r_prime=r_prime)
        self.require(g >= 1, "g must be at least 1", InvalidInstanceError, g=g)

    def make_problem(self, r: int, d: int, r_prime: int, g: int) -> SubbundleProblem:
        """
        Build a validated problem instance.

        Raises:
            InvalidInstanceError: If ranks or genus are malformed
        """
        return self.build(SubbundleProblem, "Invalid instance", r=r, d=d, r_prime=r_prime, g=g)

    def check_finiteness(self, r: int, d: int, r_prime: int, d_prime: int, g: int) -> bool:
        """
        Test r'd - rd' = r'(r - r')(g - 1).

        Args:
            r: Rank of the ambient bundle
            d: Degree of the ambient bundle
            r_prime: Rank of the subbundles
            d_prime: Degree of the subbundles
            g: Genus

        Returns:
            True iff the number of such subbundles is finite

        Raises:
            InvalidInstanceError: If ranks or genus are malformed
        """
        self._check_ranks(r, r_prime, g)
        return r_prime * d - r * d_prime == r_prime * (r - r_prime) * (g - 1)

    def max_subbundle_degree(self, r: int, d: int, r_prime: int, g: int) -> int:
        """
        Largest degree of a rank-r' subbundle of a generic bundle.

        On an elliptic curve this is the semistability bound floor(r'd / r).
        """
        self._check_ranks(r, r_prime, g)
        return (r_prime * d - r_prime * (r - r_prime) * (g - 1)) // r

    def solve_dprime(self, problem: SubbundleProblem) -> SolvedProblem:
        """
        Solve the finiteness condition for d'.

        Args:
            problem: Well-formed instance

        Returns:
            The instance with its unique d' and parity

        Raises:
            NoValidDPrimeError: If no integer d' exists
            VerificationError: If the solved d' fails the finiteness re-check
        """
        logger.debug(f"Solving d' for {problem!r}", extra={"genus": problem.g})
        numerator = problem.r_prime * problem.d - problem.finiteness_rhs
        if numerator % problem.r != 0:
            logger.warning(f"No integer d' for {problem!r}", extra={"genus": problem.g})
            raise NoValidDPrimeError(details={
                "r": problem.r, "d": problem.d, "r_prime": problem.r_prime, "g": problem.g,
                "d_prime": f"{numerator}/{problem.r}",
            })
        d_prime = numerator // problem.r
        solved = SolvedProblem(problem=problem, d_prime=d_prime, parity=ParityClass.of(d_prime))
        if not self.check_finiteness(problem.r, problem.d, problem.r_prime, d_prime, problem.g):
            raise VerificationError(
                "Solved d' does not satisfy the finiteness condition",
                details={"d_prime": d_prime},
            )
        return solved

    def solve(self, r: int, d: int, r_prime: int, g: int) -> SolvedProblem:
        """Build and solve in one step."""
        return self.solve_dprime(self.make_problem(r, d, r_prime, g))

    def classify_case(self, problem: SubbundleProblem) -> SupportedCase:
        """
        Map an instance to its supported rank pair.

        Raises:
            UnsupportedRankPairError: For rank pairs other than r' = 1 and (4, 2)
        """
        if problem.r_prime == 1:
            return SupportedCase.line(problem.r)
        if (problem.r, problem.r_prime) == (4, 2):
            return SupportedCase.rank_two_of_four()
        logger.warning(
            f"Unsupported rank pair r={problem.r}, r_prime={problem.r_prime}",
            extra={"genus": problem.g, "rank": problem.r, "sub_rank": problem.r_prime},
        )
        raise UnsupportedRankPairError(
            f"Counts are available only for r' = 1 and (r, r') = (4, 2); got ({problem.r}, {problem.r_prime})",
            details={"r": problem.r, "r_prime": problem.r_prime},
        )

    def family_dimension(self, r: int, g: int, k: int) -> int:
        """Dimension r^2(g-1) + 1 + rk of bundles paired with a map from a fibre to a k-dimensional space."""
        self.require(r >= 1, "r must be at least 1", r=r)
        self.require(g >= 1, "g must be at least 1", g=g)
        self.require(k >= 0, "k must be nonnegative", k=k)
        return r * r * (g - 1) + 1 + r * k

    def moduli_dimension(self, r: int, g: int) -> int:
        """Dimension r^2(g-1) + 1 of the family of rank-r bundles."""
        self.require(r >= 1, "r must be at least 1", r=r)
        self.require(g >= 1, "g must be at least 1", g=g)
        return r * r * (g - 1) + 1

    def kernel_fibre_dimension(self, r: int, k: int) -> int:
        """Dimension rk of the family of bundles sharing one kernel."""
        self.require(r >= 1, "r must be at least 1", r=r)
        self.require(0 <= k <= r, "k must satisfy 0 <= k <= r", r=r, k=k)
        return r * k

    def elementary_modification(self, r: int, d: int, k: int) -> Tuple[int, int]:
        """
        Rank and degree of the kernel of E -> E_P -> V_k.

        Returns:
            (r, d - k)
        """
        self.require(r >= 1, "r must be at least 1", r=r)
        self.require(0 <= k <= r, "k must satisfy 0 <= k <= r", r=r, k=k)
        return r, d - k


invariants_service = InvariantsService()
