"""
Counting orchestration: dispatch over the computation paths, tables,
and the equivalence sweep behind `verify`.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from math import gcd
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from subcount.core.exceptions import VerificationError
from subcount.models.counts import CountVector
from subcount.models.problem import CaseKind, ParityClass, SolvedProblem, SubbundleProblem, SupportedCase
from subcount.schemas.output_dto import (
    ALL_METHODS, IdentityTally, LineTableRow, Method, Mismatch, OutputRecord, RankTwoTableRow,
    VerificationReport,
)
from subcount.services.base_service import BaseService
from subcount.services.closed_forms_service import closed_forms_service
from subcount.services.degeneration_service import degeneration_service
from subcount.services.invariants_service import invariants_service
from subcount.services.recurrence_service import line_subbundle_system, recurrence_service

logger = logging.getLogger(__name__)

LINE_RANKS = range(2, 11)
LINE_CHECK_MAX_G = 30
TRACE_LINE_RANKS = (2, 3)
TRACE_CHECK_MAX_G = 64

IDENTITIES = (
    "recurrence=matrix-power",
    "recurrence=binomial-sum",
    "recurrence=eigen-form",
    "a+b=8^g",
    "a-b=4^g",
    "a=2^(2g-1)(2^g+1)",
    "b=2^(2g-1)(2^g-1)",
    "gcd(a,b)=2^(2g-1)",
    "a>b>0",
    "line=r^g",
    "trace=recurrence",
)

CheckResult = Tuple[str, bool, str]
TableRow = Union[LineTableRow, RankTwoTableRow]


class CountingService(BaseService):
    """Runs and cross-checks the independent computation paths."""

    def compute(self, case: SupportedCase, parity: ParityClass, g: int, method: Method) -> int:
        """Count at genus g by one path."""
        system = recurrence_service.system_for(case)
        if case.kind is CaseKind.LINE:
            paths: Dict[Method, Callable[[], int]] = {
                Method.RECURRENCE: lambda: recurrence_service.iterate(system, g)[0],
                Method.MATRIX_POWER: lambda: recurrence_service.count_at_genus(system, g)[0],
                Method.BINOMIAL_SUM: lambda: closed_forms_service.count_line_subbundles(case.r, g),
                Method.EIGEN_FORM: lambda: closed_forms_service.line_eigen(case.r, g),
            }
        else:
            paths = {
                Method.RECURRENCE: lambda: recurrence_service.iterate(system, g)[parity.slot],
                Method.MATRIX_POWER: lambda: recurrence_service.count_at_genus(system, g)[parity.slot],
                Method.BINOMIAL_SUM: lambda: closed_forms_service.count_rank2_of_4(g, parity),
                Method.EIGEN_FORM: lambda: (closed_forms_service.a_eigen(g) if parity is ParityClass.EVEN
                                            else closed_forms_service.b_eigen(g)),
            }
        return paths[method]()

    def count(
            self,
            problem: SubbundleProblem,
            method: Optional[Method] = None,
            default_methods: Sequence[Method] = ALL_METHODS,
    ) -> OutputRecord:
        """
        Solve d' and count maximal subbundles.

        Args:
            problem: Instance
            method: Single path to run
            default_methods: Paths run when method is None; the first is reported

        Returns:
            Output record with the count

        Raises:
            UnsupportedRankPairError: For unsupported rank pairs
            NoValidDPrimeError: If d' is not an integer
            VerificationError: If the paths disagree
        """
        case = invariants_service.classify_case(problem)
        solved = invariants_service.solve_dprime(problem)
        methods: Sequence[Method] = tuple(default_methods) if method is None else (method,)
        logger.debug(
            f"Counting {problem!r} via {[m.value for m in methods]}",
            extra={"genus": problem.g, "case": case.kind.value, "methods": [m.value for m in methods]},
        )

        values = {m: self.compute(case, solved.parity, problem.g, m) for m in methods}
        if len(set(values.values())) != 1:
            logger.error(
                f"Computation paths disagree for {problem!r}",
                extra={"genus": problem.g, "case": case.kind.value, "parity": solved.parity.value},
            )
            raise VerificationError(
                "Computation paths disagree",
                details={m.value: str(v) for m, v in values.items()},
            )

        return OutputRecord(
            r=problem.r,
            d=problem.d,
            r_prime=problem.r_prime,
            d_prime=solved.d_prime,
            g=problem.g,
            parity=solved.parity,
            case=case.kind,
            count=values[methods[0]],
            method=methods[0],
            methods_run=list(methods),
            agreement=True,
        )

    def count_maximal_subbundles(self, problem: SubbundleProblem) -> Tuple[SolvedProblem, int]:
        """m(r, d, r', g) together with the solved instance."""
        case = invariants_service.classify_case(problem)
        solved = invariants_service.solve_dprime(problem)
        return solved, self.compute(case, solved.parity, problem.g, Method.BINOMIAL_SUM)

    def table_rows(self, case: SupportedCase, max_g: int) -> Iterator[TableRow]:
        """
        Rows for g = 1..max_g, stepping the recurrence once per row.

        Raises:
            InvalidArgumentError: If max_g < 1
        """
        self.require(max_g >= 1, "max-g must be at least 1", max_g=max_g)
        system = recurrence_service.system_for(case)
        state = system.base
        for g in range(1, max_g + 1):
            if g > 1:
                state = recurrence_service.step(state, system)
            if case.kind is CaseKind.LINE:
                yield LineTableRow(g=g, count=state[0])
            else:
                yield RankTwoTableRow(g=g, a_g=state[0], b_g=state[1])

    def _check_genus(self, g: int) -> List[CheckResult]:
        system = recurrence_service.system_for(SupportedCase.rank_two_of_four())
        iterated = recurrence_service.iterate(system, g)
        a, b = iterated.entries
        results: List[CheckResult] = []

        def check(identity: str, ok: bool, detail: str = "") -> None:
            results.append((identity, ok, "" if ok else detail))

        powered = recurrence_service.count_at_genus(system, g)
        check("recurrence=matrix-power", powered == iterated, f"{iterated.entries} != {powered.entries}")
        binomial = (closed_forms_service.a_binomial(g), closed_forms_service.b_binomial(g))
        check("recurrence=binomial-sum", binomial == (a, b), f"{(a, b)} != {binomial}")
        eigen = (closed_forms_service.a_eigen(g), closed_forms_service.b_eigen(g))
        check("recurrence=eigen-form", eigen == (a, b), f"{(a, b)} != {eigen}")

        check("a+b=8^g", a + b == 8 ** g)
        check("a-b=4^g", a - b == 4 ** g)
        common = 2 ** (2 * g - 1)
        check("a=2^(2g-1)(2^g+1)", a == common * (2 ** g + 1))
        check("b=2^(2g-1)(2^g-1)", b == common * (2 ** g - 1))
        check("gcd(a,b)=2^(2g-1)", gcd(a, b) == common)
        check("a>b>0", a > b > 0)

        if g <= LINE_CHECK_MAX_G:
            bad_ranks = [
                r for r in LINE_RANKS
                if recurrence_service.iterate(line_subbundle_system(r), g)[0]
                != closed_forms_service.count_line_subbundles(r, g)
            ]
            check("line=r^g", not bad_ranks, f"r in {bad_ranks}")

        if 2 <= g <= TRACE_CHECK_MAX_G:
            failures = []
            for parity in ParityClass:
                tree = degeneration_service.build_trace(SupportedCase.rank_two_of_four(), parity, g)
                if degeneration_service.trace_total(tree) != iterated[parity.slot]:
                    failures.append(f"rank2of4/{parity.value}")
            for r in TRACE_LINE_RANKS:
                tree = degeneration_service.build_trace(SupportedCase.line(r), ParityClass.EVEN, g)
                if degeneration_service.trace_total(tree) != r ** g:
                    failures.append(f"line(r={r})")
            check("trace=recurrence", not failures, ", ".join(failures))
        return results

    def verify(self, max_g: int, max_workers: int = 1) -> VerificationReport:
        """
        Run the equivalence suite for g = 1..max_g.

        Genera may be evaluated concurrently; the report is genus-ordered.

        Raises:
            InvalidArgumentError: If max_g < 1
        """
        self.require(max_g >= 1, "max-g must be at least 1", max_g=max_g)
        logger.info(
            f"Verifying g = 1..{max_g} with {max_workers} worker(s)",
            extra={"max_g": max_g, "workers": max_workers},
        )
        genera = range(1, max_g + 1)
        if max_workers > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                per_genus = list(executor.map(self._check_genus, genera))
        else:
            per_genus = [self._check_genus(g) for g in genera]

        tallies = {identity: IdentityTally(identity=identity) for identity in IDENTITIES}
        mismatches: List[Mismatch] = []
        for g, results in zip(genera, per_genus):
            for identity, ok, detail in results:
                tally = tallies[identity]
                if ok:
                    tally.passed += 1
                else:
                    tally.failed += 1
                    mismatches.append(Mismatch(g=g, identity=identity, detail=detail))
                    logger.error(
                        f"Identity {identity} failed at g={g}: {detail}",
                        extra={"genus": g, "identity": identity},
                    )

        base = recurrence_service.iterate(recurrence_service.system_for(SupportedCase.rank_two_of_four()), 1)
        report = VerificationReport(
            max_g=max_g,
            tallies=list(tallies.values()),
            mismatches=mismatches,
            base_case=(base[0], base[1]),
        )
        logger.info(
            f"Verification {'passed' if report.passed else 'failed'}: {len(mismatches)} mismatch(es)",
            extra={"max_g": max_g, "mismatches": len(mismatches)},
        )
        return report


counting_service = CountingService()
