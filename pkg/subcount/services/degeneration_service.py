"""
Degeneration trace: the genus-g count split over the node joining an elliptic
tail to a genus-(g-1) curve.
"""
import logging
from typing import List, Optional

from subcount.core.exceptions import InvalidInstanceError, VerificationError
from subcount.models.counts import CountVector
from subcount.models.problem import CaseKind, ParityClass, SolvedProblem, SupportedCase
from subcount.models.trace import ContributionRecord, GenusOneBase, SplitType, TraceTree
from subcount.services.base_service import BaseService
from subcount.services.invariants_service import invariants_service
from subcount.services.recurrence_service import recurrence_service

logger = logging.getLogger(__name__)

EXCLUDED_SPLIT_REASON = (
    "The elliptic bundle has finitely many rank-two subbundles of degree one and the "
    "genus-side bundle has finitely many of degree d'; a generic gluing matches none "
    "of them, so they cannot glue with each other."
)

TRACE_ANNOTATIONS = (
    "Each counted subbundle is a smooth point of the quot scheme and counts with multiplicity one (not checked).",
    "Kernels of generic elementary modifications are generic bundles (not checked).",
)


class DegenerationService(BaseService):
    """Builds and audits single-level degeneration traces."""

    def genus_one_base(self, case: SupportedCase, parity: Optional[ParityClass] = None) -> int:
        """
        Count on an elliptic curve: r line subbundles; 6 (even d') or 2 (odd d') rank-two subbundles.

        Raises:
            InvalidArgumentError: If the parity is missing for rank2of4
        """
        if case.kind is CaseKind.LINE:
            return case.r
        self.require(parity is not None, "parity is required for rank2of4")
        # four line bundles of degree d'/2, choose two; or two indecomposable rank-two summands
        return 6 if parity is ParityClass.EVEN else 2

    def genus_one_record(self, case: SupportedCase, parity: Optional[ParityClass] = None) -> GenusOneBase:
        if case.kind is CaseKind.LINE:
            parity = None
        return GenusOneBase(case=case, parity=parity, count=self.genus_one_base(case, parity))

    def _component_instances(self, case: SupportedCase, split_type: SplitType, solved: SolvedProblem):
        p = solved.problem
        if case.kind is CaseKind.LINE:
            # degree-0 modification of a rank-r degree-(r-1) elliptic bundle; genus side has degree d-r+1
            elliptic = (p.r, 0)
            genus_degree = p.d - p.r + 1
        elif split_type is SplitType.ZERO_FULL:
            elliptic = (4, 0)
            genus_degree = p.d - 2
        elif split_type is SplitType.ONE_SHIFTED:
            elliptic = (4, 2)
            _, genus_degree = invariants_service.elementary_modification(4, p.d - 2, 2)
        else:
            elliptic = (4, 2)
            genus_degree = p.d - 2

        elliptic_instance = invariants_service.solve(elliptic[0], elliptic[1], p.r_prime, 1)
        genus_instance = invariants_service.solve(p.r, genus_degree, p.r_prime, p.g - 1)
        expected = split_type.concrete(solved.d_prime)
        if (elliptic_instance.d_prime, genus_instance.d_prime) != expected:
            raise VerificationError(
                "Component instances disagree with the split",
                details={"split": list(expected),
                         "found": [elliptic_instance.d_prime, genus_instance.d_prime]},
            )
        return elliptic_instance, genus_instance

    def _record(
            self,
            case: SupportedCase,
            split_type: SplitType,
            parity: ParityClass,
            previous: CountVector,
            solved: Optional[SolvedProblem],
            excluded: bool = False,
    ) -> ContributionRecord:
        elliptic_parity = ParityClass.of(split_type.elliptic_degree)
        elliptic_count = self.genus_one_base(case, elliptic_parity)
        if case.kind is CaseKind.LINE:
            recursive_count = previous[0]
        else:
            # the d'-1 side reads the opposite parity entry
            genus_parity = parity.flipped() if split_type.genus_shift else parity
            recursive_count = previous[genus_parity.slot]

        fields = {}
        if solved is not None:
            elliptic_instance, genus_instance = self._component_instances(case, split_type, solved)
            fields = {
                "split": split_type.concrete(solved.d_prime),
                "elliptic_instance": elliptic_instance,
                "genus_instance": genus_instance,
            }
        return ContributionRecord(
            split_type=split_type,
            elliptic_count=elliptic_count,
            recursive_count=recursive_count,
            product=0 if excluded else elliptic_count * recursive_count,
            excluded=excluded,
            reason=EXCLUDED_SPLIT_REASON if excluded else "",
            **fields,
        )

    def build_trace(
            self,
            case: SupportedCase,
            parity: ParityClass,
            g: int,
            solved: Optional[SolvedProblem] = None,
    ) -> TraceTree:
        """
        Decompose the genus-g count by degree splitting over the node.

        Args:
            case: Rank pair
            parity: Parity of d' (ignored for line subbundles except as a label)
            g: Genus of the decomposed curve, at least 2
            solved: Concrete instance; when given its parity wins and degrees are filled in

        Returns:
            Trace tree whose total equals the recurrence value at genus g

        Raises:
            InvalidArgumentError: If g < 2 or the instance disagrees with the case
        """
        self.require(g >= 2, "a trace needs g >= 2; genus one is the base case", g=g)
        if solved is not None:
            self.require(
                (solved.problem.r, solved.problem.r_prime, solved.problem.g) == (case.r, case.r_prime, g),
                "solved instance does not match the case and genus",
                InvalidInstanceError,
            )
            parity = solved.parity
        logger.debug(
            f"Building trace for {case} parity={parity.value} g={g}",
            extra={"genus": g, "case": case.kind.value, "parity": parity.value},
        )

        previous = recurrence_service.iterate(recurrence_service.system_for(case), g - 1)
        records: List[ContributionRecord] = [
            self._record(case, SplitType.ZERO_FULL, parity, previous, solved)
        ]
        if case.kind is CaseKind.RANK_TWO_OF_FOUR:
            records.append(self._record(case, SplitType.ONE_SHIFTED, parity, previous, solved))
            records.append(self._record(case, SplitType.ONE_FULL, parity, previous, solved, excluded=True))

        return TraceTree(
            genus=g,
            case=case,
            parity=parity,
            d_prime=solved.d_prime if solved is not None else None,
            records=tuple(records),
            total=sum(rec.product for rec in records if not rec.excluded),
            annotations=TRACE_ANNOTATIONS,
        )

    def trace_total(self, tree: TraceTree) -> int:
        """Sum of the contributing products."""
        return sum(rec.product for rec in tree.records if not rec.excluded)

    def render_trace_text(self, tree: TraceTree) -> str:
        """Indented text rendering of a trace."""
        header = f"genus {tree.genus} {tree.case} parity={tree.parity.value}"
        if tree.d_prime is not None:
            header += f" d'={tree.d_prime}"
        lines = [header]
        for rec in tree.records:
            split = f"({rec.split[0]},{rec.split[1]})" if rec.split is not None else f"({rec.split_type.value})"
            if rec.excluded:
                lines.append(f"  split {split}: excluded")
                lines.append(f"    reason: {rec.reason}")
                continue
            lines.append(
                f"  split {split}: {rec.elliptic_count} x {rec.recursive_count} = {rec.product}"
            )
            if rec.elliptic_instance is not None and rec.genus_instance is not None:
                for label, inst in (("elliptic", rec.elliptic_instance), ("genus", rec.genus_instance)):
                    q = inst.problem
                    lines.append(
                        f"    {label}: r={q.r} d={q.d} r'={q.r_prime} g={q.g} d'={inst.d_prime}"
                    )
        lines.append(f"  total: {tree.total}")
        for note in tree.annotations:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


degeneration_service = DegenerationService()
