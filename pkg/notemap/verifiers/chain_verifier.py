"""
Function algorithms applied step by step against printed intermediate sets
"""

from typing import Any, Dict, List

from ..core.models import CaseDiff, VerificationCase
from ..core.verifier import BaseVerifier, coefficient_diffs, element_diffs
from ..mapping import build_algorithm, interpolate_sets, run_algorithm
from ..pitch import format_note_set, parse_note_set


class ChainVerifier(BaseVerifier):
    """Runs printed steps from the start set; each step is also re-derived by interpolation"""

    async def verify(self, claim: Dict[str, Any]) -> VerificationCase:
        start = parse_note_set(self.require(claim, 'start'))
        expressions = list(self.require(claim, 'steps'))
        labels = list(claim.get('labels', []))
        printed_sets = [parse_note_set(text) for text in self.require(claim, 'printed_sets')]

        algorithm = build_algorithm(expressions, labels)
        derived_sets = run_algorithm(algorithm, start)[1:]

        details: List[CaseDiff] = []
        for k, (printed, derived) in enumerate(zip(printed_sets, derived_sets), start=1):
            details.extend(element_diffs(printed, derived, prefix=f"set{k}"))

        # Distinct-node steps have a unique interpolant, which must be the printed step
        previous = start
        for (label, poly), current in zip(algorithm.steps, derived_sets):
            if len(set(previous.values)) == len(previous):
                rederived = interpolate_sets(previous, current)
                details.extend(coefficient_diffs(poly, rederived, prefix=f"{label}."))
            previous = current

        inputs = {'start': claim['start']}
        for label, expression in zip(algorithm.labels, expressions):
            inputs[label] = expression
        return self.build_case(
            claim,
            inputs=inputs,
            printed_claim=' -> '.join(format_note_set(s) for s in printed_sets),
            derived=' -> '.join(format_note_set(s) for s in derived_sets),
            details=details,
        )

    def get_verifier_type(self) -> str:
        return "chain"
