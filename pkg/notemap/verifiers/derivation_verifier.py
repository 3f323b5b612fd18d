"""
Derivations with no printed polynomial to compare against
"""

from typing import Any, Dict

from ..core.errors import HarnessError
from ..core.models import CaseStatus, VerificationCase
from ..core.verifier import BaseVerifier
from ..mapping import apply_to_set, format_polynomial, interpolate_sets
from ..pitch import parse_note_set


class DerivationVerifier(BaseVerifier):

    async def verify(self, claim: Dict[str, Any]) -> VerificationCase:
        source = parse_note_set(self.require(claim, 'from'))
        target = parse_note_set(self.require(claim, 'to'))
        derived = interpolate_sets(source, target, degree=claim.get('degree'), pinned=claim.get('pin'))
        if apply_to_set(derived, source).values != target.values:
            raise HarnessError(f"{claim['id']}: derived polynomial does not reproduce its pairs")

        return self.build_case(
            claim,
            inputs={'from': claim['from'], 'to': claim['to']},
            derived=format_polynomial(derived, claim.get('variable', 'n')),
            status=CaseStatus.DERIVED_ONLY,
        )

    def get_verifier_type(self) -> str:
        return "derivation"
