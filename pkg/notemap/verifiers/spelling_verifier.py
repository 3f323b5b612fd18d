"""
Printed note names versus the printed numbers they are said to denote
"""

from typing import Any, Dict

from ..core.models import VerificationCase
from ..core.verifier import BaseVerifier, element_diffs
from ..pitch import format_note_set, parse_note_set, parse_spelled_set


class SpellingVerifier(BaseVerifier):

    async def verify(self, claim: Dict[str, Any]) -> VerificationCase:
        spelled = parse_spelled_set(self.require(claim, 'spelled'))
        printed = parse_note_set(self.require(claim, 'printed'))
        return self.build_case(
            claim,
            inputs={'spelled': claim['spelled']},
            printed_claim=format_note_set(printed),
            derived=format_note_set(spelled),
            details=element_diffs(printed, spelled),
        )

    def get_verifier_type(self) -> str:
        return "spelling"
