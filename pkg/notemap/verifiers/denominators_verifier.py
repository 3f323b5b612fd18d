"""
Coefficient denominator profiles of printed functions
"""

from typing import Any, Dict, List

from ..core.models import CaseStatus, VerificationCase
from ..core.verifier import BaseVerifier
from ..mapping import denominator_profile, parse_function_expr


class DenominatorsVerifier(BaseVerifier):
    """Reports raw denominators and their gcd per function; asserts nothing"""

    async def verify(self, claim: Dict[str, Any]) -> VerificationCase:
        inputs: Dict[str, str] = {}
        lines: List[str] = []
        gcds = set()
        for entry in self.require(claim, 'functions'):
            label, printed = entry['label'], entry['printed']
            profile = denominator_profile(parse_function_expr(printed))
            inputs[label] = printed
            gcds.add(profile.gcd)
            lines.append(
                f"{label}: {list(profile.denominators)} gcd={profile.gcd} lcm={profile.lcm}"
            )

        remarks = list(claim.get('remarks', []))
        remarks.append(f"distinct gcd values: {', '.join(str(g) for g in sorted(gcds))}")
        return self.build_case(
            claim,
            inputs=inputs,
            derived='; '.join(lines),
            status=CaseStatus.DERIVED_ONLY,
            remarks=remarks,
        )

    def get_verifier_type(self) -> str:
        return "denominators"
