"""
Printed polynomial versus the exact interpolant of its printed pairs
"""

from typing import Any, Dict, List

from ..core.errors import HarnessError
from ..core.models import NoteSet, RationalPolynomial, VerificationCase
from ..core.verifier import BaseVerifier, coefficient_diffs
from ..mapping import apply_to_set, format_polynomial, integer_images, interpolate_sets, parse_function_expr
from ..pitch import parse_note_set


class PolynomialVerifier(BaseVerifier):
    """Interpolates from -> to and compares coefficient by coefficient"""

    async def verify(self, claim: Dict[str, Any]) -> VerificationCase:
        source = parse_note_set(self.require(claim, 'from'))
        target = parse_note_set(self.require(claim, 'to'))
        printed = parse_function_expr(self.require(claim, 'printed'))
        pin = claim.get('pin')
        variable = claim.get('variable', 'n')

        derived = interpolate_sets(source, target, degree=claim.get('degree'), pinned=pin)
        if apply_to_set(derived, source).values != target.values:
            raise HarnessError(f"{claim['id']}: derived polynomial does not reproduce its pairs")

        details = coefficient_diffs(printed, derived)
        self.logger.debug(f"{claim['id']}: {len(details)} coefficient differences")

        remarks = list(claim.get('remarks', []))
        if 'integer_window' in claim:
            remarks.append(self.integer_remark(claim, derived, source, variable))

        inputs = {'from': claim['from'], 'to': claim['to']}
        if pin is not None:
            inputs['pin'] = ','.join(str(i) for i in sorted(pin))
        return self.build_case(
            claim,
            inputs=inputs,
            printed_claim=format_polynomial(printed, variable),
            derived=format_polynomial(derived, variable),
            details=details,
            remarks=remarks,
        )

    def integer_remark(self, claim: Dict[str, Any], derived: RationalPolynomial,
                       source: NoteSet, variable: str) -> str:
        """Report integer inputs beyond the source set that still land on integers"""
        window = claim['integer_window']
        if (not isinstance(window, list) or len(window) != 2
                or not all(isinstance(b, int) for b in window) or window[0] > window[1]):
            raise HarnessError(f"{claim['id']}: integer_window must be [low, high], got {window!r}")
        low, high = window

        images: List[str] = [
            f"{variable}={n} -> {value}"
            for n, value in integer_images(derived, exclude=source.values, window=range(low, high + 1))
        ]
        self.logger.debug(f"{claim['id']}: {len(images)} extra integer images in [{low}, {high}]")
        return f"other integer inputs in [{low}, {high}] with integer images: {', '.join(images) or 'none'}"

    def get_verifier_type(self) -> str:
        return "polynomial"
