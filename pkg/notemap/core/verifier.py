"""
Base verifier interface and shared comparison helpers
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import HarnessError
from .models import CaseDiff, CaseStatus, NoteSet, RationalPolynomial, VerificationCase
from ..utils.logger import get_logger


def coefficient_diffs(printed: RationalPolynomial, derived: RationalPolynomial,
                      prefix: str = "") -> Tuple[CaseDiff, ...]:
    """Per-coefficient disagreements, highest power first"""
    width = max(len(printed.trimmed()), len(derived.trimmed()))
    diffs = []
    for power in range(width - 1, -1, -1):
        a, b = printed.coefficient(power), derived.coefficient(power)
        if a != b:
            diffs.append(CaseDiff(f"{prefix}c{power}", str(a), str(b)))
    return tuple(diffs)


def element_diffs(printed: NoteSet, derived: NoteSet, prefix: str = "") -> Tuple[CaseDiff, ...]:
    if len(printed) != len(derived):
        return (CaseDiff(f"{prefix}size", str(len(printed)), str(len(derived))),)
    return tuple(
        CaseDiff(f"{prefix}[{i}]", str(a), str(b))
        for i, (a, b) in enumerate(zip(printed.values, derived.values))
        if a != b
    )


class BaseVerifier(ABC):
    """Base class for all claim verifiers"""

    def __init__(self, config: Dict[str, Any]):
        self.config = config
        self.logger = get_logger(f"verifiers.{self.get_verifier_type()}")

    @abstractmethod
    async def verify(self, claim: Dict[str, Any]) -> VerificationCase:
        """Re-derive one printed claim and compare"""
        pass

    @abstractmethod
    def get_verifier_type(self) -> str:
        """Return the claim kind this verifier handles"""
        pass

    def require(self, claim: Dict[str, Any], key: str) -> Any:
        if key not in claim:
            raise HarnessError(f"claim {claim.get('id', '?')} is missing {key!r}")
        return claim[key]

    def build_case(self, claim: Dict[str, Any], inputs: Dict[str, str], derived: Optional[str],
                   details: Sequence[CaseDiff] = (), printed_claim: Optional[str] = None,
                   status: Optional[CaseStatus] = None, remarks: List[str] = None) -> VerificationCase:
        if status is None:
            status = CaseStatus.MISMATCH if details else CaseStatus.MATCH
        return VerificationCase(
            id=claim['id'],
            description=claim.get('description', ''),
            source=claim.get('source', ''),
            kind=self.get_verifier_type(),
            status=status,
            inputs=inputs,
            printed_claim=printed_claim,
            derived=derived,
            details=tuple(details),
            remarks=tuple(remarks if remarks is not None else claim.get('remarks', [])),
        )
