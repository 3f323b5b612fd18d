"""
Verification harness - re-derives every registered printed claim
"""

import asyncio
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from .errors import HarnessError, UnknownCase
from .models import CaseStatus, HarnessReport, VerificationCase
from ..utils.config import HarnessSettings
from ..utils.logger import get_logger
from ..verifiers import get_verifier_registry


def _load_yaml(path: Path, key: str) -> Any:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise HarnessError(f"cannot read {path}: {e}") from e
    if key not in data:
        raise HarnessError(f"{path} has no top-level {key!r}")
    return data[key]


class VerificationHarness:
    def __init__(self, settings: Optional[HarnessSettings] = None):
        self.settings = settings or HarnessSettings()
        self.logger = get_logger(__name__)
        self.verifiers = get_verifier_registry()

        claims = _load_yaml(Path(self.settings.claims_file), 'claims') or []
        self.claims: Dict[str, Dict[str, Any]] = {}
        for claim in claims:
            case_id = claim.get('id')
            if not case_id or case_id in self.claims:
                raise HarnessError(f"claim ids must be present and unique, got {case_id!r}")
            if claim.get('kind') not in self.verifiers:
                raise HarnessError(f"claim {case_id} has unknown kind {claim.get('kind')!r}")
            self.claims[case_id] = claim

        self.known_errata: Dict[str, str] = _load_yaml(Path(self.settings.errata_file), 'known_errata') or {}
        self.logger.debug(f"Loaded {len(self.claims)} claims and {len(self.known_errata)} known errata")

    @property
    def case_ids(self) -> List[str]:
        return sorted(self.claims)

    def select(self, prefix: Optional[str] = None) -> List[str]:
        """Exact id if registered, otherwise every id starting with the prefix"""
        if prefix is None:
            return self.case_ids
        if prefix in self.claims:
            return [prefix]
        return [case_id for case_id in self.case_ids if case_id.startswith(prefix)]

    async def verify_case(self, case_id: str) -> VerificationCase:
        if case_id not in self.claims:
            raise UnknownCase(f"no case registered as {case_id!r}")
        claim = self.claims[case_id]
        verifier = self.verifiers[claim['kind']](self.settings.model_dump())
        case = await verifier.verify(claim)

        if case.status == CaseStatus.MISMATCH:
            erratum = self.known_errata.get(case_id)
            if erratum is None:
                self.logger.warning(f"Unexpected mismatch in {case_id}: {len(case.details)} differences")
            else:
                self.logger.info(f"Known erratum in {case_id}: {erratum}")
            case = _with_erratum(case, erratum or "unexplained mismatch")
        return case

    async def verify_all(self, expect_known_errata: bool = False, prefix: Optional[str] = None) -> HarnessReport:
        case_ids = self.select(prefix)
        self.logger.info(f"Verifying {len(case_ids)} cases")

        if self.settings.parallel:
            cases = await asyncio.gather(*(self.verify_case(case_id) for case_id in case_ids))
        else:
            cases = [await self.verify_case(case_id) for case_id in case_ids]
        cases = sorted(cases, key=lambda c: c.id)

        mismatches = [c.id for c in cases if c.status == CaseStatus.MISMATCH]
        unexpected = [case_id for case_id in mismatches if case_id not in self.known_errata]
        if not mismatches or (expect_known_errata and not unexpected):
            status = "SUCCESS"
        else:
            status = "FAILURE"

        self.logger.info(f"Verification {status}: {len(mismatches)} mismatches, {len(unexpected)} unexpected")
        return HarnessReport(status, expect_known_errata, tuple(cases), tuple(unexpected))

    def run_case(self, case_id: str) -> VerificationCase:
        return asyncio.run(self.verify_case(case_id))

    def run_all(self, expect_known_errata: bool = False, prefix: Optional[str] = None) -> HarnessReport:
        return asyncio.run(self.verify_all(expect_known_errata, prefix))


def _with_erratum(case: VerificationCase, erratum: str) -> VerificationCase:
    return VerificationCase(
        id=case.id,
        description=case.description,
        source=case.source,
        kind=case.kind,
        status=case.status,
        inputs=case.inputs,
        printed_claim=case.printed_claim,
        derived=case.derived,
        details=case.details,
        suspected_erratum=erratum,
        remarks=case.remarks,
    )
