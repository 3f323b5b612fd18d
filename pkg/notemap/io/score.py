"""
Score documents: canonical JSON export, validated import and consistency checks
"""

import json
import re
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..core.errors import BadReference, NotemapError, PitchError, ScoreFormatError
from ..core.models import (
    CaseDiff,
    CaseStatus,
    FunctionAlgorithm,
    HarnessReport,
    NoteSet,
    RationalPolynomial,
    RealizationEvent,
    Score,
    ScoreFunction,
    VerificationCase,
)
from ..mapping import apply_to_set
from ..pitch import format_pitch, parse_pitch
from .realization import validate_realization

SCORE_VERSION = 1

_SCALAR = r'(?:"(?:[^"\\]|\\.)*"|-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?|true|false|null)'
# Raw newlines only occur between tokens in indented json output
_SCALAR_ARRAY = re.compile(r'\[\n\s*(' + _SCALAR + r'(?:,\n\s*' + _SCALAR + r')*)\n\s*\]')


class SetDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    label: Optional[str] = None
    values: List[str]
    spellings: Optional[List[str]] = None


class FunctionDocument(BaseModel):
    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    label: str
    coefficients: List[str]
    from_label: str = Field(alias='from')
    to: str


class EventDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    set_index: int
    element_index: int
    octave_shift: int = 0
    onset: int = Field(default=0, ge=0)


class DiffDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    position: str
    printed: str
    derived: str


class CaseDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    id: str
    description: str = ""
    source: str = ""
    kind: str
    status: CaseStatus
    inputs: Dict[str, str] = Field(default_factory=dict)
    printed_claim: Optional[str] = None
    derived: Optional[str] = None
    details: List[DiffDocument] = Field(default_factory=list)
    suspected_erratum: Optional[str] = None
    remarks: List[str] = Field(default_factory=list)


class ReportDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    status: str
    expect_known_errata: bool
    unexpected_mismatches: List[str] = Field(default_factory=list)
    cases: List[CaseDocument] = Field(default_factory=list)


class ScoreDocument(BaseModel):
    model_config = ConfigDict(extra='forbid')

    version: int
    sets: List[SetDocument] = Field(default_factory=list)
    functions: List[FunctionDocument] = Field(default_factory=list)
    events: Optional[List[EventDocument]] = None
    report: Optional[ReportDocument] = None


# Export

def _set_to_dict(note_set: NoteSet) -> Dict[str, Any]:
    return {
        'label': note_set.label,
        'values': [str(v) for v in note_set.values],
        'spellings': [format_pitch(s) for s in note_set.spellings] if note_set.spellings is not None else None,
    }


def _case_to_dict(case: VerificationCase) -> Dict[str, Any]:
    return {
        'id': case.id,
        'description': case.description,
        'source': case.source,
        'kind': case.kind,
        'status': case.status.value,
        'inputs': dict(case.inputs),
        'printed_claim': case.printed_claim,
        'derived': case.derived,
        'details': [{'position': d.position, 'printed': d.printed, 'derived': d.derived} for d in case.details],
        'suspected_erratum': case.suspected_erratum,
        'remarks': list(case.remarks),
    }


def report_to_dict(report: HarnessReport) -> Dict[str, Any]:
    return {
        'status': report.status,
        'expect_known_errata': report.expect_known_errata,
        'unexpected_mismatches': list(report.unexpected_mismatches),
        'cases': [_case_to_dict(c) for c in report.cases],
    }


def score_to_dict(score: Score) -> Dict[str, Any]:
    return {
        'version': score.version,
        'sets': [_set_to_dict(s) for s in score.sets],
        'functions': [
            {
                'label': f.label,
                'coefficients': [str(c) for c in f.polynomial.coefficients],
                'from': f.from_label,
                'to': f.to_label,
            }
            for f in score.functions
        ],
        'events': [
            {
                'set_index': e.set_index,
                'element_index': e.element_index,
                'octave_shift': e.octave_shift,
                'onset': e.onset,
            }
            for e in score.events
        ] if score.events is not None else None,
        'report': report_to_dict(score.report) if score.report is not None else None,
    }


def export_json(score: Score) -> bytes:
    """Canonical UTF-8 JSON, keys in fixed order, scalar arrays on one line, newline-terminated"""
    text = json.dumps(score_to_dict(score), indent=2, ensure_ascii=False)
    text = _SCALAR_ARRAY.sub(lambda m: '[' + re.sub(r',\n\s*', ',', m.group(1)) + ']', text)
    return (text + "\n").encode('utf-8')


# Import

def _rational(text: str, where: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ScoreFormatError(f"{where}: {text!r} is not an exact rational") from e


def _set_from_document(doc: SetDocument, index: int) -> NoteSet:
    values = tuple(_rational(v, f"sets[{index}]") for v in doc.values)
    spellings = None
    if doc.spellings is not None:
        try:
            spellings = tuple(parse_pitch(token) for token in doc.spellings)
        except PitchError as e:
            raise ScoreFormatError(f"sets[{index}]: {e}") from e
    try:
        return NoteSet(values, spellings, doc.label)
    except NotemapError as e:
        raise ScoreFormatError(f"sets[{index}]: {e}") from e


def _report_from_document(doc: ReportDocument) -> HarnessReport:
    cases = tuple(
        VerificationCase(
            id=c.id,
            description=c.description,
            source=c.source,
            kind=c.kind,
            status=c.status,
            inputs=dict(c.inputs),
            printed_claim=c.printed_claim,
            derived=c.derived,
            details=tuple(CaseDiff(d.position, d.printed, d.derived) for d in c.details),
            suspected_erratum=c.suspected_erratum,
            remarks=tuple(c.remarks),
        )
        for c in doc.cases
    )
    return HarnessReport(doc.status, doc.expect_known_errata, cases, tuple(doc.unexpected_mismatches))


def import_json(data: Union[bytes, str]) -> Score:
    """Parse and validate a score document"""
    try:
        raw = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ScoreFormatError(f"not valid JSON: {e}") from e
    try:
        doc = ScoreDocument.model_validate(raw)
    except ValidationError as e:
        raise ScoreFormatError(f"invalid score document: {e}") from e
    if doc.version != SCORE_VERSION:
        raise ScoreFormatError(f"unsupported score version {doc.version}")

    sets = tuple(_set_from_document(s, i) for i, s in enumerate(doc.sets))
    functions = tuple(
        ScoreFunction(
            label=f.label,
            polynomial=RationalPolynomial(tuple(_rational(c, f"functions[{i}]") for c in f.coefficients)),
            from_label=f.from_label,
            to_label=f.to,
        )
        for i, f in enumerate(doc.functions)
    )
    events = None
    if doc.events is not None:
        events = tuple(RealizationEvent(e.set_index, e.element_index, e.octave_shift, e.onset) for e in doc.events)
    report = _report_from_document(doc.report) if doc.report is not None else None
    return Score(doc.version, sets, functions, events, report)


# Building and checking

def build_score(sets: Sequence[NoteSet], algorithm: Optional[FunctionAlgorithm] = None,
                events: Optional[Sequence[RealizationEvent]] = None,
                report: Optional[HarnessReport] = None) -> Score:
    """Score over sets with unique labels; step k of the algorithm maps set k to set k+1"""
    labels = [s.label for s in sets]
    if None in labels or len(set(labels)) != len(labels):
        sets = [
            s.with_label(f"S{k}" if s.label is None else f"S{k}-{s.label}")
            for k, s in enumerate(sets)
        ]

    functions = []
    if algorithm is not None:
        for k, (label, poly) in enumerate(algorithm.steps):
            functions.append(ScoreFunction(label, poly, sets[k].label, sets[k + 1].label))
    return Score(
        version=SCORE_VERSION,
        sets=tuple(sets),
        functions=tuple(functions),
        events=tuple(events) if events is not None else None,
        report=report,
    )


def check_score(score: Score) -> List[str]:
    """Every problem found: dangling references, inexact functions, octave-ordering violations"""
    problems: List[str] = []
    labels = [s.label for s in score.sets if s.label is not None]
    duplicates = sorted({label for label in labels if labels.count(label) > 1})
    if duplicates:
        problems.append(f"duplicate set labels: {', '.join(duplicates)}")

    for function in score.functions:
        try:
            source = score.set_by_label(function.from_label)
            target = score.set_by_label(function.to_label)
        except BadReference as e:
            problems.append(f"function {function.label}: {e}")
            continue
        if len(source) != len(target):
            problems.append(
                f"function {function.label}: {function.from_label} and {function.to_label} differ in size"
            )
            continue
        image = apply_to_set(function.polynomial, source)
        for i, (got, want) in enumerate(zip(image.values, target.values)):
            if got != want:
                problems.append(
                    f"function {function.label}: maps element {i} of {function.from_label} to {got}, "
                    f"but {function.to_label} has {want}"
                )

    if score.events is not None:
        try:
            verdict = validate_realization(score.events, score.sets)
        except BadReference as e:
            problems.append(f"events: {e}")
        else:
            for event in verdict.violations:
                problems.append(
                    f"event at onset {event.onset} shifts element {event.element_index} of set "
                    f"{event.set_index} by {event.octave_shift} octaves before it sounds unshifted"
                )
    return problems
