"""
Core data models for notemap
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .errors import BadReference, CardinalityMismatch, DuplicateStepLabel, NotemapError

# Exact scalar used for every pitch, coefficient and matrix entry
Rational = Fraction

LETTER_BASE: Dict[str, int] = {'C': 0, 'D': 2, 'E': 4, 'F': 5, 'G': 7, 'A': 9, 'B': 11}

ACCIDENTAL_VALUES: Tuple[Fraction, ...] = tuple(
    Fraction(n, 2) for n in (-4, -3, -2, -1, 0, 1, 2, 3, 4)
)


def as_rational(value: Any) -> Fraction:
    """Coerce ints, Fractions and exact strings to Fraction; floats are refused"""
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is not an exact rational")
    return Fraction(value)


class SpellingPolicy(str, Enum):
    SHARPS = "sharps"
    FLATS = "flats"


@dataclass(frozen=True)
class PitchSpelling:
    letter: str
    accidental: Fraction
    octave: int

    def __post_init__(self):
        if self.letter not in LETTER_BASE:
            raise NotemapError(f"letter must be one of A-G, got {self.letter!r}")
        object.__setattr__(self, 'accidental', as_rational(self.accidental))
        if self.accidental not in ACCIDENTAL_VALUES:
            raise NotemapError(f"accidental {self.accidental} is not a half-semitone step within two semitones")

    @property
    def value(self) -> Fraction:
        return LETTER_BASE[self.letter] + self.accidental + 12 * (self.octave - 4)


@dataclass(frozen=True)
class NoteSet:
    """Ordered pitch values with optional parallel spellings"""

    values: Tuple[Fraction, ...]
    spellings: Optional[Tuple[PitchSpelling, ...]] = None
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(as_rational(v) for v in self.values))
        if self.spellings is not None:
            spellings = tuple(self.spellings)
            if len(spellings) != len(self.values):
                raise NotemapError("spellings must be parallel to values")
            for spelling, value in zip(spellings, self.values):
                if spelling.value != value:
                    raise NotemapError(f"spelling {spelling} does not denote {value}")
            object.__setattr__(self, 'spellings', spellings)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def with_label(self, label: Optional[str]) -> 'NoteSet':
        return NoteSet(self.values, self.spellings, label)


@dataclass(frozen=True)
class RMatrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise NotemapError("matrix dimensions must be positive")
        entries = tuple(as_rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise NotemapError(f"expected {self.rows * self.cols} entries, got {len(entries)}")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> 'RMatrix':
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise NotemapError("rows must be nonempty and of equal length")
        return cls(len(rows), len(rows[0]), tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> 'RMatrix':
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> List[List[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def with_column(self, j: int, column: Sequence[Fraction]) -> 'RMatrix':
        rows = self.to_rows()
        for i, value in enumerate(column):
            rows[i][j] = value
        return RMatrix.from_rows(rows)

    def without_columns(self, drop: FrozenSet[int]) -> 'RMatrix':
        return RMatrix.from_rows([[v for j, v in enumerate(r) if j not in drop] for r in self.to_rows()])


@dataclass(frozen=True)
class RVector:
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(as_rational(e) for e in self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)


class SolveKind(str, Enum):
    UNIQUE = "Unique"
    UNDERDETERMINED = "Underdetermined"
    INCONSISTENT = "Inconsistent"


@dataclass(frozen=True)
class SolveOutcome:
    kind: SolveKind
    rank: int
    solution: Optional[RVector] = None
    free_columns: Tuple[int, ...] = ()


@dataclass(frozen=True, eq=False)
class RationalPolynomial:
    """Ascending coefficients: index i holds c_i of f(n) = sum c_i n^i

    Trailing zeros are kept when they come from pinning so the declared degree
    stays visible; equality and degree() ignore them.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(as_rational(c) for c in self.coefficients))

    def trimmed(self) -> Tuple[Fraction, ...]:
        coefficients = list(self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        return tuple(coefficients)

    def degree(self) -> int:
        """Index of the highest nonzero coefficient, -1 for the zero polynomial"""
        return len(self.trimmed()) - 1

    @property
    def declared_degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.trimmed()

    def coefficient(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.trimmed() == other.trimmed()

    def __hash__(self) -> int:
        return hash(self.trimmed())


@dataclass(frozen=True)
class InterpolationProblem:
    """Pairs (s, t) to satisfy f(s) = t, with optional degree and zero pins

    ``pinned_zero=None`` selects the default: highest indices are pinned until
    the system is square over the distinct nodes.
    """

    pairs: Tuple[Tuple[Fraction, Fraction], ...]
    target_degree: Optional[int] = None
    pinned_zero: Optional[FrozenSet[int]] = None

    def __post_init__(self):
        object.__setattr__(self, 'pairs', tuple((as_rational(s), as_rational(t)) for s, t in self.pairs))
        if self.pinned_zero is not None:
            object.__setattr__(self, 'pinned_zero', frozenset(self.pinned_zero))
        if self.target_degree is not None and self.target_degree < 0:
            raise NotemapError("target degree must be non-negative")

    @property
    def degree(self) -> int:
        if self.target_degree is not None:
            return self.target_degree
        return len(self.pairs) - 1

    @property
    def distinct_nodes(self) -> int:
        return len({s for s, _ in self.pairs})


@dataclass(frozen=True)
class FunctionAlgorithm:
    """Polynomials applied in sequence, each labelled"""

    steps: Tuple[Tuple[str, RationalPolynomial], ...] = ()

    def __post_init__(self):
        steps = tuple((label, poly) for label, poly in self.steps)
        labels = [label for label, _ in steps]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise DuplicateStepLabel(f"duplicate step labels: {', '.join(duplicates)}")
        object.__setattr__(self, 'steps', steps)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def labels(self) -> List[str]:
        return [label for label, _ in self.steps]


@dataclass(frozen=True)
class ProgressionTemplate:
    name: str
    chords: Tuple[Tuple[str, Tuple[Fraction, ...]], ...]
    source: str = "generic"
    description: str = ""

    def __post_init__(self):
        chords = tuple((label, tuple(as_rational(r) for r in reps)) for label, reps in self.chords)
        for label, reps in chords:
            for r in reps:
                if not 0 <= r < 12:
                    raise NotemapError(f"{self.name}: representative {r} of {label} is not a pitch class")
        if len({len(reps) for _, reps in chords}) > 1:
            raise CardinalityMismatch(f"{self.name}: chords differ in cardinality")
        object.__setattr__(self, 'chords', chords)

    @property
    def figures(self) -> List[str]:
        return [label for label, _ in self.chords]


class CaseStatus(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    DERIVED_ONLY = "DERIVED_ONLY"


@dataclass(frozen=True)
class CaseDiff:
    """One disagreeing position between a printed claim and its derivation"""

    position: str
    printed: str
    derived: str


@dataclass(frozen=True)
class VerificationCase:
    id: str
    description: str
    source: str
    kind: str
    status: CaseStatus
    inputs: Dict[str, str] = field(default_factory=dict)
    printed_claim: Optional[str] = None
    derived: Optional[str] = None
    details: Tuple[CaseDiff, ...] = ()
    suspected_erratum: Optional[str] = None
    remarks: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'details', tuple(self.details))
        object.__setattr__(self, 'remarks', tuple(self.remarks))


@dataclass(frozen=True)
class HarnessReport:
    status: str
    expect_known_errata: bool
    cases: Tuple[VerificationCase, ...] = ()
    unexpected_mismatches: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'cases', tuple(self.cases))
        object.__setattr__(self, 'unexpected_mismatches', tuple(self.unexpected_mismatches))

    @property
    def mismatches(self) -> List[str]:
        return [c.id for c in self.cases if c.status == CaseStatus.MISMATCH]

    @property
    def succeeded(self) -> bool:
        return self.status == "SUCCESS"


@dataclass(frozen=True)
class RealizationEvent:
    set_index: int
    element_index: int
    octave_shift: int = 0
    onset: int = 0

    def __post_init__(self):
        if self.onset < 0:
            raise BadReference(f"onset must be non-negative, got {self.onset}")


@dataclass(frozen=True)
class RealizationVerdict:
    valid: bool
    violations: Tuple[RealizationEvent, ...] = ()


@dataclass(frozen=True)
class ScoreFunction:
    label: str
    polynomial: RationalPolynomial
    from_label: str
    to_label: str


@dataclass(frozen=True)
class Score:
    version: int = 1
    sets: Tuple[NoteSet, ...] = ()
    functions: Tuple[ScoreFunction, ...] = ()
    events: Optional[Tuple[RealizationEvent, ...]] = None
    report: Optional[HarnessReport] = None

    def __post_init__(self):
        object.__setattr__(self, 'sets', tuple(self.sets))
        object.__setattr__(self, 'functions', tuple(self.functions))
        if self.events is not None:
            object.__setattr__(self, 'events', tuple(self.events))

    def set_by_label(self, label: str) -> NoteSet:
        for note_set in self.sets:
            if note_set.label == label:
                return note_set
        raise BadReference(f"no set labelled {label!r}")
