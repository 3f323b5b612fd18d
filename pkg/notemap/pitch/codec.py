"""
Pitch spelling codec

Spellings are letter + accidental + octave. Values are exact semitone counts
anchored at C4 = 0, so quarter-tones land on half-integers.
"""

import re
from fractions import Fraction
from typing import Dict, Optional, Union

from ..core.errors import MalformedAccidental, MissingOctave, OffGrid, UnknownLetter
from ..core.models import LETTER_BASE, PitchSpelling, SpellingPolicy, as_rational

ACCIDENTALS: Dict[str, Fraction] = {
    '': Fraction(0),
    '#': Fraction(1),
    '##': Fraction(2),
    'x': Fraction(2),
    'b': Fraction(-1),
    'bb': Fraction(-2),
    '+q': Fraction(1, 2),
    '-q': Fraction(-1, 2),
    '+3q': Fraction(3, 2),
    '-3q': Fraction(-3, 2),
    # Aliases for the asterisk glosses; parse-only
    '*': Fraction(1, 2),
    '**': Fraction(3, 2),
}

CANONICAL_ACCIDENTALS: Dict[Fraction, str] = {
    Fraction(0): '',
    Fraction(1): '#',
    Fraction(2): '##',
    Fraction(-1): 'b',
    Fraction(-2): 'bb',
    Fraction(1, 2): '+q',
    Fraction(-1, 2): '-q',
    Fraction(3, 2): '+3q',
    Fraction(-3, 2): '-3q',
}

NATURALS: Dict[int, str] = {base: letter for letter, base in LETTER_BASE.items()}
SHARP_NAMES: Dict[int, str] = {1: 'C', 3: 'D', 6: 'F', 8: 'G', 10: 'A'}
FLAT_NAMES: Dict[int, str] = {1: 'D', 3: 'E', 6: 'G', 8: 'A', 10: 'B'}

_OCTAVE_SUFFIX = re.compile(r'^(.*?)(-?\d+)$')

PolicyLike = Union[SpellingPolicy, str]


def parse_pitch(text: str) -> PitchSpelling:
    """Parse a token such as ``C4``, ``A#4``, ``Bb3``, ``A+q3`` or ``C-1``"""
    token = text.strip()
    if not token or token[0] not in LETTER_BASE:
        raise UnknownLetter(f"unknown note letter in {text!r}")

    match = _OCTAVE_SUFFIX.match(token[1:])
    if match is None:
        raise MissingOctave(f"pitch token {text!r} has no octave number")

    accidental_text, octave_text = match.groups()
    if accidental_text not in ACCIDENTALS:
        raise MalformedAccidental(f"malformed accidental {accidental_text!r} in {text!r}")

    return PitchSpelling(token[0], ACCIDENTALS[accidental_text], int(octave_text))


def format_pitch(spelling: PitchSpelling) -> str:
    return f"{spelling.letter}{CANONICAL_ACCIDENTALS[spelling.accidental]}{spelling.octave}"


def spelling_to_value(spelling: PitchSpelling) -> Fraction:
    return spelling.value


def _coerce_policy(policy: Optional[PolicyLike]) -> SpellingPolicy:
    if policy is None:
        return SpellingPolicy.SHARPS
    return SpellingPolicy(policy)


def _spell_pitch_class(pc: Fraction, policy: SpellingPolicy):
    """Return (letter, accidental) for a pitch class on the half-semitone grid"""
    if pc.denominator == 1:
        semitone = int(pc)
        if semitone in NATURALS:
            return NATURALS[semitone], Fraction(0)
        if policy == SpellingPolicy.SHARPS:
            return SHARP_NAMES[semitone], Fraction(1)
        return FLAT_NAMES[semitone], Fraction(-1)

    # Quarter-tone: raise the nearest natural below, or lower the nearest natural above
    if policy == SpellingPolicy.SHARPS:
        below = int(pc - Fraction(1, 2))
        if below in NATURALS:
            return NATURALS[below], Fraction(1, 2)
        return NATURALS[below - 1], Fraction(3, 2)

    above = int(pc + Fraction(1, 2)) % 12
    if above in NATURALS:
        return NATURALS[above], Fraction(-1, 2)
    return NATURALS[(above + 1) % 12], Fraction(-3, 2)


def value_to_spelling(value, policy: Optional[PolicyLike] = None) -> PitchSpelling:
    """Spell an exact value; naturals win, otherwise the policy picks sharps or flats"""
    v = as_rational(value)
    if v.denominator not in (1, 2):
        raise OffGrid(f"{v} is finer than quarter-tone notation supports")

    letter, accidental = _spell_pitch_class(pitch_class(v), _coerce_policy(policy))
    # Octave follows from the value identity; exact because base + accidental = v (mod 12)
    octave = 4 + (v - LETTER_BASE[letter] - accidental) / 12
    return PitchSpelling(letter, accidental, int(octave))


def pitch_class(value) -> Fraction:
    """Reduce a value into [0, 12)"""
    return as_rational(value) % 12
