"""
Note-set grammar: ``{entry, entry, ...}``

An entry is a pitch token, a signed integer, a fraction ``p/q`` or a
terminating decimal. Decimals convert exactly.
"""

import re
from fractions import Fraction
from typing import List, Optional

from ..core.errors import EmptySet, IrrationalUnsupported, MalformedEntry, PitchError
from ..core.models import NoteSet, PitchSpelling
from .codec import PolicyLike, format_pitch, parse_pitch, value_to_spelling

_INTEGER = re.compile(r'^[+-]?\d+$')
_FRACTION = re.compile(r'^[+-]?\d+/\d+$')
_DECIMAL = re.compile(r'^[+-]?(\d+\.\d*|\.\d+)$')
_IRRATIONAL = re.compile(r'(pi|π|sqrt|√|\be\b|phi|tau|inf|nan)', re.IGNORECASE)


def _parse_entry(entry: str):
    """Return (value, spelling-or-None) for one entry"""
    if _INTEGER.match(entry) or _DECIMAL.match(entry):
        return Fraction(entry), None
    if _FRACTION.match(entry):
        numerator, denominator = entry.split('/')
        if int(denominator) == 0:
            raise MalformedEntry(f"zero denominator in entry {entry!r}")
        return Fraction(int(numerator), int(denominator)), None
    if entry[:1].isalpha() and entry[0].isupper():
        try:
            spelling = parse_pitch(entry)
        except PitchError as e:
            if _IRRATIONAL.search(entry):
                raise IrrationalUnsupported(f"irrational entry {entry!r} has no note value") from e
            raise MalformedEntry(f"malformed entry {entry!r}: {e}") from e
        return spelling.value, spelling
    if _IRRATIONAL.search(entry):
        raise IrrationalUnsupported(f"irrational entry {entry!r} has no note value")
    raise MalformedEntry(f"malformed entry {entry!r}")


def parse_note_set(text: str, label: Optional[str] = None) -> NoteSet:
    """Parse a brace-delimited note-set; spellings are kept when every entry is a pitch"""
    body = text.strip()
    if not (body.startswith('{') and body.endswith('}')):
        raise MalformedEntry(f"note-set must be enclosed in braces: {text!r}")
    body = body[1:-1].strip()
    if not body:
        raise EmptySet("note-set has no entries")

    values: List[Fraction] = []
    spellings: List[Optional[PitchSpelling]] = []
    for raw in body.split(','):
        entry = raw.strip()
        if not entry:
            raise MalformedEntry(f"empty entry in {text!r}")
        value, spelling = _parse_entry(entry)
        values.append(value)
        spellings.append(spelling)

    if all(s is not None for s in spellings):
        return NoteSet(tuple(values), tuple(spellings), label)
    return NoteSet(tuple(values), None, label)


def parse_spelled_set(text: str, label: Optional[str] = None) -> NoteSet:
    """Parse a note-set whose entries must all be pitch tokens"""
    note_set = parse_note_set(text, label)
    if note_set.spellings is None:
        raise MalformedEntry(f"expected only pitch tokens in {text!r}")
    return note_set


def format_note_set(note_set: NoteSet, mode: str = 'numeric', policy: Optional[PolicyLike] = None) -> str:
    """Render a note-set; spelled mode reuses stored spellings unless a policy is given"""
    if len(note_set) == 0:
        raise EmptySet("cannot format an empty note-set")

    if mode == 'numeric':
        entries = [str(v) for v in note_set.values]
    elif mode == 'spelled':
        if note_set.spellings is not None and policy is None:
            spellings = note_set.spellings
        else:
            spellings = tuple(value_to_spelling(v, policy) for v in note_set.values)
        entries = [format_pitch(s) for s in spellings]
    else:
        raise ValueError(f"unknown format mode: {mode}")

    return '{' + ', '.join(entries) + '}'
