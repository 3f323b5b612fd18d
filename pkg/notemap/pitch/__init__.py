"""
Pitch codec: spellings, exact values and note-set text
"""

from .codec import (
    format_pitch,
    parse_pitch,
    pitch_class,
    spelling_to_value,
    value_to_spelling,
)
from .notesets import format_note_set, parse_note_set, parse_spelled_set

__all__ = [
    'format_pitch', 'parse_pitch', 'pitch_class', 'spelling_to_value', 'value_to_spelling',
    'format_note_set', 'parse_note_set', 'parse_spelled_set',
]
