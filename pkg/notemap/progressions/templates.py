"""
Chord-progression templates as mod-12 representative note-sets

Chord entries repeat the bass at the top (the octave extension above the
fifth), so every chord of a four-voice template has four representatives.
"""

from typing import Dict, List

from ..core.models import ProgressionTemplate

MAJOR_CADENCE = ProgressionTemplate(
    name="I-IV64-V6-I",
    chords=(
        ("I", (0, 4, 7, 0)),
        ("IV64", (0, 5, 9, 0)),
        ("V6", (11, 2, 7, 11)),
        ("I", (0, 4, 7, 0)),
    ),
    description="Tonic, second-inversion subdominant, first-inversion dominant, tonic",
)

BORROWED_MINOR_CADENCE = ProgressionTemplate(
    name="I-iv64-V6-I",
    chords=(
        ("I", (0, 4, 7, 0)),
        ("iv64", (0, 5, 8, 0)),
        ("V6", (11, 2, 7, 11)),
        ("I", (0, 4, 7, 0)),
    ),
    description="As I-IV64-V6-I with the minor subdominant borrowed from the parallel minor",
)

NEAPOLITAN_CADENCE = ProgressionTemplate(
    name="NEAP",
    chords=(
        ("bII6", (5, 8, 1, 5)),
        ("V64", (2, 7, 11, 2)),
        ("I", (0, 4, 7, 0)),
    ),
    description="First-inversion Neapolitan resolving through the dominant to the tonic",
)

# Printed sets are kept verbatim per key; C major uses the minor subdominant
# while the D major functions only fit the major one.
PRINTED_TEMPLATES: List[ProgressionTemplate] = [
    ProgressionTemplate(
        name="I-IV64-V6-I@C",
        chords=(
            ("I", (0, 4, 7, 0)),
            ("IV64", (0, 5, 8, 0)),
            ("V6", (11, 2, 7, 11)),
            ("I", (0, 4, 7, 0)),
        ),
        source="printed",
        description="C major cadence as printed, subdominant spelled with A-flat",
    ),
    ProgressionTemplate(
        name="I-IV64-V6-I@D",
        chords=(
            ("I", (2, 6, 9, 2)),
            ("IV64", (2, 7, 11, 2)),
            ("V6", (1, 4, 9, 1)),
            ("I", (2, 6, 9, 2)),
        ),
        source="printed",
        description="D major cadence, sets recovered by evaluating the printed functions",
    ),
    ProgressionTemplate(
        name="NEAP@C",
        chords=(
            ("bII6", (5, 8, 1, 5)),
            ("V64", (2, 7, 11, 2)),
            ("I", (0, 4, 7, 0)),
        ),
        source="printed",
        description="C major Neapolitan cadence as printed",
    ),
    ProgressionTemplate(
        name="NEAP@D",
        chords=(
            ("bII6", (7, 10, 3, 7)),
            ("V64", (4, 9, 1, 4)),
            ("I", (2, 6, 9, 2)),
        ),
        source="printed",
        description="D major Neapolitan cadence; sets are the transposition of C, not printed",
    ),
]

GENERIC_TEMPLATES: List[ProgressionTemplate] = [MAJOR_CADENCE, BORROWED_MINOR_CADENCE, NEAPOLITAN_CADENCE]

ALIASES: Dict[str, str] = {
    "Neapolitan": "NEAP",
}
