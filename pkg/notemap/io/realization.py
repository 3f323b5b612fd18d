"""
Octave-ordering rule for realized note-sets

A set element may sound in another octave only after it has sounded in its
own octave.
"""

from typing import Dict, Sequence, Tuple

from ..core.errors import BadReference
from ..core.models import NoteSet, RealizationEvent, RealizationVerdict


def _check_reference(event: RealizationEvent, sets: Sequence[NoteSet]) -> None:
    if not 0 <= event.set_index < len(sets):
        raise BadReference(f"event refers to set {event.set_index}, but there are {len(sets)} sets")
    size = len(sets[event.set_index])
    if not 0 <= event.element_index < size:
        raise BadReference(
            f"event refers to element {event.element_index} of set {event.set_index}, which has {size}"
        )


def validate_realization(events: Sequence[RealizationEvent], sets: Sequence[NoteSet]) -> RealizationVerdict:
    for event in events:
        _check_reference(event, sets)

    first_unshifted: Dict[Tuple[int, int], int] = {}
    for event in events:
        if event.octave_shift == 0:
            key = (event.set_index, event.element_index)
            first_unshifted[key] = min(event.onset, first_unshifted.get(key, event.onset))

    violations = [
        event for event in events
        if event.octave_shift != 0
        and not first_unshifted.get((event.set_index, event.element_index), event.onset) < event.onset
    ]
    violations.sort(key=lambda e: (e.onset, e.set_index, e.element_index, e.octave_shift))
    return RealizationVerdict(valid=not violations, violations=tuple(violations))
