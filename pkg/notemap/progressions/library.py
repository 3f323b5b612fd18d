"""
Realize progression templates in a key and derive their function algorithms
"""

import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.errors import CardinalityMismatch, EmptyInput, UnknownTemplate
from ..core.models import LETTER_BASE, FunctionAlgorithm, NoteSet, ProgressionTemplate
from ..mapping import format_polynomial, interpolate_sets
from ..pitch import pitch_class
from ..utils.logger import get_logger
from .templates import ALIASES, GENERIC_TEMPLATES, PRINTED_TEMPLATES

logger = get_logger(__name__)

_KEY = re.compile(r'^([A-Ga-g])(#|b)?$')


def _build_registry() -> Dict[str, ProgressionTemplate]:
    registry = {t.name: t for t in GENERIC_TEMPLATES}
    registry.update({t.name: t for t in PRINTED_TEMPLATES})
    return registry


_REGISTRY = _build_registry()


def template_registry() -> Dict[str, ProgressionTemplate]:
    return dict(_REGISTRY)


def list_templates() -> List[ProgressionTemplate]:
    """Every template, generic first, each group in definition order"""
    return list(GENERIC_TEMPLATES) + list(PRINTED_TEMPLATES)


def key_offset(key: str) -> int:
    """Semitone offset of a key letter with optional '#' or 'b' from C"""
    match = _KEY.match(key.strip())
    if match is None:
        raise UnknownTemplate(f"unknown key {key!r}")
    letter, accidental = match.group(1).upper(), match.group(2)
    shift = {'#': 1, 'b': -1}.get(accidental, 0)
    return (LETTER_BASE[letter] + shift) % 12


def resolve_template(identifier: str) -> Tuple[ProgressionTemplate, int]:
    """Resolve ``ID`` or ``ID@K`` to a template and the offset to realize it at"""
    base, _, key = identifier.strip().partition('@')
    base = ALIASES.get(base, base)

    if key:
        offset = key_offset(key)
        letter = key.strip()[0].upper() + key.strip()[1:]
        printed = _REGISTRY.get(f"{base}@{letter}")
        if printed is not None:
            return printed, 0
        if base not in _REGISTRY or _REGISTRY[base].source != "generic":
            raise UnknownTemplate(f"unknown template {identifier!r}")
        return _REGISTRY[base], offset

    if base not in _REGISTRY:
        known = ', '.join(sorted(_REGISTRY))
        raise UnknownTemplate(f"unknown template {identifier!r} (known: {known})")
    return _REGISTRY[base], 0


def realize_progression(template: ProgressionTemplate, key_offset: int = 0) -> List[NoteSet]:
    sets = []
    for label, representatives in template.chords:
        values = tuple(pitch_class(r + key_offset) for r in representatives)
        sets.append(NoteSet(values, label=label))
    return sets


def derive_algorithm(sets: Sequence[NoteSet], pin: Optional[Iterable[int]] = None) -> FunctionAlgorithm:
    """Interpolate each consecutive pair; steps are labelled f1, f2, ..."""
    if len(sets) < 2:
        raise EmptyInput(f"deriving an algorithm needs at least two sets, got {len(sets)}")
    sizes = {len(s) for s in sets}
    if len(sizes) > 1:
        raise CardinalityMismatch(f"note-sets differ in cardinality: {[len(s) for s in sets]}")

    pinned = frozenset(pin) if pin is not None else None
    steps = []
    for k in range(len(sets) - 1):
        poly = interpolate_sets(sets[k], sets[k + 1], pinned=pinned)
        logger.debug(f"f{k + 1}(x) = {format_polynomial(poly, 'x')}")
        steps.append((f"f{k + 1}", poly))
    return FunctionAlgorithm(tuple(steps))
