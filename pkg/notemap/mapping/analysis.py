"""
Diagnostic properties of mappings: intervals and coefficient denominators
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Tuple

from ..core.errors import TooFew
from ..core.models import NoteSet, RationalPolynomial
from .polynomial import apply_to_set, evaluate


@dataclass(frozen=True)
class DenominatorProfile:
    denominators: Tuple[int, ...]
    gcd: int
    lcm: int
    distinct_count: int


def intervals(note_set: NoteSet) -> List[Fraction]:
    """All s_j - s_i for i < j in lexicographic (i, j) order"""
    values = note_set.values
    if len(values) < 2:
        raise TooFew(f"intervals need at least two notes, got {len(values)}")
    return [values[j] - values[i] for i in range(len(values)) for j in range(i + 1, len(values))]


def preserves_intervals(f: RationalPolynomial, note_set: NoteSet) -> bool:
    return intervals(apply_to_set(f, note_set)) == intervals(note_set)


def denominator_profile(f: RationalPolynomial) -> DenominatorProfile:
    """Denominators > 1 of the coefficients, highest power first, with their gcd and lcm"""
    denominators = tuple(c.denominator for c in reversed(f.trimmed()) if c.denominator > 1)
    if not denominators:
        return DenominatorProfile((), 1, 1, 0)
    gcd = reduce(math.gcd, denominators)
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), denominators)
    return DenominatorProfile(denominators, gcd, lcm, len(set(denominators)))


def integer_images(f: RationalPolynomial, exclude: Iterable[Fraction], window: range) -> List[Tuple[int, Fraction]]:
    """Integer inputs in window, outside exclude, that f sends to integers"""
    excluded = {Fraction(v) for v in exclude}
    images = []
    for n in window:
        if Fraction(n) in excluded:
            continue
        value = evaluate(f, n)
        if value.denominator == 1:
            images.append((n, value))
    return images
