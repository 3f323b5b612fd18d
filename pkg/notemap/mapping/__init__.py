"""
Mapping engine: derive, evaluate, compose and analyse note-set polynomials
"""

from .algorithms import build_algorithm, load_algorithm, parse_algorithm_text, run_algorithm
from .analysis import DenominatorProfile, denominator_profile, integer_images, intervals, preserves_intervals
from .expressions import parse_function_expr
from .interpolation import default_pins, interpolate, interpolate_sets
from .polynomial import add, apply_to_set, compose, evaluate, format_polynomial, multiply

__all__ = [
    'interpolate', 'interpolate_sets', 'default_pins',
    'evaluate', 'apply_to_set', 'add', 'multiply', 'compose', 'format_polynomial',
    'parse_function_expr',
    'run_algorithm', 'build_algorithm', 'parse_algorithm_text', 'load_algorithm',
    'intervals', 'preserves_intervals', 'denominator_profile', 'DenominatorProfile', 'integer_images',
]
