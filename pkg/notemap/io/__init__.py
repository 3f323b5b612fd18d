"""
Score serialization, MIDI export and realization checks
"""

from .midi import export_midi, render_sets, split_value
from .realization import validate_realization
from .score import build_score, check_score, export_json, import_json, report_to_dict

__all__ = [
    'export_json', 'import_json', 'build_score', 'check_score', 'report_to_dict',
    'export_midi', 'render_sets', 'split_value',
    'validate_realization',
]
