"""
Progression library: cadence templates, realization and derived functions
"""

from .library import (
    derive_algorithm,
    key_offset,
    list_templates,
    realize_progression,
    resolve_template,
    template_registry,
)
from .templates import BORROWED_MINOR_CADENCE, MAJOR_CADENCE, NEAPOLITAN_CADENCE


def get_template_registry():
    """Return registry of available templates by name"""
    return template_registry()


__all__ = [
    'MAJOR_CADENCE', 'BORROWED_MINOR_CADENCE', 'NEAPOLITAN_CADENCE',
    'list_templates', 'resolve_template', 'realize_progression', 'derive_algorithm',
    'key_offset', 'get_template_registry',
]
