"""
notemap core components
"""

from .errors import NotemapError
from .models import (
    FunctionAlgorithm,
    HarnessReport,
    InterpolationProblem,
    NoteSet,
    PitchSpelling,
    ProgressionTemplate,
    RationalPolynomial,
    Score,
    VerificationCase,
)
from .verifier import BaseVerifier

__all__ = [
    'NotemapError', 'NoteSet', 'PitchSpelling', 'RationalPolynomial', 'InterpolationProblem',
    'FunctionAlgorithm', 'ProgressionTemplate', 'VerificationCase', 'HarnessReport', 'Score',
    'BaseVerifier',
]
