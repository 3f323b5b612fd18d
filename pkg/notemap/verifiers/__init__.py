"""
Claim verifiers, one per claim kind
"""

from .polynomial_verifier import PolynomialVerifier
from .chain_verifier import ChainVerifier
from .spelling_verifier import SpellingVerifier
from .derivation_verifier import DerivationVerifier
from .denominators_verifier import DenominatorsVerifier


def get_verifier_registry():
    """Return registry of available verifiers"""
    return {
        'polynomial': PolynomialVerifier,
        'chain': ChainVerifier,
        'spelling': SpellingVerifier,
        'derivation': DerivationVerifier,
        'denominators': DenominatorsVerifier,
    }


__all__ = [
    'PolynomialVerifier', 'ChainVerifier', 'SpellingVerifier', 'DerivationVerifier',
    'DenominatorsVerifier', 'get_verifier_registry',
]
