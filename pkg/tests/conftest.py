"""
Shared fixtures for the notemap test suite
"""

from pathlib import Path

import pytest
from click.testing import CliRunner

from notemap.core.harness import VerificationHarness
from notemap.mapping import build_algorithm, parse_function_expr
from notemap.pitch import parse_note_set

GOLDEN_DIR = Path(__file__).parent / 'golden'

K_FUNCTION = "(-1/924)n^3 + (5/1232)n^2 + (1105/924)n - 35/176"


def read_golden(name: str) -> bytes:
    text = (GOLDEN_DIR / name).read_text(encoding='utf-8')
    return bytes.fromhex(" ".join(text.split()))


@pytest.fixture
def golden():
    return read_golden


@pytest.fixture
def first_sample_algorithm():
    """n - 4, 2n, n + 1 and the cubic k from the first composed sample"""
    return build_algorithm(["n - 4", "2n", "n + 1", K_FUNCTION], ["f", "g", "h", "k"])


@pytest.fixture
def transposition_algorithm():
    return build_algorithm(["n - 5", "-n + 6", "n/2"], ["f", "g", "h"])


@pytest.fixture
def k_function():
    return parse_function_expr(K_FUNCTION)


@pytest.fixture
def note_set():
    return parse_note_set


@pytest.fixture(scope="module")
def harness():
    return VerificationHarness()


@pytest.fixture
def runner():
    return CliRunner()
