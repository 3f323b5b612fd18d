"""
Function algorithms: polynomials applied set to set in sequence
"""

import re
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

from ..core.errors import ExpressionSyntaxError
from ..core.models import FunctionAlgorithm, NoteSet, RationalPolynomial
from ..utils.logger import get_logger
from .expressions import parse_function_expr
from .polynomial import apply_to_set, format_polynomial

logger = get_logger(__name__)

# "g(n) = -n + 6" names a step; a bare expression gets a positional label
_NAMED_STEP = re.compile(r'^\s*([A-Za-z_][A-Za-z_0-9]*)\s*\(\s*[nx]\s*\)\s*=\s*(.+)$')


def run_algorithm(algorithm: FunctionAlgorithm, start: NoteSet) -> List[NoteSet]:
    """Return [start, f1(start), f2(f1(start)), ...]"""
    results = [start]
    for label, poly in algorithm.steps:
        mapped = apply_to_set(poly, results[-1])
        logger.debug(f"{label}(n) = {format_polynomial(poly)} maps {list(map(str, results[-1]))} to {list(map(str, mapped))}")
        results.append(mapped)
    return results


def build_algorithm(expressions: Sequence[str], labels: Iterable[str] = ()) -> FunctionAlgorithm:
    """Parse expressions into an algorithm; missing labels default to f1, f2, ..."""
    labels = list(labels)
    steps: List[Tuple[str, RationalPolynomial]] = []
    for index, expression in enumerate(expressions):
        label = labels[index] if index < len(labels) else f"f{index + 1}"
        steps.append((label, parse_function_expr(expression)))
    return FunctionAlgorithm(tuple(steps))


def parse_algorithm_text(text: str) -> FunctionAlgorithm:
    """One expression per line, optionally written ``name(n) = expr``; '#' starts a comment"""
    expressions: List[str] = []
    labels: List[str] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        named = _NAMED_STEP.match(line)
        if named:
            labels.append(named.group(1))
            expressions.append(named.group(2))
        else:
            labels.append(f"f{len(expressions) + 1}")
            expressions.append(line)

    try:
        return build_algorithm(expressions, labels)
    except ExpressionSyntaxError as e:
        raise ExpressionSyntaxError(f"in algorithm: {e}") from e


def load_algorithm(path: Union[str, Path]) -> FunctionAlgorithm:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_algorithm_text(f.read())
