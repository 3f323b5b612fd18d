"""
Derive the polynomial f with f(s_i) = t_i from the Vandermonde system
"""

from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Optional

from ..core.errors import (
    CardinalityMismatch,
    EmptyInput,
    MappingError,
    NotAFunction,
    OverconstrainedInconsistent,
)
from ..core.models import InterpolationProblem, NoteSet, RationalPolynomial, RVector, SolveKind
from ..solver import build_vandermonde, gaussian_solve, mat_vec
from ..utils.logger import get_logger

logger = get_logger(__name__)


def default_pins(problem: InterpolationProblem) -> FrozenSet[int]:
    """Pin the highest indices until the system is square over the distinct nodes"""
    return frozenset(range(problem.distinct_nodes, problem.degree + 1))


def _check_function(problem: InterpolationProblem) -> None:
    seen: Dict[Fraction, Fraction] = {}
    for s, t in problem.pairs:
        if s in seen and seen[s] != t:
            raise NotAFunction(f"source value {s} is mapped to both {seen[s]} and {t}")
        seen[s] = t


def interpolate(problem: InterpolationProblem) -> RationalPolynomial:
    """Exact interpolant honouring the problem's degree and zero pins"""
    if not problem.pairs:
        raise EmptyInput("interpolation needs at least one pair")
    _check_function(problem)

    degree = problem.degree
    pinned = problem.pinned_zero if problem.pinned_zero is not None else default_pins(problem)
    if any(i < 0 or i > degree for i in pinned):
        raise MappingError(f"pinned indices {sorted(pinned)} exceed target degree {degree}")

    # Column j of the Vandermonde matrix holds power degree - j
    free_powers = [p for p in range(degree, -1, -1) if p not in pinned]
    if not free_powers:
        if any(t != 0 for _, t in problem.pairs):
            raise OverconstrainedInconsistent("every coefficient is pinned but some targets are nonzero")
        return RationalPolynomial(tuple(Fraction(0) for _ in range(degree + 1)))

    a = build_vandermonde([s for s, _ in problem.pairs], degree)
    a = a.without_columns(frozenset(degree - p for p in pinned))
    b = RVector(tuple(t for _, t in problem.pairs))

    outcome = gaussian_solve(a, b)
    if outcome.kind == SolveKind.INCONSISTENT:
        raise OverconstrainedInconsistent(
            f"no polynomial of degree {degree} with pins {sorted(pinned)} fits the pairs"
        )
    if outcome.kind == SolveKind.UNDERDETERMINED:
        logger.debug(f"free parameters at powers {[free_powers[c] for c in outcome.free_columns]} set to 0")
    if mat_vec(a, outcome.solution) != b:
        raise MappingError(f"solver returned {outcome.solution} which does not satisfy the system")

    coefficients = [Fraction(0)] * (degree + 1)
    for power, value in zip(free_powers, outcome.solution):
        coefficients[power] = value

    # Unpinned trailing zeros are dropped; pinned ones stay visible
    while len(coefficients) > 1 and coefficients[-1] == 0 and (len(coefficients) - 1) not in pinned:
        coefficients.pop()
    if len(coefficients) == 1 and coefficients[0] == 0 and 0 not in pinned:
        coefficients = []

    return RationalPolynomial(tuple(coefficients))


def interpolate_sets(source: NoteSet, target: NoteSet, degree: Optional[int] = None,
                     pinned: Optional[Iterable[int]] = None) -> RationalPolynomial:
    """Interpolate elementwise pairs of two equal-size note-sets"""
    if len(source) != len(target):
        raise CardinalityMismatch(f"cannot pair a set of {len(source)} with a set of {len(target)}")
    problem = InterpolationProblem(
        pairs=tuple(zip(source.values, target.values)),
        target_degree=degree,
        pinned_zero=frozenset(pinned) if pinned is not None else None,
    )
    return interpolate(problem)
