"""
Tests for interpolation, evaluation and function algorithms
"""

from fractions import Fraction

import pytest

from notemap.core.errors import (
    CardinalityMismatch,
    DuplicateStepLabel,
    EmptyInput,
    MappingError,
    NotAFunction,
    OverconstrainedInconsistent,
    TooFew,
)
from notemap.core.models import (
    FunctionAlgorithm,
    InterpolationProblem,
    NoteSet,
    RationalPolynomial,
    RVector,
    SolveKind,
    SolveOutcome,
)
from notemap.mapping import (
    apply_to_set,
    compose,
    denominator_profile,
    evaluate,
    format_polynomial,
    integer_images,
    interpolate,
    interpolate_sets,
    intervals,
    parse_algorithm_text,
    parse_function_expr,
    preserves_intervals,
    run_algorithm,
)


def poly(*coefficients):
    return RationalPolynomial(tuple(Fraction(c) for c in coefficients))


def pairs(source, target):
    return InterpolationProblem(tuple(zip(source, target)))


class TestInterpolate:
    """Test exact interpolation"""

    def test_second_cubic(self):
        f = interpolate(pairs([-7, -2, 2, 8], [-8, -3, 1, 9]))
        assert f.coefficients == (Fraction(-239, 225), Fraction(223, 225), Fraction(7, 450), Fraction(1, 450))

    def test_first_cubic(self):
        f = interpolate(pairs([-7, -2, 2, 8], [-5, -2, 3, 7]))
        assert f.coefficient(0) == Fraction(307, 675)
        assert f.coefficient(3) == Fraction(-47, 5400)

    def test_pinned_cubic_keeps_declared_degree(self):
        problem = InterpolationProblem(tuple(zip([0, 4, 7, 0], [0, 5, 8, 0])), pinned_zero={3})
        f = interpolate(problem)
        assert f.coefficients == (0, Fraction(39, 28), Fraction(-1, 28), 0)
        assert f.declared_degree == 3
        assert f.degree() == 2

    def test_default_pins_minimal_degree(self):
        f = interpolate(pairs([11, 2, 7, 11], [0, 4, 7, 0]))
        assert f == poly(Fraction(-77, 90), Fraction(59, 20), Fraction(-47, 180))
        assert f.degree() == 2

    def test_not_a_function(self):
        with pytest.raises(NotAFunction):
            interpolate(pairs([0, 0], [1, 2]))

    def test_empty(self):
        with pytest.raises(EmptyInput):
            interpolate(InterpolationProblem(()))

    def test_overconstrained(self):
        problem = InterpolationProblem(tuple(zip([0, 1, 2], [0, 1, 4])), target_degree=1)
        with pytest.raises(OverconstrainedInconsistent):
            interpolate(problem)

    def test_lower_degree_target_recovered(self):
        f = interpolate(pairs([1, 2, 3, 4, 5], [2, 3, 4, 5, 6]))
        assert f.coefficients == (1, 1)

    def test_identity_for_equal_sets(self):
        assert interpolate(pairs([0, 4, 7, 0], [0, 4, 7, 0])) == poly(0, 1)

    def test_sets_wrapper(self):
        f = interpolate_sets(NoteSet((-10, -3, 0, 6)), NoteSet((-6, 1, 4, 10)))
        assert f == poly(4, 1)
        with pytest.raises(CardinalityMismatch):
            interpolate_sets(NoteSet((0, 1)), NoteSet((0,)))

    def test_unsatisfied_solution_rejected(self, monkeypatch):
        from notemap.mapping import interpolation

        def wrong_solve(a, b):
            return SolveOutcome(SolveKind.UNIQUE, a.cols, RVector(tuple(Fraction(0) for _ in range(a.cols))))

        monkeypatch.setattr(interpolation, 'gaussian_solve', wrong_solve)
        with pytest.raises(MappingError):
            interpolate(pairs([0, 1], [1, 2]))


class TestEvaluate:
    """Test evaluation and application"""

    def test_translation(self):
        assert evaluate(poly(4, 1), -10) == -6

    def test_zero_polynomial(self):
        assert evaluate(RationalPolynomial(()), Fraction(7, 3)) == 0

    def test_printed_quadratic(self):
        f2 = parse_function_expr("(13/30)x^2 - (119/30)x + 11")
        assert evaluate(f2, 5) == 2

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            evaluate(poly(1), 0.5)

    def test_apply_to_set(self):
        assert apply_to_set(poly(-5, 1), NoteSet((1, 7, 9, 16, 18))).values == (-4, 2, 4, 11, 13)
        assert apply_to_set(poly(0, 2), NoteSet((14, -7, -1, -16, 4, 13))).values == (28, -14, -2, -32, 8, 26)

    def test_identity(self):
        note_set = NoteSet((Fraction(1, 2), 3, -4))
        assert apply_to_set(poly(0, 1), note_set).values == note_set.values


class TestRunAlgorithm:
    """Test function algorithms"""

    def test_three_steps(self, transposition_algorithm):
        sets = run_algorithm(transposition_algorithm, NoteSet((1, 7, 9, 16, 18)))
        assert len(sets) == 4
        assert sets[-1].values == (5, 2, 1, Fraction(-5, 2), Fraction(-7, 2))

    def test_empty_algorithm(self):
        start = NoteSet((0, 4, 7))
        assert run_algorithm(FunctionAlgorithm(), start) == [start]

    def test_first_sample_chain(self, first_sample_algorithm):
        sets = run_algorithm(first_sample_algorithm, NoteSet((0, 4, 7, 11)))
        assert [s.values for s in sets[1:]] == [
            (-4, 0, 3, 7),
            (-8, 0, 6, 14),
            (-7, 1, 7, 15),
            (-8, 1, 8, 15),
        ]

    def test_composition(self, transposition_algorithm):
        start = NoteSet((1, 7, 9, 16, 18))
        total = poly(0, 1)
        for _, step in transposition_algorithm.steps:
            total = compose(step, total)
        assert apply_to_set(total, start) == run_algorithm(transposition_algorithm, start)[-1]

    def test_duplicate_labels(self):
        with pytest.raises(DuplicateStepLabel):
            FunctionAlgorithm((("f", poly(1)), ("f", poly(2))))

    def test_algorithm_text(self):
        algorithm = parse_algorithm_text(
            "# perfect fifth down, inversion, halving\n"
            "f(n) = n - 5\n"
            "\n"
            "g(n) = -n + 6  # inversion about 3\n"
            "n/2\n"
        )
        assert algorithm.labels == ["f", "g", "f3"]
        assert algorithm.steps[2][1] == poly(0, Fraction(1, 2))


class TestAnalysis:
    """Test intervals and denominators"""

    def test_intervals(self):
        assert intervals(NoteSet((0, 4, 7))) == [4, 7, 3]
        assert intervals(NoteSet((0, 0))) == [0]

    def test_intervals_too_few(self):
        with pytest.raises(TooFew):
            intervals(NoteSet((0,)))

    def test_translation_preserves_intervals(self):
        assert intervals(NoteSet((-10, -3, 0, 6))) == intervals(NoteSet((-6, 1, 4, 10)))
        assert preserves_intervals(poly(4, 1), NoteSet((-10, -3, 0, 6)))
        assert not preserves_intervals(poly(0, 2), NoteSet((-10, -3, 0, 6)))

    def test_denominators_first_cubic(self):
        f = interpolate(pairs([-7, -2, 2, 8], [-5, -2, 3, 7]))
        profile = denominator_profile(f)
        assert profile.denominators == (5400, 5400, 2700, 675)
        assert (profile.gcd, profile.lcm, profile.distinct_count) == (675, 5400, 3)

    def test_denominators_exclude_integers(self):
        profile = denominator_profile(parse_function_expr("(13/30)x^2 - (119/30)x + 11"))
        assert profile.denominators == (30, 30)
        assert profile.gcd == 30

    def test_integer_polynomial(self):
        profile = denominator_profile(poly(4, 1))
        assert (profile.denominators, profile.gcd, profile.lcm, profile.distinct_count) == ((), 1, 1, 0)

    def test_integer_images(self, k_function):
        images = integer_images(k_function, exclude=[-7, 1, 7, 15], window=range(-20, 21))
        assert all(value.denominator == 1 for _, value in images)
        assert all(n not in (-7, 1, 7, 15) for n, _ in images)


class TestFormat:
    """Test polynomial text"""

    def test_descending(self):
        f = interpolate(pairs([-7, -2, 2, 8], [-5, -2, 3, 7]))
        assert format_polynomial(f) == "(-47/5400)n^3 + (61/5400)n^2 + (3469/2700)n + 307/675"

    def test_unit_and_signs(self):
        assert format_polynomial(poly(6, -1)) == "-n + 6"
        assert format_polynomial(poly(0, 0, 1), 'x') == "x^2"

    def test_zero(self):
        assert format_polynomial(RationalPolynomial(())) == "0"

    def test_reparses(self, k_function):
        assert parse_function_expr(format_polynomial(k_function)) == k_function
