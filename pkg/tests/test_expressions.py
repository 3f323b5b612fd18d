"""
Tests for the function-expression parser
"""

from fractions import Fraction

import pytest

from notemap.core.errors import ExpressionSyntaxError, IrrationalLiteral, NonPolynomial
from notemap.mapping import format_polynomial, parse_function_expr
from notemap.mapping.expressions import Token, tokenize


class TestParseFunctionExpr:
    """Test expression parsing"""

    def test_translation(self):
        assert parse_function_expr("n - 5").coefficients == (-5, 1)

    def test_negated_variable(self):
        assert parse_function_expr("-n + 6").coefficients == (6, -1)

    def test_cubic_with_parenthesised_coefficients(self):
        f = parse_function_expr("(-1/924)n^3 + (5/1232)n^2 + (1105/924)n - 35/176")
        assert f.coefficients == (
            Fraction(-35, 176), Fraction(1105, 924), Fraction(5, 1232), Fraction(-1, 924),
        )

    @pytest.mark.parametrize("text,coefficients", [
        ("2n", (0, 2)),
        ("2*n", (0, 2)),
        ("n/2", (0, Fraction(1, 2))),
        ("0.5n + 1.25", (Fraction(5, 4), Fraction(1, 2))),
        ("x^2 - x", (0, -1, 1)),
        ("3/4", (Fraction(3, 4),)),
        ("n + n", (0, 2)),
        ("  n   -   5  ", (-5, 1)),
        ("n - 4", (-4, 1)),
        ("2*n^2", (0, 0, 2)),
        ("n + -3", (-3, 1)),
        ("n - -3", (3, 1)),
        ("x^2 + -(1/2)x", (0, Fraction(-1, 2), 1)),
    ])
    def test_forms(self, text, coefficients):
        assert parse_function_expr(text).coefficients == coefficients

    def test_like_terms_cancel(self):
        f = parse_function_expr("n^2 + 1 - n^2")
        assert f.coefficients == (1,)

    def test_negative_exponent(self):
        with pytest.raises(NonPolynomial):
            parse_function_expr("n^-1")

    @pytest.mark.parametrize("text", ["n^1.5", "n^(1/2)"])
    def test_fractional_exponent(self, text):
        with pytest.raises(NonPolynomial):
            parse_function_expr(text)

    @pytest.mark.parametrize("text", ["pi*n", "n + e", "sqrt(2)n"])
    def test_irrational(self, text):
        with pytest.raises(IrrationalLiteral):
            parse_function_expr(text)

    @pytest.mark.parametrize("text", ["", "n +", "* n", "n x", "n + y", "2 * ", "(1/2", "n/0"])
    def test_syntax_errors(self, text):
        with pytest.raises(ExpressionSyntaxError):
            parse_function_expr(text)

    def test_mixed_variables(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_function_expr("n + x")

    @pytest.mark.parametrize("text", [
        "n - 5",
        "-n + 6",
        "(13/30)x^2 - (119/30)x + 11",
        "(-47/180)x^3 + (59/20)x - 77/90",
        "-x^2 + 18x - 71",
    ])
    def test_round_trip(self, text):
        f = parse_function_expr(text)
        variable = 'x' if 'x' in text else 'n'
        assert parse_function_expr(format_polynomial(f, variable)) == f


class TestTokenize:
    """Test token kinds and positions"""

    def test_variable_tokens(self):
        assert list(tokenize("  2n - x")) == [
            Token('number', '2', 2),
            Token('var', 'n', 3),
            Token('op', '-', 5),
            Token('var', 'x', 7),
            Token('end', '', 8),
        ]

    def test_unknown_name_position(self):
        with pytest.raises(ExpressionSyntaxError, match="at 4"):
            list(tokenize("n + y"))

    def test_bad_character_position(self):
        with pytest.raises(ExpressionSyntaxError, match="at 2"):
            list(tokenize("n $"))
