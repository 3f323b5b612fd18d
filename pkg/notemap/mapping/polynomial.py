"""
Polynomial arithmetic over exact rationals
"""

from fractions import Fraction
from itertools import zip_longest
from typing import List

from ..core.models import NoteSet, RationalPolynomial, as_rational


def evaluate(f: RationalPolynomial, n) -> Fraction:
    """Horner evaluation of f at n"""
    x = as_rational(n)
    result = Fraction(0)
    for c in reversed(f.coefficients):
        result = result * x + c
    return result


def apply_to_set(f: RationalPolynomial, note_set: NoteSet) -> NoteSet:
    return NoteSet(tuple(evaluate(f, v) for v in note_set.values))


def add(f: RationalPolynomial, g: RationalPolynomial) -> RationalPolynomial:
    coefficients = [a + b for a, b in zip_longest(f.coefficients, g.coefficients, fillvalue=Fraction(0))]
    return RationalPolynomial(RationalPolynomial(tuple(coefficients)).trimmed())


def multiply(f: RationalPolynomial, g: RationalPolynomial) -> RationalPolynomial:
    a, b = f.trimmed(), g.trimmed()
    if not a or not b:
        return RationalPolynomial(())
    product: List[Fraction] = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return RationalPolynomial(tuple(product))


def compose(outer: RationalPolynomial, inner: RationalPolynomial) -> RationalPolynomial:
    """outer(inner(n)) by Horner substitution"""
    result = RationalPolynomial(())
    for c in reversed(outer.trimmed()):
        result = add(multiply(result, inner), RationalPolynomial((c,)))
    return result


def _format_coefficient(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c})"


def _format_term(c: Fraction, power: int, variable: str) -> str:
    if power == 0:
        return str(c)
    monomial = variable if power == 1 else f"{variable}^{power}"
    if c == 1:
        return monomial
    if c == -1:
        return f"-{monomial}"
    return f"{_format_coefficient(c)}{monomial}"


def format_polynomial(f: RationalPolynomial, variable: str = 'n') -> str:
    """Descending-power text that parse_function_expr reads back"""
    text = ""
    for power in range(len(f.coefficients) - 1, -1, -1):
        c = f.coefficients[power]
        if c == 0:
            continue
        if not text:
            text = _format_term(c, power, variable)
        else:
            text += f" - {_format_term(-c, power, variable)}" if c < 0 else f" + {_format_term(c, power, variable)}"
    return text or '0'
