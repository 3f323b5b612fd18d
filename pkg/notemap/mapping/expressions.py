"""
Recursive-descent parser for polynomial function expressions

    expr := sign? term (('+' | '-') term)*
    term := '-'? coef? '*'? var ('^' uint)? ('/' uint)? | coef
    coef := uint | uint '/' uint | decimal | '(' '-'? coef ')'
    var  := 'n' | 'x'

Whitespace is insignificant; implicit coefficient and exponent are 1.
"""

import re
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional

from ..core.errors import ExpressionSyntaxError, IrrationalLiteral, NonPolynomial
from ..core.models import RationalPolynomial

IRRATIONAL_NAMES = frozenset({'pi', 'e', 'tau', 'phi', 'sqrt', 'exp', 'log', 'ln', 'inf', 'nan'})
VARIABLES = frozenset({'n', 'x'})

_TOKEN = re.compile(r'\s*(?:(?P<number>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^()])|(?P<bad>\S))')


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            break
        kind = match.lastgroup
        value = match.group(kind)
        start = match.start(kind)
        if kind == 'bad':
            raise ExpressionSyntaxError(f"unexpected character {value!r} at {start}")
        if kind == 'name':
            lowered = value.lower()
            if lowered in IRRATIONAL_NAMES:
                raise IrrationalLiteral(f"irrational literal {value!r} is not allowed")
            if value not in VARIABLES:
                raise ExpressionSyntaxError(f"unknown name {value!r} at {start}")
            kind = 'var'
        yield Token(kind, value, start)
        position = match.end()
    yield Token('end', '', len(text))


class ExpressionParser:
    """Parses one expression into {power: coefficient}"""

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Token] = list(tokenize(text))
        self.index = 0
        self.variable: Optional[str] = None

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind == 'op' and self.current.text == text:
            self.index += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            self.fail(f"expected {text!r}")

    def fail(self, message: str) -> None:
        token = self.current
        found = token.text or 'end of input'
        raise ExpressionSyntaxError(f"{message} at {token.position} (found {found!r}) in {self.text!r}")

    def parse(self) -> Dict[int, Fraction]:
        terms: Dict[int, Fraction] = {}
        sign = Fraction(1)
        if self.accept('-'):
            sign = Fraction(-1)
        else:
            self.accept('+')

        while True:
            power, coefficient = self.term()
            terms[power] = terms.get(power, Fraction(0)) + sign * coefficient
            if self.accept('+'):
                sign = Fraction(1)
            elif self.accept('-'):
                sign = Fraction(-1)
            else:
                break

        if self.current.kind != 'end':
            self.fail("unexpected token")
        return terms

    def term(self):
        negative = self.accept('-')
        power, coefficient = self.unsigned_term()
        return power, -coefficient if negative else coefficient

    def unsigned_term(self):
        coefficient = None
        if self.current.kind == 'number' or (self.current.kind == 'op' and self.current.text == '('):
            coefficient = self.coef()

        starred = self.accept('*')
        if starred and coefficient is None:
            self.fail("'*' needs a coefficient before it")
        if self.current.kind == 'var':
            self.variable_token()
            power = self.exponent() if self.accept('^') else 1
            if self.accept('/'):
                divisor = self.uint()
                coefficient = (coefficient if coefficient is not None else Fraction(1)) / divisor
            return power, coefficient if coefficient is not None else Fraction(1)

        if coefficient is None or starred:
            self.fail("expected a coefficient or variable")
        return 0, coefficient

    def variable_token(self) -> None:
        name = self.advance().text
        if self.variable is None:
            self.variable = name
        elif self.variable != name:
            raise ExpressionSyntaxError(f"mixed variables {self.variable!r} and {name!r} in {self.text!r}")

    def coef(self) -> Fraction:
        if self.accept('('):
            negative = self.accept('-')
            value = self.coef()
            self.expect(')')
            return -value if negative else value

        token = self.current
        if token.kind != 'number':
            self.fail("expected a number")
        self.advance()
        if '.' in token.text:
            return Fraction(token.text)
        value = Fraction(int(token.text))
        if self.accept('/'):
            denominator = self.uint()
            value /= denominator
        return value

    def uint(self) -> int:
        token = self.current
        if token.kind != 'number' or '.' in token.text:
            self.fail("expected an unsigned integer")
        self.advance()
        value = int(token.text)
        if value == 0:
            raise ExpressionSyntaxError(f"division by zero in {self.text!r}")
        return value

    def exponent(self) -> int:
        if self.accept('-'):
            raise NonPolynomial(f"negative exponent in {self.text!r}")
        if self.accept('('):
            negative = self.accept('-')
            value = self.coef()
            self.expect(')')
            if negative or value.denominator != 1:
                raise NonPolynomial(f"exponent {'-' if negative else ''}{value} is not a natural number in {self.text!r}")
            return int(value)

        token = self.current
        if token.kind != 'number':
            self.fail("expected an exponent")
        self.advance()
        value = Fraction(token.text)
        if value.denominator != 1:
            raise NonPolynomial(f"fractional exponent {token.text} in {self.text!r}")
        return int(value)


def parse_function_expr(text: str) -> RationalPolynomial:
    """Parse text such as ``n - 5`` or ``(-1/924)n^3 + (5/1232)n^2`` into ascending coefficients"""
    if not text or not text.strip():
        raise ExpressionSyntaxError("empty expression")
    terms = ExpressionParser(text).parse()
    degree = max(terms)
    coefficients = [terms.get(p, Fraction(0)) for p in range(degree + 1)]
    return RationalPolynomial(RationalPolynomial(tuple(coefficients)).trimmed())
