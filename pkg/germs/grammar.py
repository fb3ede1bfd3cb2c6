"""
Text grammar for bivariate polynomials - used by the CLI for every ``--poly`` / ``--tail`` option, and for every
polynomial printed in a report.

Grammar (whitespace insignificant, an optional sign may precede the first term)::

    poly    := term (('+'|'-') term)* ;
    term    := coef ('*' factor)* | factor ('*' factor)* ;
    coef    := integer | '(' integer '/' positive-integer ')' ;
    factor  := ('x'|'y') ('^' positive-integer)? ;

:func:`format_poly` emits the canonical form, which :func:`parse` reads back to an equal :class:`.Poly`::

    >>> format_poly(parse('5*x*y^4 + x^5 - 10*x^3*y^2'))
    'x^5 - 10*x^3*y^2 + 5*x*y^4'
    >>> parse('x^^2')
    Traceback (most recent call last):
      ...
    germs.exceptions.PolynomialSyntaxError: Expected a positive integer exponent (at offset 2)
"""
from fractions import Fraction
from typing import Tuple

from germs.exceptions import PolynomialSyntaxError
from germs.poly import Monomial, Poly


class _Parser:
    """Single-use recursive descent parser. Positions are tracked as character indexes, reported as byte offsets."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int = None):
        pos = self.pos if pos is None else pos
        raise PolynomialSyntaxError(message, len(self.text[:pos].encode('utf-8')))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def digits(self, message: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in '0123456789':
            self.pos += 1
        if start == self.pos:
            self.error(message, start)
        return int(self.text[start:self.pos])

    def poly(self) -> Poly:
        terms = {}
        sign = -1 if self.take('-') else 1
        if sign == 1:
            self.take('+')
        while True:
            m, c = self.term()
            terms[m] = terms.get(m, 0) + sign * c
            ch = self.peek()
            if ch == '':
                break
            if ch not in '+-':
                self.error(f"Unexpected character {ch!r}, expected '+', '-' or end of input")
            self.pos += 1
            sign = 1 if ch == '+' else -1
        return Poly(terms)

    def term(self) -> Tuple[Monomial, Fraction]:
        ch = self.peek()
        coef, ex, ey = Fraction(1), 0, 0
        if ch == '':
            self.error('Unexpected end of input, expected a term')
        if ch.isdigit() or ch == '(':
            coef = self.coef()
            if not self.take('*'):
                return Monomial(0, 0), coef
        while True:
            var, power = self.factor()
            if var == 'x':
                ex += power
            else:
                ey += power
            if not self.take('*'):
                return Monomial(ex, ey), coef

    def coef(self) -> Fraction:
        if not self.take('('):
            return Fraction(self.digits('Expected an integer coefficient'))
        neg = self.take('-')
        num = self.digits('Expected the numerator of a rational coefficient')
        if not self.take('/'):
            self.error("Expected '/' in rational coefficient")
        den_pos = self.pos
        den = self.digits('Expected the denominator of a rational coefficient')
        if den == 0:
            self.error('Rational coefficient has a zero denominator', den_pos)
        if not self.take(')'):
            self.error("Expected ')' closing the rational coefficient")
        return Fraction(-num if neg else num, den)

    def factor(self) -> Tuple[str, int]:
        ch = self.peek()
        if ch not in ('x', 'y') or ch == '':
            self.error(f"Expected 'x' or 'y', found {ch!r}" if ch else "Expected 'x' or 'y', found end of input")
        self.pos += 1
        if not self.take('^'):
            return ch, 1
        self.skip_ws()
        exp_pos = self.pos
        power = self.digits('Expected a positive integer exponent')
        if power == 0:
            self.error('Exponent must be a positive integer', exp_pos)
        return ch, power


def parse(text: str) -> Poly:
    """
    Parse polynomial ``text`` into a :class:`.Poly`.

    :raises PolynomialSyntaxError: when ``text`` does not conform to the grammar, with the byte offset of the
                                   first offending character.
    """
    return _Parser(text).poly()


def format_monomial(m: Monomial) -> str:
    """``x^3*y``, ``x``, ``y^2``; the empty monomial prints as ``1``"""
    parts = []
    for var, e in (('x', m.ex), ('y', m.ey)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f'{var}^{e}')
    return '*'.join(parts) if parts else '1'


def format_coefficient(c: Fraction) -> str:
    """Absolute value of ``c`` in grammar form: ``3`` or ``(1/3)``"""
    c = abs(Fraction(c))
    return str(c.numerator) if c.denominator == 1 else f'({c.numerator}/{c.denominator})'


def format_poly(p: Poly) -> str:
    """Canonical text for ``p``: terms in canonical monomial order, signs inline, coefficient 1 suppressed"""
    if p.is_zero:
        return '0'
    out = ''
    for i, (m, c) in enumerate(p.terms):
        if i == 0:
            out += '-' if c < 0 else ''
        else:
            out += ' - ' if c < 0 else ' + '
        if m.degree == 0:
            out += format_coefficient(c)
        elif abs(c) == 1:
            out += format_monomial(m)
        else:
            out += f'{format_coefficient(c)}*{format_monomial(m)}'
    return out
