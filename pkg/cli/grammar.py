#!/usr/bin/env python3
"""
Polynomial expression grammar.

    expr := expr ('+' | '-' | '*' | '/') expr
          | ('-' | '+') expr
          | expr '^' NUMBER
          | '(' expr ')'
          | NUMBER | 'x' | 'y' | 's' | 't' | 'i'

'^' binds tighter than unary minus, which binds tighter than '*' and '/'.
Multiplication must be written out; division is only by nonzero constants.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Tuple

from rply import LexerGenerator, LexingError, ParserGenerator
from rply.token import Token

from algebra import I, VARIABLES, Polynomial
from errors import PolynomialSyntaxError, UnknownVariableError

TOKENS = ["NUMBER", "NAME", "POW", "MUL", "DIV", "PLUS", "MINUS", "LPAREN", "RPAREN"]


@lru_cache(maxsize=1)
def _lexer():
    lg = LexerGenerator()
    lg.add("NUMBER", r"\d+")
    lg.add("NAME", r"[A-Za-z_][A-Za-z0-9_]*")
    lg.add("POW", r"\^")
    lg.add("MUL", r"\*")
    lg.add("DIV", r"/")
    lg.add("PLUS", r"\+")
    lg.add("MINUS", r"-")
    lg.add("LPAREN", r"\(")
    lg.add("RPAREN", r"\)")
    lg.ignore(r"\s+")
    return lg.build()


class _Source:
    """End-of-input position for errors raised on the '$end' token."""

    def __init__(self, text: str):
        lines = text.split("\n")
        self.end = (len(lines), len(lines[-1]) + 1)


@lru_cache(maxsize=1)
def _parser():
    pg = ParserGenerator(
        TOKENS,
        precedence=[
            ("left", ["PLUS", "MINUS"]),
            ("left", ["MUL", "DIV"]),
            ("right", ["UMINUS"]),
            ("right", ["POW"]),
        ],
    )

    @pg.production("expr : expr PLUS expr")
    @pg.production("expr : expr MINUS expr")
    @pg.production("expr : expr MUL expr")
    def binary(state, p):
        left, op, right = p
        if op.gettokentype() == "PLUS":
            return left + right
        if op.gettokentype() == "MINUS":
            return left - right
        return left * right

    @pg.production("expr : expr DIV expr")
    def divide(state, p):
        left, op, right = p
        position = op.getsourcepos()
        if not right.is_constant():
            raise PolynomialSyntaxError("division by a non-constant expression", position.lineno, position.colno)
        if right.is_zero():
            raise PolynomialSyntaxError("division by zero", position.lineno, position.colno)
        return left / right.constant_value()

    @pg.production("expr : MINUS expr", precedence="UMINUS")
    @pg.production("expr : PLUS expr", precedence="UMINUS")
    def unary(state, p):
        return -p[1] if p[0].gettokentype() == "MINUS" else p[1]

    @pg.production("expr : expr POW NUMBER")
    def power(state, p):
        return p[0] ** int(p[2].getstr())

    @pg.production("expr : LPAREN expr RPAREN")
    def group(state, p):
        return p[1]

    @pg.production("expr : NUMBER")
    def number(state, p):
        return Polynomial.constant(int(p[0].getstr()))

    @pg.production("expr : NAME")
    def name(state, p):
        token = p[0]
        text = token.getstr()
        if text == "i":
            return Polynomial.constant(I)
        if text in VARIABLES:
            return Polynomial.var(text)
        position = token.getsourcepos()
        raise UnknownVariableError(text, position.lineno, position.colno)

    @pg.error
    def error(state, token: Token):
        position = token.getsourcepos()
        if position is None:
            raise PolynomialSyntaxError("unexpected end of input", *state.end)
        raise PolynomialSyntaxError(f"unexpected '{token.getstr()}'", position.lineno, position.colno)

    return pg.build()


def parse_polynomial(text: str, variables: Optional[Iterable[str]] = None) -> Polynomial:
    """
    Parse grammar text into a Polynomial.

    Args:
        text: the expression
        variables: optional declared universe, e.g. ("x", "y") for G

    Raises:
        PolynomialSyntaxError: with line and column of the offending token
        UnknownVariableError: for a name other than x, y, s, t, i
        VariableScopeError: if a variable outside `variables` is used
    """
    if not text.strip():
        raise PolynomialSyntaxError("empty expression", 1, 1)
    state = _Source(text)
    try:
        result = _parser().parse(_lexer().lex(text), state=state)
    except LexingError as e:
        index = e.getsourcepos().idx
        line = text.count("\n", 0, index) + 1
        column = index - text.rfind("\n", 0, index)
        raise PolynomialSyntaxError(f"unexpected character '{text[index]}'", line, column) from None
    if variables is not None:
        result.check_scope("polynomial", tuple(variables))
        return result.with_variables(variables)
    return result


@dataclass(frozen=True)
class PolynomialSource:
    """Raw text, the parsed polynomial and its declared variables."""

    text: str
    polynomial: Polynomial
    variables: Tuple[str, ...]

    @classmethod
    def parse(cls, text: str, variables: Optional[Iterable[str]] = None) -> "PolynomialSource":
        polynomial = parse_polynomial(text, variables)
        names = tuple(v for v in VARIABLES if v in polynomial.variables)
        return cls(text, polynomial, names)

    @property
    def canonical(self) -> str:
        return str(self.polynomial)
