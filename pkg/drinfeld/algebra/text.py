"""
DRINFELD Text Encoding

Parser for the canonical polynomial text ("T^3+2*T+1", "(w+1)*T^2+w")
used by the CLI and the series cache. Printing lives on Poly and Scalar.
"""

import re
from collections import defaultdict
from typing import Dict, List, Tuple

from ..core.exceptions import FieldError
from .field import FiniteField
from .poly import Poly
from .scalar import Scalar

_TOKEN = re.compile(r"\s*(?:(\d+)|([Tw])|(.))")

# bivariate integer polynomial: (deg_T, deg_w) -> coefficient
_Bivariate = Dict[Tuple[int, int], int]


def _tokenize(text: str) -> List[str]:
    tokens = []
    for number, var, other in _TOKEN.findall(text):
        tok = number or var or other
        if tok.strip():
            tokens.append(tok)
    return tokens


def _mul(a: _Bivariate, b: _Bivariate) -> _Bivariate:
    out: _Bivariate = defaultdict(int)
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            out[(i1 + i2, j1 + j2)] += c1 * c2
    return dict(out)


def _add(a: _Bivariate, b: _Bivariate, sign: int = 1) -> _Bivariate:
    out: _Bivariate = defaultdict(int, a)
    for key, c in b.items():
        out[key] += sign * c
    return dict(out)


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise FieldError(f"cannot parse polynomial {self.text!r}")
        self.pos += 1
        return tok

    def expr(self) -> _Bivariate:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        result = _add({}, self.term(), sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            result = _add(result, self.term(), sign)
        return result

    def term(self) -> _Bivariate:
        result = self.factor()
        while self.peek() == "*" or (self.peek() is not None and (self.peek() in ("T", "w", "(") or self.peek().isdigit())):
            if self.peek() == "*":
                self.take()
            result = _mul(result, self.factor())
        return result

    def factor(self) -> _Bivariate:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exponent = int(self.take())
            result: _Bivariate = {(0, 0): 1}
            for _ in range(exponent):
                result = _mul(result, base)
            return result
        return base

    def atom(self) -> _Bivariate:
        tok = self.take()
        if tok.isdigit():
            return {(0, 0): int(tok)}
        if tok == "T":
            return {(1, 0): 1}
        if tok == "w":
            return {(0, 1): 1}
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise FieldError(f"unexpected token {tok!r} in {self.text!r}")


def parse_poly(field: FiniteField, text: str) -> Poly:
    """Parse the canonical text encoding of an element of F_q[T]."""
    parser = _Parser(text)
    terms = parser.expr()
    if parser.peek() is not None:
        raise FieldError(f"trailing input in polynomial {text!r}")
    if field.prime_field and any(j for (_, j) in terms if terms[(_, j)] % field.p):
        raise FieldError(f"'w' is only meaningful over F_(p^r), r > 1: {text!r}")
    degree = max((i for (i, _), c in terms.items() if c % field.p), default=-1)
    coeffs = []
    for i in range(degree + 1):
        wdeg = max((j for (ti, j) in terms if ti == i), default=0)
        digits = [terms.get((i, j), 0) for j in range(wdeg + 1)]
        coeffs.append(field.element_from_digits(digits))
    return Poly(field, coeffs)


def parse_scalar(field: FiniteField, text: str) -> Scalar:
    """Parse 'num' or 'num/den' (parentheses allowed around either part)."""
    depth = 0
    for idx, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return Scalar(parse_poly(field, text[:idx]), parse_poly(field, text[idx + 1:]))
    return Scalar.integral(parse_poly(field, text))
