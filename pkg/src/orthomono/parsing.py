"""Recursive-descent parser for polynomial product expressions.

Grammar (whitespace is ignored):

    full   := '-'? expr (('+' | '-') expr)*
    expr   := term (('*' | '/') term)*
    term   := atom ('^' posint)?
    atom   := '(' sum ')' | 'Phi(' posint ')' | signed
    sum    := '-'? signed (('+' | '-') signed)*
    signed := posint? VAR ('^' posint)? | posint

'/' must divide exactly; 'Phi(d)' is the d-th cyclotomic polynomial.  The
variable name defaults to 'x' (padding factors use 'y').  Products bind
tighter than top-level sums, so "x^5-1" and "(x+1)*(x^2+1)^2" both parse
as written.  Errors carry the offset into the input where parsing failed.
"""
from __future__ import annotations

from .polynomials import IntPoly, ONE, cyclotomic, exact_div


class PolyParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.pos = 0

    def error(self, message: str) -> PolyParseError:
        return PolyParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'")
        self.pos += 1

    def posint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def full(self) -> IntPoly:
        negate = self.peek() == "-"
        if negate:
            self.pos += 1
        value = self.expr()
        if negate:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.expr()
            value = value + rhs if op == "+" else value - rhs
        return value

    def expr(self) -> IntPoly:
        value = self.term()
        while self.peek() in ("*", "/"):
            op = self.peek()
            op_pos = self.pos
            self.pos += 1
            rhs = self.term()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = exact_div(value, rhs)
                except (ValueError, ZeroDivisionError) as e:
                    raise PolyParseError(str(e), op_pos) from None
        return value

    def term(self) -> IntPoly:
        value = self.atom()
        if self.peek() == "^":
            self.pos += 1
            value = value ** self.posint()
        return value

    def atom(self) -> IntPoly:
        self.skip_ws()
        if self.text.startswith("Phi", self.pos):
            self.pos += 3
            self.eat("(")
            d = self.posint()
            self.eat(")")
            if d < 1:
                raise self.error("Phi index must be >= 1")
            return cyclotomic(d)
        if self.peek() == "(":
            self.pos += 1
            value = self.sum()
            self.eat(")")
            return value
        return self.signed()

    def sum(self) -> IntPoly:
        negate = False
        if self.peek() == "-":
            self.pos += 1
            negate = True
        value = self.signed()
        if negate:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.signed()
            value = value + rhs if op == "+" else value - rhs
        return value

    def signed(self) -> IntPoly:
        self.skip_ws()
        coeff = 1
        saw_coeff = False
        if self.pos < len(self.text) and self.text[self.pos].isdigit():
            coeff = self.posint()
            saw_coeff = True
        self.skip_ws()
        if self.text.startswith(self.var, self.pos):
            self.pos += len(self.var)
            power = 1
            if self.peek() == "^":
                self.pos += 1
                power = self.posint()
            return IntPoly.monomial(power, coeff)
        if saw_coeff:
            return IntPoly.constant(coeff)
        raise self.error(f"expected a coefficient or '{self.var}'")


def parse_poly(text: str, var: str = "x") -> IntPoly:
    """Parse an expression like "(x+1)*(x^2+1)^2" or "Phi(12)".

    >>> parse_poly("x^5-1").coeffs
    (-1, 0, 0, 0, 0, 1)
    >>> parse_poly("(x+1)*(x^5-1)/(x-1)").coeffs
    (1, 2, 2, 2, 2, 1)
    """
    p = _Parser(text, var)
    value = p.full()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("unexpected trailing input")
    return value
