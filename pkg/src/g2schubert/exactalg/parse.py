"""Text grammar for polynomials over the fixed variable universe.

    expr    := [sign] term { ('+' | '-') term }
    term    := factor { ['*'] factor }          (juxtaposition multiplies)
    factor  := primary ['^' INT]
    primary := RATIONAL | VARIABLE | '(' expr ')'
    RATIONAL:= INT ['/' INT]

Coefficients are integers or p/q rationals; '^' is the only power operator;
'*' is optional.  Printing (MPoly.__str__) emits canonical graded-lex form,
and parse(print(f)) == f.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly, VAR_INDEX


class PolySyntaxError(ValueError):
    """Syntax error, carrying the byte offset of the offending token."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


class UnknownVariable(PolySyntaxError):
    def __init__(self, name: str, pos: int):
        super().__init__(f"unknown variable {name!r}", pos)
        self.name = name


_PUNCT = set("+-*^()/")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise PolySyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise PolySyntaxError(f"expected {kind}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> MPoly:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return result

    def expr(self) -> MPoly:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        result = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self) -> MPoly:
        result = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.advance()
                result = result * self.factor()
            elif kind in ("int", "name", "("):
                result = result * self.factor()
            else:
                return result

    def factor(self) -> MPoly:
        base = self.primary()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            base = base ** int(tok[1])
        return base

    def primary(self) -> MPoly:
        tok = self.advance()
        kind, value, pos = tok
        if kind == "-":
            return -self.primary()
        if kind == "+":
            return self.primary()
        if kind == "int":
            num = int(value)
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.expect("int")
                den = int(den_tok[1])
                if den == 0:
                    raise PolySyntaxError("zero denominator", den_tok[2])
                return MPoly.const(Fraction(num, den))
            return MPoly.const(num)
        if kind == "name":
            if value not in VAR_INDEX:
                raise UnknownVariable(value, pos)
            return MPoly.var(value)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolySyntaxError(f"expected a polynomial, found {value!r}", pos)


def parse_poly(text: str) -> MPoly:
    """Parse a polynomial in the CLI grammar."""
    return _Parser(text).parse()
