"""Text form of elements.

Grammar::

    expr   := ['-'] term (('+'|'-') term)*
    term   := [scalar '*'] factor ('*' factor)*
    factor := gen | '(' expr ')'
    gen    := 'd[' n ',' j ']' | 'x[' n ',' i ']' | 'r[' n ',' j ']' | '1[' n ']'
    scalar := integer ['/' positive-integer]

``*`` is composition, read right to left.  The bare string ``0`` parses to
the zero element.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .core import Element, Generator, Kind, Word, _checked

_TOKEN = re.compile(
    r"\s*(?:(?P<gen>[dxr1])\[\s*(?P<a>\d+)\s*(?:,\s*(?P<b>\d+)\s*)?\]"
    r"|(?P<num>\d+(?:\s*/\s*\d+)?)"
    r"|(?P<op>[-+*()]))"
)
_KINDS = {"d": Kind.DEL, "x": Kind.CHI, "r": Kind.RHO}


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group("gen"):
            letter, a, b = m.group("gen"), int(m.group("a")), m.group("b")
            try:
                if letter == "1":
                    if b is not None:
                        raise ValueError("identity takes a single level")
                    out.append(("id", a, start))
                else:
                    if b is None:
                        raise ValueError(f"{letter}[...] needs two indices")
                    out.append(("gen", _checked(_KINDS[letter], a, int(b)), start))
            except ValueError as exc:
                raise ParseError(str(exc), start) from None
        elif m.group("num"):
            num = m.group("num").replace(" ", "")
            if "/" in num and int(num.split("/")[1]) == 0:
                raise ParseError("zero denominator", start)
            out.append(("num", Fraction(num), start))
        else:
            out.append((m.group("op"), None, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Element:
        sign = 1
        if self.peek()[0] == "-":
            self.i += 1
            sign = -1
        acc = sign * self.term()
        while self.peek()[0] in "+-":
            op = self.take(self.peek()[0])[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Element:
        coef = Fraction(1)
        if self.peek()[0] == "num":
            coef = self.take("num")[1]
            self.take("*")
        acc = self.factor()
        while self.peek()[0] == "*":
            self.i += 1
            acc = acc * self.factor()
        return coef * acc

    def factor(self) -> Element:
        kind, val, pos = self.peek()
        if kind == "gen":
            self.i += 1
            return Element.gen(val)
        if kind == "id":
            self.i += 1
            return Element.identity(val)
        if kind == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        raise ParseError(f"expected a generator or '(', found {kind!r}", pos)


def parse(text: str) -> Element:
    if text.strip() == "0":
        return Element.zero()
    p = _Parser(text)
    e = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[0]!r}", tok[2])
    return e


def format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(x: Element) -> str:
    parts: list[str] = []
    for w, c in x:
        mag = abs(c)
        body = str(w) if mag == 1 else f"{format_scalar(mag)}*{w}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def format_word(w: Word) -> str:
    return str(w)


def gen_from_text(text: str) -> Generator:
    e = parse(text)
    (w,) = e.terms
    (g,) = w.gens
    return g
