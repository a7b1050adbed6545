"""Text format for noncommutative polynomials.

Grammar (whitespace is insignificant, an optional leading sign is allowed):

    poly   := term (('+'|'-') term)*
    term   := coeff '*' mono | mono | coeff
    coeff  := real | '(' real ')' | '(' real ('+'|'-') real 'i' ')'
    mono   := factor ('*' factor)*
    factor := 'x' uint ('^' uint)?

``x3^2`` is the same monomial as ``x3*x3``.  Like terms are combined and
terms whose coefficients cancel to zero are dropped, so ``"x1*x2 +
(-1)*x1*x2"`` parses to the zero polynomial.
"""

from __future__ import annotations

import re

from .ncpoly import NCPolynomial, Word

_REAL = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_UINT = re.compile(r"\d+")


class ParseError(ValueError):
    """Syntax or range error in polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def match(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def real(self) -> float:
        self.skip_ws()
        m = _REAL.match(self.text, self.pos)
        if not m:
            raise ParseError("expected a number", self.pos)
        self.pos = m.end()
        return float(m.group())

    def uint(self) -> int:
        self.skip_ws()
        m = _UINT.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an unsigned integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_ncpoly(text: str, g: int, real_only: bool = False) -> NCPolynomial:
    """Parse polynomial text over variables x1..xg.

    Raises ParseError on malformed input (with the offending position) and
    on variable indices outside [1, g] (naming the variable).  With
    ``real_only`` set, complex coefficients are rejected.
    """
    if not isinstance(g, int) or g < 1:
        raise ValueError(f"arity must be a positive integer, got {g!r}")
    sc = _Scanner(text)
    terms: dict[Word, complex] = {}
    if sc.at_end():
        raise ParseError("empty polynomial text", sc.pos)
    sign = -1.0 if sc.match("-") else 1.0
    if sign > 0:
        sc.match("+")
    while True:
        word, coeff = _parse_term(sc, g)
        coeff *= sign
        if real_only and coeff.imag != 0.0:
            raise ParseError("complex coefficient rejected in real mode", sc.pos)
        s = terms.get(word, 0j) + coeff
        if s == 0:
            terms.pop(word, None)
        else:
            terms[word] = s
        if sc.at_end():
            break
        if sc.match("+"):
            sign = 1.0
        elif sc.match("-"):
            sign = -1.0
        else:
            raise ParseError("expected '+' or '-' between terms", sc.pos)
    return NCPolynomial._raw(g, terms)


def _parse_term(sc: _Scanner, g: int) -> tuple[Word, complex]:
    ch = sc.peek()
    if ch == "x":
        return _parse_mono(sc, g), complex(1.0)
    coeff = _parse_coeff(sc)
    mark = sc.pos
    if sc.match("*"):
        if sc.peek() != "x":
            raise ParseError("expected a variable after '*'", sc.pos)
        word = _parse_mono(sc, g)
        return word, coeff
    sc.pos = mark
    return (), coeff  # bare constant


def _parse_coeff(sc: _Scanner) -> complex:
    if sc.match("("):
        re_part = sc.real()
        if sc.match(")"):
            return complex(re_part)
        sc.skip_ws()
        if sc.peek() == "+":
            sc.pos += 1
            im_sign = 1.0
        elif sc.peek() == "-":
            sc.pos += 1
            im_sign = -1.0
        else:
            raise ParseError("expected ')', '+' or '-' in complex coefficient", sc.pos)
        im_part = sc.real()
        if not sc.match("i"):
            raise ParseError("expected 'i' after imaginary part", sc.pos)
        sc.expect(")")
        return complex(re_part, im_sign * im_part)
    return complex(sc.real())


def _parse_mono(sc: _Scanner, g: int) -> Word:
    word: list[int] = []
    while True:
        sc.skip_ws()
        start = sc.pos
        sc.expect("x")
        idx = sc.uint()
        if not 1 <= idx <= g:
            raise ParseError(f"variable x{idx} out of range for arity g={g}", start)
        exp = 1
        if sc.match("^"):
            exp = sc.uint()
        word.extend([idx] * exp)
        mark = sc.pos
        if not sc.match("*"):
            break
        if sc.peek() != "x":
            # the '*' belongs to nothing we own; malformed
            raise ParseError("expected a variable after '*'", sc.pos)
    return tuple(word)
