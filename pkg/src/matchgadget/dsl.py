"""Recursive-descent parser for the formula surface syntax.

Grammar:
    formula := "T" | "F" | "!" formula
             | "(" formula ("&" | "|" | "->") formula ")"
             | "E[" formula ("," formula)* "]"
             | "@" digits

Whitespace between tokens is ignored.  "F" parses to NOT(TRUE).
"""

from __future__ import annotations

from .errors import FormulaSyntaxError, UnbalancedParensError
from .formula import (
    And,
    Atom,
    Exists,
    Formula,
    Implies,
    Not,
    Or,
    TrueLit,
    false_literal,
)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.peek()
        if ch is None:
            raise FormulaSyntaxError("unexpected end of input", self.pos)
        self.pos += 1
        return ch

    def expect(self, ch: str, unbalanced: bool = False) -> None:
        got = self.peek()
        if got != ch:
            message = f"expected {ch!r}, found {got!r}"
            if unbalanced:
                raise UnbalancedParensError(message, self.pos)
            raise FormulaSyntaxError(message, self.pos)
        self.pos += 1


def parse_formula(text: str) -> Formula:
    scanner = _Scanner(text)
    formula = _parse(scanner)
    trailing = scanner.peek()
    if trailing is not None:
        if trailing in ")]":
            raise UnbalancedParensError(f"unmatched {trailing!r}", scanner.pos)
        raise FormulaSyntaxError(f"unexpected trailing {trailing!r}", scanner.pos)
    return formula


def _parse(scanner: _Scanner) -> Formula:
    ch = scanner.peek()
    if ch is None:
        raise FormulaSyntaxError("unexpected end of input", scanner.pos)
    if ch == "T":
        scanner.take()
        return TrueLit()
    if ch == "F":
        scanner.take()
        return false_literal()
    if ch == "!":
        scanner.take()
        return Not(_parse(scanner))
    if ch == "@":
        scanner.take()
        return Atom(_parse_number(scanner))
    if ch == "(":
        scanner.take()
        left = _parse(scanner)
        op = _parse_operator(scanner)
        right = _parse(scanner)
        scanner.expect(")", unbalanced=True)
        return op(left, right)
    if ch == "E":
        scanner.take()
        scanner.expect("[")
        branches = [_parse(scanner)]
        while scanner.peek() == ",":
            scanner.take()
            branches.append(_parse(scanner))
        scanner.expect("]", unbalanced=True)
        return Exists(tuple(branches))
    raise FormulaSyntaxError(f"unexpected character {ch!r}", scanner.pos)


def _parse_number(scanner: _Scanner) -> int:
    start = scanner.pos
    digits = ""
    while scanner.pos < len(scanner.text) and scanner.text[scanner.pos].isdigit():
        digits += scanner.text[scanner.pos]
        scanner.pos += 1
    if not digits:
        raise FormulaSyntaxError("expected digits after '@'", start)
    return int(digits)


def _parse_operator(scanner: _Scanner):
    ch = scanner.peek()
    if ch == "&":
        scanner.take()
        return And
    if ch == "|":
        scanner.take()
        return Or
    if ch == "-":
        scanner.take()
        scanner.expect(">")
        return Implies
    raise FormulaSyntaxError(f"expected a connective, found {ch!r}", scanner.pos)
