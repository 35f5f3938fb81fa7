"""Parser for a small non-commutative operator expression language.

Grammar (whitespace insignificant; ^ binds tighter than *, which binds
tighter than + and -):

    expr   := term { ("+" | "-") term }
    term   := factor { "*" factor }
    factor := atom [ "^" uint ]
    atom   := "a" | "ad" | "N" | uint | "m" | "r" | "(" expr ")"

a is the lowering operator, ad the raising operator, and N abbreviates
ad*a.  The symbols m and r stand for nonnegative integers and must be
bound when parsing; they appear in the AST as integer literals.
Exponents are nonnegative integer literals.  q is not a symbol of the
language; deformation lives in the coefficients, not the grammar.  A
Unicode minus sign is accepted for "-".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .boson import NormalForm


class ParseError(ValueError):
    """Malformed operator expression; position is a 0-based offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Atom:
    name: str  # "a" | "ad" | "N"


@dataclass(frozen=True)
class Pow:
    base: "OpExpr"
    exponent: int


@dataclass(frozen=True)
class Prod:
    left: "OpExpr"
    right: "OpExpr"


@dataclass(frozen=True)
class Sum:
    left: "OpExpr"
    right: "OpExpr"
    sign: int  # +1 for addition, -1 for subtraction


OpExpr = Union[Lit, Atom, Pow, Prod, Sum]

_MINUS = {"-", "−"}
_ATOM_NAMES = ("a", "ad", "N")


class _Parser:
    def __init__(self, text: str, bindings: dict[str, int | None]) -> None:
        self.text = text
        self.pos = 0
        self.bindings = bindings

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def read_uint(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an unsigned integer", start)
        return int(self.text[start : self.pos])

    def parse_expr(self) -> OpExpr:
        node = self.parse_term()
        while True:
            self.skip_ws()
            ch = self.peek()
            if ch == "+" or ch in _MINUS:
                self.pos += 1
                rhs = self.parse_term()
                node = Sum(node, rhs, -1 if ch in _MINUS else 1)
            else:
                return node

    def parse_term(self) -> OpExpr:
        node = self.parse_factor()
        while True:
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                node = Prod(node, self.parse_factor())
            else:
                return node

    def parse_factor(self) -> OpExpr:
        node = self.parse_atom()
        self.skip_ws()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            return Pow(node, self.read_uint())
        return node

    def parse_atom(self) -> OpExpr:
        self.skip_ws()
        at = self.pos
        ch = self.peek()
        if ch is None:
            raise ParseError("unexpected end of input", at)
        if ch == "(":
            self.pos += 1
            node = self.parse_expr()
            self.skip_ws()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return node
        if ch.isdigit():
            return Lit(self.read_uint())
        if ch.isalpha():
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            name = self.text[at : self.pos]
            if name in _ATOM_NAMES:
                return Atom(name)
            if name in self.bindings:
                bound = self.bindings[name]
                if bound is None:
                    raise ParseError(f"symbol '{name}' is not bound", at)
                return Lit(bound)
            raise ParseError(f"unknown symbol '{name}'", at)
        raise ParseError(f"unexpected character {ch!r}", at)


def parse(text: str, m: int | None = None, r: int | None = None) -> OpExpr:
    """Parse an operator expression; m and r substitute bound values."""
    for name, value in (("m", m), ("r", r)):
        if value is not None and value < 0:
            raise ValueError(f"binding for '{name}' must be nonnegative")
    p = _Parser(text, {"m": m, "r": r})
    node = p.parse_expr()
    p.skip_ws()
    if p.pos != len(text):
        raise ParseError("unexpected trailing input", p.pos)
    return node


def to_normal_form(node: OpExpr) -> NormalForm:
    """Evaluate an AST in the normal-ordering engine."""
    if isinstance(node, Lit):
        return NormalForm.identity() * node.value
    if isinstance(node, Atom):
        if node.name == "a":
            return NormalForm.lowering()
        if node.name == "ad":
            return NormalForm.raising()
        return NormalForm.number()
    if isinstance(node, Pow):
        return to_normal_form(node.base) ** node.exponent
    if isinstance(node, Prod):
        return to_normal_form(node.left) * to_normal_form(node.right)
    if isinstance(node, Sum):
        left = to_normal_form(node.left)
        right = to_normal_form(node.right)
        return left + right if node.sign > 0 else left - right
    raise TypeError(f"not an operator expression node: {node!r}")


def normal_order(text: str, m: int | None = None, r: int | None = None) -> NormalForm:
    """Parse and normally order an operator expression in one step."""
    return to_normal_form(parse(text, m=m, r=r))
