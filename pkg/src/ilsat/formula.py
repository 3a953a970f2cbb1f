"""Syntax of the interpretability modal language.

The core language has exactly four constructors:

    Atom(name)       propositional variable
    Bottom()         falsity
    Implies(a, b)    material implication     a -> b
    Rhd(a, b)        binary modality          a |> b

Concrete syntax (ASCII, whitespace insensitive between tokens):

    formula := imp
    imp     := rhd ( "->" imp )?          right associative
    rhd     := or ( "|>" or )*            left associative
    or      := and ( "|" and )*
    and     := iff ( "&" iff )*
    iff     := unary ( "<->" unary )?
    unary   := "~" unary | "box" unary | "dia" unary | atomexpr
    atomexpr:= identifier | "true" | "false" | "(" formula ")"

Identifiers match [a-z][a-z0-9_]*; "box", "dia", "true" and "false" are
reserved.  Everything beyond ->, |> and falsity is surface sugar that the
parser eliminates, so downstream code only ever sees core trees:

    ~a      =>  a -> false
    a & b   =>  (a -> (b -> false)) -> false
    a | b   =>  (a -> false) -> b
    a <-> b =>  (a -> b) & (b -> a), then expanded
    true    =>  false -> false
    box a   =>  (a -> false) |> false
    dia a   =>  (a |> false) -> false

``pretty`` emits minimal parentheses under the precedence
unary > |> > -> and re-sugars negations, box and dia for readability;
``parse(pretty(f)) == f`` holds for every core tree ``f``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union


class ParseError(ValueError):
    """Raised on malformed input; ``position`` is a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Rhd:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return pretty(self)


Formula = Union[Atom, Bottom, Implies, Rhd]

BOT = Bottom()
TOP = Implies(BOT, BOT)


def neg(a: Formula) -> Formula:
    return Implies(a, BOT)


def conj(a: Formula, b: Formula) -> Formula:
    return Implies(Implies(a, Implies(b, BOT)), BOT)


def disj(a: Formula, b: Formula) -> Formula:
    return Implies(Implies(a, BOT), b)


def iff(a: Formula, b: Formula) -> Formula:
    return conj(Implies(a, b), Implies(b, a))


def box(a: Formula) -> Formula:
    return Rhd(Implies(a, BOT), BOT)


def dia(a: Formula) -> Formula:
    return Implies(Rhd(a, BOT), BOT)


def size(f: Formula) -> int:
    """Number of nodes in the core tree."""
    total = 0
    stack = [f]
    while stack:
        g = stack.pop()
        total += 1
        if isinstance(g, (Implies, Rhd)):
            stack.append(g.left)
            stack.append(g.right)
    return total


def subformulas(f: Formula) -> frozenset:
    """All subtrees of ``f`` including ``f`` itself, deduplicated."""
    seen = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g in seen:
            continue
        seen.add(g)
        if isinstance(g, (Implies, Rhd)):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(seen)


def variables(f: Formula) -> frozenset:
    """Names of the propositional variables occurring in ``f``."""
    return frozenset(g.name for g in subformulas(f) if isinstance(g, Atom))


# ---------------------------------------------------------------------------
# Tokenizer

_IDENT_RE = re.compile(r"[a-z][a-z0-9_]*")
_RESERVED = {"box", "dia", "true", "false"}
_SYMBOLS = ("<->", "->", "|>", "|", "&", "~", "(", ")")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _IDENT_RE.match(text, pos)
        if m:
            word = m.group()
            kind = word if word in _RESERVED else "ident"
            tokens.append((kind, word, pos))
            pos = m.end()
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, pos):
                tokens.append((sym, sym, pos))
                pos += len(sym)
                break
        else:
            raise ParseError(f"unknown token {text[pos]!r}", pos)
    tokens.append(("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def advance(self) -> tuple:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def here(self) -> int:
        return self.tokens[self.pos][2]

    def formula(self) -> Formula:
        return self.imp()

    def imp(self) -> Formula:
        left = self.rhd()
        if self.peek() == "->":
            self.advance()
            return Implies(left, self.imp())
        return left

    def rhd(self) -> Formula:
        out = self.disj()
        while self.peek() == "|>":
            self.advance()
            out = Rhd(out, self.disj())
        return out

    def disj(self) -> Formula:
        out = self.conj()
        while self.peek() == "|":
            self.advance()
            out = disj(out, self.conj())
        return out

    def conj(self) -> Formula:
        out = self.equiv()
        while self.peek() == "&":
            self.advance()
            out = conj(out, self.equiv())
        return out

    def equiv(self) -> Formula:
        left = self.unary()
        if self.peek() == "<->":
            self.advance()
            return iff(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind = self.peek()
        if kind == "~":
            self.advance()
            return neg(self.unary())
        if kind == "box":
            self.advance()
            return box(self.unary())
        if kind == "dia":
            self.advance()
            return dia(self.unary())
        return self.atomexpr()

    def atomexpr(self) -> Formula:
        kind, value, pos = self.advance()
        if kind == "ident":
            return Atom(value)
        if kind == "true":
            return TOP
        if kind == "false":
            return BOT
        if kind == "(":
            inner = self.formula()
            if self.peek() != ")":
                raise ParseError("unbalanced parentheses: expected ')'", self.here())
            self.advance()
            return inner
        raise ParseError(f"expected a formula, found {value or 'end of input'!r}", pos)


def parse(text: str) -> Formula:
    """Parse concrete syntax into a desugared core tree."""
    parser = _Parser(_tokenize(text))
    result = parser.formula()
    if parser.peek() != "eof":
        kind, value, pos = parser.advance()
        raise ParseError(f"unexpected {value!r} after formula", pos)
    return result


# ---------------------------------------------------------------------------
# Pretty printer

_PREC_IMP, _PREC_RHD, _PREC_UNARY, _PREC_ATOM = 0, 1, 2, 3


def _render(f: Formula) -> tuple:
    match f:
        case Atom(name):
            return name, _PREC_ATOM
        case Bottom():
            return "false", _PREC_ATOM
        case Implies(Bottom(), Bottom()):
            return "true", _PREC_ATOM
        case Implies(Rhd(a, Bottom()), Bottom()):
            return "dia " + _pretty(a, _PREC_UNARY), _PREC_UNARY
        case Implies(a, Bottom()):
            return "~" + _pretty(a, _PREC_UNARY), _PREC_UNARY
        case Rhd(Implies(a, Bottom()), Bottom()):
            return "box " + _pretty(a, _PREC_UNARY), _PREC_UNARY
        case Implies(a, b):
            return _pretty(a, _PREC_RHD) + " -> " + _pretty(b, _PREC_IMP), _PREC_IMP
        case Rhd(a, b):
            return _pretty(a, _PREC_RHD) + " |> " + _pretty(b, _PREC_UNARY), _PREC_RHD
    raise TypeError(f"not a formula: {f!r}")


def _pretty(f: Formula, context: int) -> str:
    text, level = _render(f)
    if level < context:
        return "(" + text + ")"
    return text


def pretty(f: Formula) -> str:
    """Render with minimal parentheses; inverse of ``parse`` on core trees."""
    return _pretty(f, _PREC_IMP)


def iter_formulas_file(text: str) -> Iterator[str]:
    """Yield formula sources from file text: one per line, '#' comments."""
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            yield stripped
