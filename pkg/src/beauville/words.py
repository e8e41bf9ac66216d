"""Words in named group generators: parse, evaluate, print.

Grammar (whitespace-insensitive, LL(1)):

    word     := item+                      juxtaposition is product
    item     := atom ('^' operand)*        '^' binds tighter than product
    operand  := signed integer             power
              | NAME | '(' word ')'        conjugation, x^y = y^-1 x y
    atom     := NAME
              | '(' word ')'
              | '[' word ',' word ']'      commutator, x^-1 y^-1 x y

Names are a letter optionally followed by digits, so "x^ab" is (x^a)*b and
a multi-letter conjugator needs parentheses: "x^(ab)".
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyWord,
    MalformedSyntax,
    UnbalancedDelimiter,
    UnboundName,
    UnknownToken,
)


class Word:
    """Base class for expression-tree nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return print_word(self)


@dataclass(frozen=True)
class GenRef(Word):
    name: str


@dataclass(frozen=True)
class Product(Word):
    items: tuple


@dataclass(frozen=True)
class Power(Word):
    base: Word
    exponent: int


@dataclass(frozen=True)
class Conj(Word):
    base: Word
    by: Word


@dataclass(frozen=True)
class Comm(Word):
    left: Word
    right: Word


# -- tokenizer -------------------------------------------------------------

_PUNCT = set("^()[],-")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isalpha():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("NAME", text[i:j]))
            i = j
        elif ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j]))
            i = j
        elif ch in _PUNCT:
            tokens.append((ch, ch))
            i += 1
        else:
            raise UnknownToken(f"unexpected character {ch!r} at position {i}")
    return tokens


# -- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> None:
        if self.peek() != kind:
            raise UnbalancedDelimiter(f"expected {kind!r}")
        self.take()

    def word(self) -> Word:
        items = []
        while self.peek() not in (None, ")", "]", ","):
            items.append(self.item())
        if not items:
            raise EmptyWord("a word needs at least one factor")
        return items[0] if len(items) == 1 else Product(tuple(items))

    def item(self) -> Word:
        node = self.atom()
        while self.peek() == "^":
            self.take()
            node = self._apply_caret(node)
        return node

    def _apply_caret(self, base: Word) -> Word:
        kind = self.peek()
        if kind == "-" or kind == "INT":
            sign = 1
            if kind == "-":
                self.take()
                sign = -1
                if self.peek() != "INT":
                    raise MalformedSyntax("'-' must introduce an integer exponent")
            _, digits = self.take()
            return Power(base, sign * int(digits))
        if kind == "NAME":
            _, name = self.take()
            return Conj(base, GenRef(name))
        if kind == "(":
            self.take()
            by = self.word()
            self.expect(")")
            return Conj(base, by)
        raise MalformedSyntax("'^' needs an exponent or a conjugating word")

    def atom(self) -> Word:
        kind = self.peek()
        if kind == "NAME":
            _, name = self.take()
            return GenRef(name)
        if kind == "(":
            self.take()
            inner = self.word()
            self.expect(")")
            return inner
        if kind == "[":
            self.take()
            left = self.word()
            if self.peek() != ",":
                raise MalformedSyntax("commutator needs ','")
            self.take()
            right = self.word()
            self.expect("]")
            return Comm(left, right)
        raise MalformedSyntax(f"unexpected token {kind!r}")


def parse_word(text: str) -> Word:
    tokens = _tokenize(text)
    parser = _Parser(tokens)
    if parser.peek() is None:
        raise EmptyWord("empty word")
    if parser.peek() in (")", "]"):
        raise UnbalancedDelimiter(f"unmatched {parser.peek()!r}")
    node = parser.word()
    if parser.peek() is not None:
        kind = parser.peek()
        if kind in (")", "]"):
            raise UnbalancedDelimiter(f"unmatched {kind!r}")
        raise MalformedSyntax(f"trailing {kind!r}")
    return node


# -- evaluation --------------------------------------------------------------


def _power(x, n: int):
    if n < 0:
        x, n = x.inverse(), -n
    out = None
    while n:
        if n & 1:
            out = x if out is None else out * x
        x = x * x
        n >>= 1
    if out is None:
        # the group identity, computed without knowing the element type
        return x * x.inverse()
    return out


def eval_word(w: Word, env: dict):
    """Evaluate against name->element bindings; elements need *, inverse()."""
    if isinstance(w, GenRef):
        try:
            return env[w.name]
        except KeyError:
            raise UnboundName(f"no binding for generator {w.name!r}") from None
    if isinstance(w, Product):
        out = eval_word(w.items[0], env)
        for item in w.items[1:]:
            out = out * eval_word(item, env)
        return out
    if isinstance(w, Power):
        return _power(eval_word(w.base, env), w.exponent)
    if isinstance(w, Conj):
        x = eval_word(w.base, env)
        y = eval_word(w.by, env)
        return y.inverse() * x * y
    if isinstance(w, Comm):
        x = eval_word(w.left, env)
        y = eval_word(w.right, env)
        return x.inverse() * y.inverse() * x * y
    raise TypeError(f"not a word node: {w!r}")


def evaluate(text: str, env: dict):
    return eval_word(parse_word(text), env)


# -- printing ----------------------------------------------------------------


def _wrapped(w: Word) -> str:
    text = print_word(w)
    return text if isinstance(w, (GenRef, Comm)) else f"({text})"


def print_word(w: Word) -> str:
    if isinstance(w, GenRef):
        return w.name
    if isinstance(w, Product):
        return "".join(_wrapped(item) for item in w.items)
    if isinstance(w, Power):
        return f"{_wrapped(w.base)}^{w.exponent}"
    if isinstance(w, Conj):
        by = (
            print_word(w.by)
            if isinstance(w.by, GenRef)
            else f"({print_word(w.by)})"
        )
        return f"{_wrapped(w.base)}^{by}"
    if isinstance(w, Comm):
        return f"[{print_word(w.left)},{print_word(w.right)}]"
    raise TypeError(f"not a word node: {w!r}")


def env_from_handle(handle) -> dict:
    """Bind a group handle's declared generator names to its generators."""
    if handle.gen_names is None:
        names = [chr(ord("a") + i) for i in range(len(handle.generators))]
    else:
        names = list(handle.gen_names)
    return dict(zip(names, handle.generators))
