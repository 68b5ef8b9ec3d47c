"""Representation DSL: tokenizer, recursive-descent parser and canonical printer.

Grammar::

    rep       := component { "++" component }
    component := "T(" tensor ")" | tensor
    tensor    := factorrep { "*" factorrep }
    factorrep := ctor [ "#" label ]
    ctor      := "sl(" n ")" | "so(" n ")" | "sp(" n ")" | "spin(" n [ "," ("+"|"-") ] ")"
               | "ext(" k "," ctor ")" | "ext0(" k "," ctor ")" | "sym(" k "," ctor ")"
               | "g2" | "e6" | "e7" | "hw(" series "(" rank ")" ";" coords ")"

Adjacent components always share a boundary factor when both are unlabelled and equal,
so ``sl(2) ++ sl(2)`` is one sl(2) on two components. Two unrelated copies cannot sit
side by side in the text; see ``build_rep``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Literal

_TOKEN = re.compile(
    r"\s*(?:(?P<concat>\+\+)|(?P<int>-?\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[()*,;#+\-]))"
)
_IDENT_LABEL = re.compile(r"[A-Za-z0-9_]+")

PowerKind = Literal["ext", "ext0", "sym"]


@dataclass(frozen=True)
class Span:
    """Half-open character range [start, end) in the source text."""

    start: int
    end: int


class DslError(ValueError):
    """Base for DSL errors; carries the offending span."""

    def __init__(self, message: str, span: Span) -> None:
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self) -> str:
        return f"{self.message} (at {self.span.start}..{self.span.end})"

    def render(self, text: str) -> str:
        """Return the message with the source line and a caret marker."""
        width = max(1, self.span.end - self.span.start)
        return f"{self.message}\n  {text}\n  {' ' * self.span.start}{'^' * width}"


class DslSyntaxError(DslError):
    """Input does not match the grammar."""


class DslSemanticError(DslError):
    """Well-formed input that names an impossible module or link."""


@dataclass(frozen=True)
class Classical:
    kind: Literal["sl", "so", "sp"]
    n: int
    span: Span = field(default=Span(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Spin:
    n: int
    sign: Literal["+", "-"] | None = None
    span: Span = field(default=Span(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Power:
    kind: PowerKind
    k: int
    inner: Ctor
    span: Span = field(default=Span(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Exceptional:
    name: Literal["g2", "e6", "e7"]
    span: Span = field(default=Span(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class HighestWeight:
    series: str
    rank: int
    coords: tuple[int, ...]
    span: Span = field(default=Span(0, 0), compare=False, repr=False)


Ctor = Classical | Spin | Power | Exceptional | HighestWeight


@dataclass(frozen=True)
class FactorRep:
    ctor: Ctor
    label: str | None = None
    span: Span = field(default=Span(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class ComponentExpr:
    factors: tuple[FactorRep, ...]
    twisted: bool = False
    span: Span = field(default=Span(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class RepExpr:
    components: tuple[ComponentExpr, ...]
    span: Span = field(default=Span(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    start: int
    end: int


def tokenize(text: str) -> list[_Token]:
    """Split ``text`` into tokens.

    Raises:
        DslSyntaxError: an unexpected character.
    """
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise DslSyntaxError(f"unexpected character {text[start]!r}", Span(start, start + 1))
        kind = m.lastgroup or "punct"
        start = m.start(kind)
        tokens.append(_Token(kind, m.group(kind), start, m.end()))
        pos = m.end()
    tokens.append(_Token("eof", "", len(text), len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def _peek(self, offset: int = 1) -> _Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def _fail(self, expected: str) -> DslSyntaxError:
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        return DslSyntaxError(f"expected {expected}, found {found}", Span(t.start, max(t.end, t.start + 1)))

    def _advance(self) -> _Token:
        t = self.tok
        self.pos += 1
        return t

    def _expect(self, text: str) -> _Token:
        if self.tok.text != text or self.tok.kind == "eof":
            raise self._fail(repr(text))
        return self._advance()

    def _int(self, what: str) -> int:
        if self.tok.kind != "int":
            raise self._fail(what)
        return int(self._advance().text)

    def rep(self) -> RepExpr:
        start = self.tok.start
        comps = [self.component()]
        while self.tok.kind == "concat":
            self._advance()
            comps.append(self.component())
        if self.tok.kind != "eof":
            raise self._fail("'++', '*' or end of input")
        return RepExpr(tuple(comps), Span(start, self.tokens[self.pos - 1].end))

    def component(self) -> ComponentExpr:
        start = self.tok.start
        if self.tok.kind == "ident" and self.tok.text == "T" and self._peek().text == "(":
            self._advance()
            self._advance()
            factors = self.tensor()
            end = self._expect(")").end
            return ComponentExpr(factors, True, Span(start, end))
        factors = self.tensor()
        return ComponentExpr(factors, False, Span(start, factors[-1].span.end))

    def tensor(self) -> tuple[FactorRep, ...]:
        out = [self.factorrep()]
        while self.tok.text == "*" and self.tok.kind == "punct":
            self._advance()
            out.append(self.factorrep())
        return tuple(out)

    def factorrep(self) -> FactorRep:
        start = self.tok.start
        ctor = self.ctor()
        end = ctor.span.end
        label = None
        if self.tok.text == "#" and self.tok.kind == "punct":
            self._advance()
            if self.tok.kind not in ("ident", "int") or not _IDENT_LABEL.fullmatch(self.tok.text):
                raise self._fail("a link label")
            t = self._advance()
            label, end = t.text, t.end
        return FactorRep(ctor, label, Span(start, end))

    def ctor(self) -> Ctor:
        t = self.tok
        if t.kind != "ident":
            raise self._fail("a constructor (sl, so, sp, spin, ext, ext0, sym, g2, e6, e7, hw)")
        name = t.text
        start = t.start
        if name in ("g2", "e6", "e7"):
            self._advance()
            return Exceptional(name, Span(start, t.end))  # type: ignore[arg-type]
        if name in ("sl", "so", "sp"):
            self._advance()
            self._expect("(")
            n = self._int("an integer")
            end = self._expect(")").end
            return Classical(name, n, Span(start, end))  # type: ignore[arg-type]
        if name == "spin":
            self._advance()
            self._expect("(")
            n = self._int("an integer")
            sign = None
            if self.tok.text == ",":
                self._advance()
                if self.tok.text not in ("+", "-") or self.tok.kind != "punct":
                    raise self._fail("'+' or '-'")
                sign = self._advance().text
            end = self._expect(")").end
            return Spin(n, sign, Span(start, end))  # type: ignore[arg-type]
        if name in ("ext", "ext0", "sym"):
            self._advance()
            self._expect("(")
            k = self._int("a positive integer")
            self._expect(",")
            inner = self.ctor()
            end = self._expect(")").end
            return Power(name, k, inner, Span(start, end))  # type: ignore[arg-type]
        if name == "hw":
            self._advance()
            self._expect("(")
            if self.tok.kind != "ident" or self.tok.text not in ("A", "B", "C", "D", "E", "G"):
                raise self._fail("a series letter (A, B, C, D, E, G)")
            series = self._advance().text
            self._expect("(")
            rank = self._int("a rank")
            self._expect(")")
            self._expect(";")
            coords = [self._int("a coordinate")]
            while self.tok.text == ",":
                self._advance()
                coords.append(self._int("a coordinate"))
            end = self._expect(")").end
            return HighestWeight(series, rank, tuple(coords), Span(start, end))
        raise self._fail("a constructor (sl, so, sp, spin, ext, ext0, sym, g2, e6, e7, hw)")


def parse_dsl(text: str) -> RepExpr:
    """Parse a representation expression.

    Raises:
        DslSyntaxError: with the span of the offending token.
    """
    if not text.strip():
        raise DslSyntaxError("empty expression", Span(0, max(1, len(text))))
    return _Parser(text).rep()


def print_ctor(ctor: Ctor) -> str:
    match ctor:
        case Classical(kind=kind, n=n):
            return f"{kind}({n})"
        case Spin(n=n, sign=None):
            return f"spin({n})"
        case Spin(n=n, sign=sign):
            return f"spin({n},{sign})"
        case Power(kind=kind, k=k, inner=inner):
            return f"{kind}({k},{print_ctor(inner)})"
        case Exceptional(name=name):
            return name
        case HighestWeight(series=series, rank=rank, coords=coords):
            return f"hw({series}({rank});{','.join(str(c) for c in coords)})"
    raise TypeError(f"not a constructor: {ctor!r}")


def print_dsl(tree: RepExpr) -> str:
    """Canonical text for ``tree``; ``parse_dsl(print_dsl(t)) == t``."""
    parts = []
    for comp in tree.components:
        body = "*".join(
            print_ctor(f.ctor) + (f"#{f.label}" if f.label is not None else "") for f in comp.factors
        )
        parts.append(f"T({body})" if comp.twisted else body)
    return " ++ ".join(parts)
