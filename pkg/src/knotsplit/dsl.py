"""Text syntax for words and presentations.

Grammar (whitespace insensitive)::

    presentation := '<' gens '|' [rel (',' rel)*] '>'
    gens         := ident (',' ident)*
    rel          := word ['=' word]  |  '1'
    word         := factor+
    factor       := (ident | '(' word ')') ['^' int]
    ident        := [A-Za-z][A-Za-z0-9_]* ['@' ['-'] digits]
    int          := nonzero signed decimal

``u = v`` means the relator ``u v^-1``.  A relator may not reduce to the
identity; the lone token ``1`` is the only way to write a trivial (padding)
relator.
"""

from __future__ import annotations

import re
from typing import List, Optional, Sequence

from .errors import ParseError
from .freegroup import Word
from .presentation import Presentation

__all__ = ["parse_presentation", "parse_word", "parse_words", "format_word", "format_presentation"]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*(?:@-?[0-9]+)?)
  | (?P<int>[-+]?[0-9]+)
  | (?P<punct>[<>|,=()^])
""", re.VERBOSE)


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        s = m.group()
        if kind == "ws":
            nl = s.count("\n")
            if nl:
                line += nl
                line_start = pos + s.rindex("\n") + 1
        else:
            toks.append(_Tok(kind if kind != "punct" else s, s, line, pos - line_start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str, generators: Optional[Sequence[str]] = None):
        self.toks = _tokenize(text)
        self.i = 0
        self.generators = None if generators is None else set(generators)

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.cur
        raise ParseError(msg, tok.line, tok.col)

    def expect(self, kind) -> _Tok:
        tok = self.cur
        if tok.kind != kind:
            found = tok.text or "end of input"
            self.error(f"expected {kind!r}, found {found!r}")
        self.i += 1
        return tok

    def accept(self, kind) -> Optional[_Tok]:
        if self.cur.kind == kind:
            tok = self.cur
            self.i += 1
            return tok
        return None

    def word(self) -> Word:
        if self.cur.kind not in ("ident", "("):
            self.error(f"expected a word, found {self.cur.text or 'end of input'!r}")
        out = Word()
        while self.cur.kind in ("ident", "("):
            out = out * self.factor()
        return out

    def factor(self) -> Word:
        tok = self.cur
        if self.accept("("):
            base = self.word()
            self.expect(")")
        else:
            tok = self.expect("ident")
            if self.generators is not None and tok.text not in self.generators:
                self.error(f"unknown generator {tok.text!r}", tok)
            base = Word.gen(tok.text)
        if self.accept("^"):
            itok = self.cur
            if itok.kind != "int":
                self.error("expected an integer exponent")
            self.i += 1
            n = int(itok.text)
            if n == 0:
                self.error("exponent must be nonzero", itok)
            return base ** n
        return base

    def presentation(self) -> Presentation:
        self.expect("<")
        gens = [self.expect("ident").text]
        while self.accept(","):
            gens.append(self.expect("ident").text)
        if len(set(gens)) != len(gens):
            self.error("duplicate generator")
        self.generators = set(gens)
        self.expect("|")
        rels, padding = [], 0
        if self.cur.kind != ">":
            while True:
                r = self.relator()
                if r is None:
                    padding += 1
                else:
                    rels.append(r)
                if not self.accept(","):
                    break
        self.expect(">")
        self.expect("eof")
        return Presentation(tuple(gens), tuple(rels), padding)

    def relator(self) -> Optional[Word]:
        start = self.cur
        if start.kind == "int":
            if start.text != "1":
                self.error(f"unexpected number {start.text!r}")
            self.i += 1
            return None
        w = self.word()
        if self.accept("="):
            w = w * self.word().inverse()
        if not w:
            self.error("relator reduces to the identity (write '1' for a trivial relator)", start)
        return w


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


def parse_word(text: str, generators: Optional[Sequence[str]] = None) -> Word:
    """Parse a single word; ``1`` or an empty string gives the identity."""
    if text.strip() in ("", "1"):
        return Word()
    p = _Parser(text, generators)
    w = p.word()
    p.expect("eof")
    return w


def parse_words(text: str, generators: Optional[Sequence[str]] = None) -> list:
    """Comma-separated list of words."""
    parts = [s for s in text.split(",")]
    if len(parts) == 1 and not parts[0].strip():
        return []
    return [parse_word(s, generators) for s in parts]


def format_word(w: Word) -> str:
    return str(w)


def format_presentation(P: Presentation) -> str:
    rels = [str(r) for r in P.relators] + ["1"] * P.padding
    return f"< {', '.join(P.generators)} | {', '.join(rels)} >"
