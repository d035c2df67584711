"""Fox free differential calculus over the integral group ring of a free group."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .freegroup import Word
from .presentation import Presentation

__all__ = ["GroupRingElement", "fox_derivative", "fox_jacobian"]


class GroupRingElement:
    """Finite Z-linear combination of free-group words (no zero coefficients)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, int] | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[w] = acc.get(w, 0) + int(c)
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def of(cls, w: Word, c: int = 1) -> "GroupRingElement":
        return cls({w: c})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({Word(): 1})

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return GroupRingElement(acc)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self._terms.items()})
        if isinstance(other, Word):
            other = GroupRingElement.of(other)
        acc: dict = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u * v
                acc[w] = acc.get(w, 0) + a * b
        return GroupRingElement(acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, Word):
            return GroupRingElement.of(other) * self
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=str):
            c = self._terms[w]
            parts.append(f"{c:+d}*[{w}]")
        return " ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"word": str(w), "coeff": self._terms[w]} for w in sorted(self._terms, key=str)]


def fox_derivative(w: Word, g: str) -> GroupRingElement:
    """``d w / d g`` by one left-to-right pass over ``w``.

    A letter ``g`` contributes ``+prefix``; a letter ``g^-1`` contributes
    ``-(prefix * g^-1)``.
    """
    acc: dict = {}
    letters = w.letters
    for i, (s, e) in enumerate(letters):
        if s != g:
            continue
        if e > 0:
            key, c = Word._reduced(letters[:i]), 1
        else:
            key, c = Word._reduced(letters[:i + 1]), -1
        acc[key] = acc.get(key, 0) + c
    return GroupRingElement(acc)


@lru_cache(maxsize=256)
def fox_jacobian(P: Presentation) -> tuple:
    """Rows indexed by relators (padding rows last, all zero), columns by generators."""
    return tuple(tuple(fox_derivative(r, g) for g in P.generators) for r in P.all_relators)
