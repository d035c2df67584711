"""Knot input: PD codes to Wirtinger presentations, and a small fixture table.

PD convention: ``X[a,b,c,d]`` lists the four edge labels around a crossing
counterclockwise, starting from the incoming under-edge ``a`` (so the
under-strand runs ``a -> c``).  Edges are numbered ``1..2n`` along the
orientation.  The over-strand runs ``d -> b`` when ``b - d == 1 (mod 2n)``
and ``b -> d`` otherwise; an explicit sign array overrides that guess.
"""

from __future__ import annotations

import json
import re
import string
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ParseError, PresentationError
from .freegroup import Word
from .hnn import SplittingData, hnn_presentation
from .laurent import QQ, LaurentPoly
from .presentation import Epimorphism, Presentation

__all__ = ["PDCode", "wirtinger_from_pd", "KnotFixture", "builtin", "FIXTURE_NAMES", "PD_CODES"]

_X = re.compile(r"X\s*\[\s*([0-9\s,]*)\]")


@dataclass(frozen=True)
class PDCode:
    """Crossings as 4-tuples of edge labels, with optional per-crossing signs (+1/-1).

    A sign of ``+1`` means the over-strand runs ``d -> b``.
    """

    crossings: tuple
    signs: Optional[tuple] = None

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in x) for x in self.crossings)
        for x in xs:
            if len(x) != 4:
                raise PresentationError(f"crossing {list(x)} does not have 4 labels")
        object.__setattr__(self, "crossings", xs)
        if self.signs is not None:
            sg = tuple(int(s) for s in self.signs)
            if len(sg) != len(xs) or any(s not in (1, -1) for s in sg):
                raise PresentationError("sign array must hold one +1/-1 per crossing")
            object.__setattr__(self, "signs", sg)
        n2 = 2 * len(xs)
        counts: dict = {}
        for x in xs:
            for v in x:
                counts[v] = counts.get(v, 0) + 1
        if set(counts) != set(range(1, n2 + 1)):
            raise PresentationError(f"edge labels must be exactly 1..{n2}")
        bad = sorted(v for v, c in counts.items() if c != 2)
        if bad:
            raise PresentationError(f"edge labels {bad} do not appear exactly twice")

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @classmethod
    def parse(cls, text: str) -> "PDCode":
        """``X[1,4,2,5] X[3,6,4,1] ...`` or JSON ``[[1,4,2,5], ...]`` / ``{"crossings":..., "signs":...}``."""
        s = text.strip()
        if s.startswith("[") or s.startswith("{"):
            try:
                data = json.loads(s)
            except json.JSONDecodeError as e:
                raise ParseError(f"bad PD JSON: {e.msg}", e.lineno, e.colno) from None
            if isinstance(data, dict):
                return cls(tuple(data["crossings"]), data.get("signs"))
            return cls(tuple(data))
        s = re.sub(r"^PD\s*\[(.*)\]\s*$", r"\1", s, flags=re.S)
        crossings = []
        pos = 0
        for m in _X.finditer(s):
            gap = s[pos:m.start()].strip(" \t\n,")
            if gap:
                raise ParseError(f"unexpected text {gap!r} in PD code", 1, pos + 1)
            nums = [v for v in re.split(r"[\s,]+", m.group(1).strip()) if v]
            crossings.append(tuple(int(v) for v in nums))
            pos = m.end()
        if s[pos:].strip(" \t\n,"):
            raise ParseError(f"unexpected text {s[pos:].strip()!r} in PD code", 1, pos + 1)
        return cls(tuple(crossings))

    def to_json(self) -> dict:
        out = {"crossings": [list(x) for x in self.crossings]}
        if self.signs is not None:
            out["signs"] = list(self.signs)
        return out


def _arc_name(i: int) -> str:
    return string.ascii_lowercase[i] if i < 26 else f"x{i}"


def wirtinger_from_pd(pd: PDCode):
    """``(presentation, epsilon)``: one generator per arc, last relator dropped, eps == 1."""
    n2 = 2 * pd.num_crossings
    if n2 == 0:
        P = Presentation(("a",), ())
        return P, Epimorphism.from_values(P, {"a": 1})

    parent = list(range(n2 + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # the two over-edges at a crossing belong to one arc
    for _, b, _, d in pd.crossings:
        ra, rb = find(b), find(d)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(v) for v in range(1, n2 + 1)})
    name = {r: _arc_name(i) for i, r in enumerate(roots)}
    arc = {v: name[find(v)] for v in range(1, n2 + 1)}

    rels = []
    for idx, (a, b, c, d) in enumerate(pd.crossings):
        if pd.signs is not None:
            s = pd.signs[idx]
        else:
            s = 1 if (b - d) % n2 == 1 else -1
        o = Word.gen(arc[b])
        conj = (o ** s) * Word.gen(arc[a]) * (o ** -s)
        r = Word.gen(arc[c]) * conj.inverse()
        if r:
            rels.append(r)
    gens = tuple(name[r] for r in roots)
    # a Wirtinger relator is a consequence of the others; drop one
    while len(rels) > len(gens) - 1:
        rels.pop()
    P = Presentation(gens, tuple(rels))
    return P, Epimorphism.from_values(P, {g: 1 for g in gens})


PD_CODES = {
    "trefoil": "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
    "figure8": "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
    "5_2": "X[1,5,2,4] X[3,9,4,8] X[5,1,6,10] X[7,3,8,2] X[9,7,10,6]",
}


@dataclass(frozen=True)
class KnotFixture:
    name: str
    presentation: Presentation
    eps: Epimorphism
    known_genus: Optional[int] = None
    known_alexander: Optional[LaurentPoly] = None
    splitting: Optional[SplittingData] = None
    is_knot: bool = True
    wirtinger: bool = False

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "presentation": str(self.presentation),
            "eps": self.eps.to_json(),
            "known_genus": self.known_genus,
            "known_alexander": None if self.known_alexander is None else str(self.known_alexander),
            "splitting": None if self.splitting is None else self.splitting.to_json(),
            "is_knot": self.is_knot,
            "wirtinger": self.wirtinger,
        }


def _poly(*coeffs) -> LaurentPoly:
    return LaurentPoly.from_dense(QQ, coeffs)


def _w(text: str) -> Word:
    from .dsl import parse_word
    return parse_word(text)


def _splitting_52() -> SplittingData:
    base = Presentation(("a", "b"), ())
    return SplittingData(base, (_w("a"), _w("b^-1 a b^-1")), (_w("b"), _w("(b^-1 a)^2")), "t")


def _splitting_52_rank3() -> SplittingData:
    base = Presentation(("a", "b", "c"), ())
    return SplittingData(base, (_w("a"), _w("b^-1 a b^-1"), _w("b^-2 a b^-2")),
                         (_w("b"), _w("b^-1 a b^-1 a"), _w("c")), "t")


def _splitting_bs() -> SplittingData:
    return SplittingData(Presentation(("a",), ()), (_w("a"),), (_w("a^2"),), "t")


def _eps(P, values):
    return Epimorphism.from_values(P, values)


def _make(name: str) -> KnotFixture:
    if name == "unknot":
        P, eps = wirtinger_from_pd(PDCode(()))
        return KnotFixture(name, P, eps, 0, _poly(1), wirtinger=True)
    if name == "trefoil":
        P = Presentation.parse("< a, b | a b a = b a b >")
        return KnotFixture(name, P, _eps(P, {"a": 1, "b": 1}), 1, _poly(1, -1, 1))
    if name == "figure8":
        P, eps = wirtinger_from_pd(PDCode.parse(PD_CODES["figure8"]))
        return KnotFixture(name, P, eps, 1, _poly(1, -3, 1), wirtinger=True)
    if name == "5_2":
        S = _splitting_52()
        P = Presentation.parse("< a, b, t | t a t^-1 = b, t b^-1 a b^-1 t^-1 = (b^-1 a)^2 >")
        return KnotFixture(name, P, _eps(P, {"a": 0, "b": 0, "t": 1}), 1, _poly(2, -3, 2), S)
    if name == "5_2_rank3":
        S = _splitting_52_rank3()
        P = Presentation.parse("< a, b, c, t | t a t^-1 = b, t b^-1 a b^-1 t^-1 = (b^-1 a)^2, "
                               "t b^-2 a b^-2 t^-1 = c >")
        return KnotFixture(name, P, _eps(P, {"a": 0, "b": 0, "c": 0, "t": 1}), 1, _poly(2, -3, 2), S)
    if name == "bs_1_2":
        S = _splitting_bs()
        P, eps = hnn_presentation(S)
        return KnotFixture(name, P, eps, None, None, S, is_knot=False)
    raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")


FIXTURE_NAMES = ("unknot", "trefoil", "figure8", "5_2", "5_2_rank3", "bs_1_2")
_CACHE: dict = {}


def builtin(name: str) -> KnotFixture:
    if name not in _CACHE:
        _CACHE[name] = _make(name)
    return _CACHE[name]
