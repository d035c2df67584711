"""Finite presentations, abelianization and epimorphisms onto Z."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold
from typing import Mapping, Optional, Sequence

from .errors import AlphabetError, PresentationError
from .freegroup import Word, check_generator

__all__ = [
    "Presentation", "Epimorphism", "AbelianizationResult", "smith_normal_form",
    "abelianize", "abelianized_image", "epimorphism_to_Z", "pad_relators",
    "introduce_generator", "eliminate_generator", "relator_matrix",
]


@dataclass(frozen=True)
class Presentation:
    """``< generators | relators >``.

    ``relators`` are nonempty reduced words.  Trivial relators exist only as a
    count in ``padding`` (see :func:`pad_relators`); they sit after the real
    relators in :attr:`all_relators` and give zero rows in the Fox matrix.
    """

    generators: tuple
    relators: tuple = ()
    padding: int = 0

    def __post_init__(self):
        gens = tuple(check_generator(g) for g in self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError(f"duplicate generators in {gens}")
        rels = tuple(r if isinstance(r, Word) else Word(r) for r in self.relators)
        allowed = set(gens)
        for r in rels:
            if not r:
                raise PresentationError("empty relator; use pad_relators for trivial relations")
            extra = r.symbols() - allowed
            if extra:
                raise AlphabetError(f"relator {r} uses undeclared generators {sorted(extra)}")
        if self.padding < 0:
            raise PresentationError("negative padding")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        from .dsl import parse_presentation
        return parse_presentation(text)

    @property
    def all_relators(self) -> tuple:
        return self.relators + (Word(),) * self.padding

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def num_relators(self) -> int:
        return len(self.relators) + self.padding

    @property
    def deficiency(self) -> int:
        return self.num_generators - self.num_relators

    def check_word(self, w: Word) -> Word:
        extra = w.symbols() - set(self.generators)
        if extra:
            raise AlphabetError(f"word {w} uses unknown generators {sorted(extra)}")
        return w

    def __str__(self):
        from .dsl import format_presentation
        return format_presentation(self)


@dataclass(frozen=True)
class AbelianizationResult:
    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        for a, b in zip(t, t[1:]):
            if b % a:
                raise ValueError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def relator_matrix(P: Presentation) -> list:
    """Exponent-sum matrix: one row per (real) relator, one column per generator."""
    return [[r.exponent_sum(g) for g in P.generators] for r in P.relators]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list:
    """Nonzero diagonal of the Smith normal form, as a divisibility chain.

    Pivot choice is deterministic: smallest nonzero absolute value, ties broken
    by row-major position.
    """
    a = [list(map(int, r)) for r in matrix]
    m = len(a)
    n = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                piv = a[t][t]
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % piv), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # a remainder survived: move the smallest entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelianize(P: Presentation) -> AbelianizationResult:
    diag = smith_normal_form(relator_matrix(P)) if P.relators else []
    nonzero = [d for d in diag if d]
    return AbelianizationResult(P.num_generators - len(nonzero), tuple(d for d in nonzero if d > 1))


def abelianized_image(P: Presentation, w: Word) -> tuple:
    """Exponent-sum vector of ``w`` in generator order."""
    P.check_word(w)
    return tuple(w.exponent_sum(g) for g in P.generators)


def is_primitive_vector(v: Sequence[int]) -> bool:
    """Could ``v`` be the abelianized image of a basis element?  (entry gcd 1)"""
    return _fold(math.gcd, (abs(x) for x in v), 0) == 1


@dataclass(frozen=True)
class Epimorphism:
    """Integer value per generator of a presentation, defining a map onto Z."""

    values: tuple
    generators: tuple

    @classmethod
    def from_values(cls, P: Presentation, values: Mapping[str, int]) -> "Epimorphism":
        missing = set(P.generators) - set(values)
        if missing:
            raise PresentationError(f"no value for generators {sorted(missing)}")
        eps = cls(tuple(int(values[g]) for g in P.generators), P.generators)
        eps.check(P)
        return eps

    def check(self, P: Presentation) -> None:
        if tuple(P.generators) != self.generators:
            raise PresentationError("epimorphism was built for different generators")
        for r in P.relators:
            if self(r):
                raise PresentationError(f"relator {r} has epsilon-value {self(r)}, not 0")
        if _fold(math.gcd, (abs(v) for v in self.values), 0) != 1:
            raise PresentationError("values do not generate Z")

    def __getitem__(self, g: str) -> int:
        return self.values[self.generators.index(g)]

    def as_dict(self) -> dict:
        return dict(zip(self.generators, self.values))

    def __call__(self, w: Word) -> int:
        d = self.as_dict()
        try:
            return sum(e * d[s] for s, e in w.letters)
        except KeyError as exc:
            raise AlphabetError(f"unknown generator {exc.args[0]!r}") from None

    def to_json(self) -> dict:
        return self.as_dict()


def _rational_kernel(rows: list, n: int) -> list:
    """Basis of the rational right kernel of an integer matrix (RREF)."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis


def epimorphism_to_Z(P: Presentation) -> Epimorphism:
    """The epimorphism onto Z, unique up to sign when H_1 has free rank 1.

    Sign convention: the first generator (declaration order) with a nonzero
    value maps positively.
    """
    ab = abelianize(P)
    if ab.free_rank != 1:
        raise PresentationError(f"free rank of H_1 is {ab.free_rank}; epimorphism to Z is not unique")
    ker = _rational_kernel(relator_matrix(P), P.num_generators)
    assert len(ker) == 1
    v = ker[0]
    lcm = _fold(lambda x, y: x * y // math.gcd(x, y), (x.denominator for x in v), 1)
    ints = [int(x * lcm) for x in v]
    g = _fold(math.gcd, (abs(x) for x in ints), 0)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return Epimorphism.from_values(P, dict(zip(P.generators, ints)))


def pad_relators(P: Presentation, target: int) -> Presentation:
    """Append trivial relators until there are ``target`` of them."""
    if target <= P.num_relators:
        return P
    return Presentation(P.generators, P.relators, P.padding + target - P.num_relators)


def introduce_generator(P: Presentation, name: str, w: Word) -> Presentation:
    """Tietze move: new generator ``name`` with relator ``name^-1 * w``."""
    check_generator(name)
    if name in P.generators:
        raise PresentationError(f"generator {name!r} already exists")
    P.check_word(w)
    rel = Word.gen(name, -1) * w
    return Presentation(P.generators + (name,), P.relators + (rel,), P.padding)


def eliminate_generator(P: Presentation, g: str, r_index: int) -> Presentation:
    """Tietze move: solve relator ``r_index`` for ``g`` and substitute it away.

    The relator must contain exactly one occurrence of ``g`` or ``g^-1``.
    Relators that become trivial after substitution are dropped.
    """
    if g not in P.generators:
        raise PresentationError(f"unknown generator {g!r}")
    if not 0 <= r_index < len(P.relators):
        raise PresentationError(f"relator index {r_index} out of range")
    r = P.relators[r_index]
    pos = [i for i, (s, _) in enumerate(r.letters) if s == g]
    if len(pos) != 1:
        raise PresentationError(f"{g!r} occurs {len(pos)} times in relator {r}; need exactly once")
    i = pos[0]
    u = Word(r.letters[:i])
    v = Word(r.letters[i + 1:])
    # u g v = 1  =>  g = u^-1 v^-1 ;  u g^-1 v = 1  =>  g = v u
    value = u.inverse() * v.inverse() if r.letters[i][1] > 0 else v * u
    rels = []
    for k, other in enumerate(P.relators):
        if k == r_index:
            continue
        new = other.substitute({g: value})
        if new:
            rels.append(new)
    gens = tuple(x for x in P.generators if x != g)
    return Presentation(gens, tuple(rels), P.padding)
