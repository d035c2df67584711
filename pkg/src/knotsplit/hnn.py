"""HNN splittings ``<A, t | phi(x) = t x t^-1, x in B>`` as explicit data.

Amalgams ``A_[n,m]`` use level-tagged generator names: ``g@i`` stands for
``t^i g t^-i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .errors import InvariantViolation, PresentationError
from .freegroup import Word, check_generator, free_hom_injective, is_basis
from .presentation import Epimorphism, Presentation
from .reps import Representation, evaluate_fox_matrix
from .laurent import LaurentPoly, PolyMatrix, delete_submatrix
from .wada import wada_invariant

__all__ = [
    "SplittingData", "hnn_presentation", "amalgam_presentation", "induced_splitting",
    "shift_levels", "level", "BlockStructureReport", "verify_fox_block_structure",
    "DegreeBoundReport", "degree_bound_check",
]

_LEVEL = re.compile(r"(.*)@(-?[0-9]+)\Z")


def level(g: str, i: int) -> str:
    """Copy of generator ``g`` at level ``i``."""
    m = _LEVEL.match(g)
    if m:
        raise PresentationError(f"{g!r} already carries a level tag")
    return f"{g}@{i}"


def _at(w: Word, i: int) -> Word:
    return w.relabel(lambda s: level(s, i))


@dataclass(frozen=True)
class SplittingData:
    """``(A, B, t, phi)``: base presentation, generators of ``B``, their images, stable letter.

    When ``A`` has no relators it is free, and the data is checked: ``b_gens``
    must be a free basis and ``phi`` injective.  Otherwise injectivity cannot
    be decided here and :attr:`monomorphism_verified` is ``False``.
    """

    base: Presentation
    b_gens: tuple
    phi_images: tuple
    stable: str = "t"
    monomorphism_verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        b = tuple(self.b_gens)
        im = tuple(self.phi_images)
        if len(b) != len(im):
            raise PresentationError(f"{len(b)} generators of B but {len(im)} images")
        for w in b + im:
            self.base.check_word(w)
        check_generator(self.stable)
        object.__setattr__(self, "b_gens", b)
        object.__setattr__(self, "phi_images", im)
        verified = False
        if not self.base.relators:
            if b and not is_basis(b):
                raise PresentationError("generators of B are not a free basis")
            if not free_hom_injective(b, im):
                raise PresentationError("phi is not injective")
            verified = True
        object.__setattr__(self, "monomorphism_verified", verified)

    @property
    def d(self) -> int:
        return len(self.b_gens)

    def to_json(self) -> dict:
        return {
            "base": str(self.base),
            "b_gens": [str(w) for w in self.b_gens],
            "phi_images": [str(w) for w in self.phi_images],
            "stable": self.stable,
        }

    @classmethod
    def from_json(cls, data) -> "SplittingData":
        from .dsl import parse_presentation, parse_word
        base = parse_presentation(data["base"])
        return cls(base, tuple(parse_word(w) for w in data["b_gens"]),
                   tuple(parse_word(w) for w in data["phi_images"]), data.get("stable", "t"))


@lru_cache(maxsize=512)
def hnn_presentation(S: SplittingData):
    """``(presentation, epsilon)`` with relators ``phi(x)^-1 t x t^-1`` after A's relators."""
    t = S.stable
    if t in S.base.generators:
        raise PresentationError(f"stable letter {t!r} collides with a base generator")
    tw = Word.gen(t)
    rels = list(S.base.relators)
    for x, y in zip(S.b_gens, S.phi_images):
        rels.append(y.inverse() * tw * x * tw.inverse())
    P = Presentation(S.base.generators + (t,), tuple(rels))
    eps = Epimorphism.from_values(P, {g: (1 if g == t else 0) for g in P.generators})
    return P, eps


def amalgam_presentation(S: SplittingData, n: int, m: int) -> Presentation:
    """``A_[n,m]``: copies of ``A`` at levels ``n..m`` glued by ``phi(x)@j = x@(j+1)``."""
    if n > m:
        raise ValueError(f"empty level range [{n}, {m}]")
    A = S.base
    gens = tuple(level(g, i) for i in range(n, m + 1) for g in A.generators)
    rels = [_at(r, i) for i in range(n, m + 1) for r in A.relators]
    for j in range(n, m):
        for x, y in zip(S.b_gens, S.phi_images):
            rels.append(_at(y, j).inverse() * _at(x, j + 1))
    return Presentation(gens, tuple(rels))


def shift_levels(P: Presentation, k: int) -> Presentation:
    """Relabel every ``g@i`` as ``g@(i+k)``; e.g. ``A_[-k,k]`` to ``A_[0,2k]``."""

    def move(s):
        mt = _LEVEL.match(s)
        if not mt:
            raise PresentationError(f"generator {s!r} has no level tag")
        return f"{mt.group(1)}@{int(mt.group(2)) + k}"

    return Presentation(tuple(move(g) for g in P.generators),
                        tuple(r.relabel(move) for r in P.relators), P.padding)


def induced_splitting(S: SplittingData, n: int) -> SplittingData:
    """Splitting of the same group with base ``A_[0,n+1]`` over ``A_[0,n]``.

    The monomorphism ``A_[0,n] -> A_[1,n+1]`` is conjugation by ``t``, i.e.
    ``g@i -> g@(i+1)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    base = amalgam_presentation(S, 0, n + 1)
    lower = [g for i in range(0, n + 1) for g in S.base.generators]
    levels = [i for i in range(0, n + 1) for _ in S.base.generators]
    b = tuple(Word.gen(level(g, i)) for g, i in zip(lower, levels))
    im = tuple(Word.gen(level(g, i + 1)) for g, i in zip(lower, levels))
    return SplittingData(base, b, im, S.stable)


@dataclass(frozen=True)
class BlockStructureReport:
    """Evidence that the Fox matrix minus the stable column is ``P + t*Q``."""

    base_rows: tuple
    splitting_rows: tuple
    base_support: frozenset
    splitting_support: frozenset
    P: PolyMatrix
    Q: PolyMatrix

    def to_json(self) -> dict:
        return {
            "base_rows": list(self.base_rows),
            "splitting_rows": list(self.splitting_rows),
            "base_support": sorted(self.base_support),
            "splitting_support": sorted(self.splitting_support),
            "passed": True,
        }


def verify_fox_block_structure(S: SplittingData, alpha: Representation) -> BlockStructureReport:
    """Check the t-support pattern of the evaluated Fox matrix of an HNN presentation.

    Rows from A's relators carry only ``t^0``; rows from splitting relators
    carry only ``t^0`` and ``t^1``.  Raises :class:`InvariantViolation` if not.
    """
    P, eps = hnn_presentation(S)
    k = alpha.dimension
    E = evaluate_fox_matrix(P, eps, alpha)
    M = delete_submatrix(E, (), P.generators.index(S.stable), block=k)
    nb = len(S.base.relators)
    base_rows = tuple(range(nb * k))
    split_rows = tuple(range(nb * k, M.nrows))
    bs = M.t_support(base_rows)
    ss = M.t_support(split_rows)
    if not bs <= {0}:
        raise InvariantViolation(f"base relator rows carry t-exponents {sorted(bs)}")
    if not ss <= {0, 1}:
        raise InvariantViolation(f"splitting relator rows carry t-exponents {sorted(ss)}")
    Pm, Qm = M.coefficient(0), M.coefficient(1)
    if Pm + Qm.scale(LaurentPoly.t(M.field)) != M:
        raise InvariantViolation("matrix is not P + tQ")
    if any(not a.is_zero() for i in base_rows for a in Qm.rows[i]):
        raise InvariantViolation("Q has nonzero rows outside the splitting relators")
    return BlockStructureReport(base_rows, split_rows, bs, ss, Pm, Qm)


@dataclass(frozen=True)
class DegreeBoundReport:
    degree: Optional[int]
    bound: int
    slack: Optional[int]
    vacuous: bool

    def to_json(self) -> dict:
        return {"degree": self.degree, "bound": self.bound, "slack": self.slack,
                "vacuous": self.vacuous, "passed": True}


def degree_bound_check(S: SplittingData, alpha: Representation) -> DegreeBoundReport:
    """``deg Delta <= k * (d - 1)`` for the HNN presentation, ``d = len(b_gens)``."""
    P, eps = hnn_presentation(S)
    res = wada_invariant(P, eps, alpha, S.stable)
    bound = alpha.dimension * (S.d - 1)
    if res.is_zero:
        return DegreeBoundReport(None, bound, None, True)
    if res.degree > bound:
        raise InvariantViolation(f"degree {res.degree} exceeds k(d-1) = {bound}")
    return DegreeBoundReport(res.degree, bound, bound - res.degree, False)
