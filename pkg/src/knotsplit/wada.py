"""Wada's invariant of a presented group with an epimorphism onto Z and a representation.

For ``pi = <g_1..g_k | r_1..r_l>`` (padded so ``l >= k-1``), a column ``i``
with ``eps(g_i) != 0`` and a ``k'``-dimensional representation ``alpha``::

    Q_i   = gcd of det((alpha x eps)(M_{J,{i}})) over |J| = l + 1 - k
    Delta = Q_i / det((alpha x eps)(1 - g_i))

where ``M`` is the Fox matrix.  ``Delta`` is defined up to a unit ``c*t^m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import ColumnError, ZeroInvariantError
from .foxcalc import GroupRingElement
from .freegroup import Word
from .laurent import LaurentPoly, RationalFunction, delete_submatrix, determinant, equal_up_to_unit, gcd
from .presentation import Epimorphism, Presentation, pad_relators
from .reps import Representation, evaluate_fox_matrix, tensor_eval

__all__ = [
    "WadaResult", "wada_invariant", "column_invariants", "verify_column_independence",
    "genus_lower_bound", "splitting_rank_lower_bound", "genus_bound_from_degree",
    "rank_bound_from_degree",
]


@dataclass(frozen=True)
class WadaResult:
    Q: LaurentPoly
    denom: LaurentPoly
    delta: RationalFunction
    degree: Optional[int]
    deleted_column: str
    J_count: int
    dimension: int

    @property
    def is_zero(self) -> bool:
        return self.Q.is_zero()

    def to_json(self) -> dict:
        shown = self.delta.unit_normal()
        return {
            "field": self.Q.field.to_json(),
            "Q": self.Q.to_json(),
            "Q_str": str(self.Q),
            "denom": self.denom.to_json(),
            "denom_str": str(self.denom),
            "delta": shown.to_json(),
            "delta_str": str(shown),
            "degree": self.degree,
            "deleted_column": self.deleted_column,
            "J_count": self.J_count,
            "dimension": self.dimension,
        }


def wada_invariant(P: Presentation, eps: Epimorphism, alpha: Representation,
                   column: Optional[str] = None) -> WadaResult:
    """Compute ``Delta^alpha_{P, eps}`` deleting the Fox column of ``column``.

    Pads ``P`` with trivial relators when it has fewer than ``k - 1``.  The
    default column is the first generator with nonzero ``eps``.
    """
    eps.check(P)
    k = P.num_generators
    if k == 0:
        raise ColumnError("presentation has no generators")
    P = pad_relators(P, k - 1)
    ev = eps.as_dict()
    if column is None:
        column = next((g for g in P.generators if ev[g]), None)
        if column is None:
            raise ColumnError("no generator has nonzero epsilon")
    if column not in ev:
        raise ColumnError(f"unknown generator {column!r}")
    if ev[column] == 0:
        raise ColumnError(f"cannot delete column {column!r}: its epsilon-value is 0")
    i = P.generators.index(column)
    F, dim = alpha.field, alpha.dimension
    l = P.num_relators

    E = evaluate_fox_matrix(P, eps, alpha)
    Q = LaurentPoly.zero(F)
    count = 0
    for J in combinations(range(l), l + 1 - k):
        minor = delete_submatrix(E, J, i, block=dim)
        d = determinant(minor)
        count += 1
        Q = gcd([Q, d], F)
        if Q.is_unit():
            break
    one_minus_g = GroupRingElement.one() - GroupRingElement.of(Word.gen(column))
    denom = determinant(tensor_eval(alpha, eps, one_minus_g))
    delta = RationalFunction(Q, denom)
    deg = None if Q.is_zero() else Q.degree() - denom.degree()
    return WadaResult(Q, denom, delta, deg, column, count, dim)


def column_invariants(P: Presentation, eps: Epimorphism, alpha: Representation) -> dict:
    """Wada's invariant for every admissible deleted column."""
    ev = eps.as_dict()
    return {g: wada_invariant(P, eps, alpha, g) for g in P.generators if ev[g]}


def verify_column_independence(P: Presentation, eps: Epimorphism, alpha: Representation,
                               variants: Sequence = ()) -> bool:
    """Do all column choices (and all supplied Tietze variants) agree up to units?

    ``variants`` holds ``(presentation, epimorphism, representation)`` triples
    for presentations of the same group; the representation must agree with
    ``alpha`` under the identification.
    """
    results = list(column_invariants(P, eps, alpha).values())
    for V, veps, valpha in variants:
        results.extend(column_invariants(V, veps, valpha).values())
    deltas = [r.delta for r in results]
    return all(equal_up_to_unit(deltas[0], d) for d in deltas[1:])


def genus_bound_from_degree(degree: int, k: int) -> int:
    # deg <= k(2g - 1)  =>  g >= (deg/k + 1)/2
    return max(0, math.ceil((Fraction(degree, k) + 1) / 2))


def rank_bound_from_degree(degree: int, k: int) -> int:
    # deg <= k(rank B - 1)  =>  rank B >= deg/k + 1
    return max(0, math.ceil(Fraction(degree, k) + 1))


def _nonzero(P, eps, alpha) -> WadaResult:
    res = wada_invariant(P, eps, alpha)
    if res.is_zero:
        raise ZeroInvariantError("Wada's invariant is zero; no bound is available")
    return res


def genus_lower_bound(P: Presentation, eps: Epimorphism, alpha: Representation) -> int:
    """Lower bound on the genus of a knot whose group is presented by ``P``."""
    res = _nonzero(P, eps, alpha)
    return genus_bound_from_degree(res.degree, res.dimension)


def splitting_rank_lower_bound(P: Presentation, eps: Epimorphism, alpha: Representation) -> int:
    """Lower bound on rank(B) over all splittings of ``(pi, eps)`` over ``B``."""
    res = _nonzero(P, eps, alpha)
    return rank_bound_from_degree(res.degree, res.dimension)
