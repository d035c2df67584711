"""Matrix representations of presented groups over exact fields.

Matrices are plain tuples of row tuples with entries in an
:class:`~knotsplit.laurent.ExactField`.  The homomorphism search enumerates
GL(d, F_p) once, builds its multiplication table with numpy, and then checks
relators on whole blocks of candidate tuples at a time.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import AlphabetError, BudgetExceeded
from .foxcalc import GroupRingElement
from .freegroup import Word
from .laurent import ExactField, GF, LaurentPoly, PolyMatrix, QQ
from .presentation import Epimorphism, Presentation

__all__ = [
    "Representation", "verify", "trivial_rep", "tensor_eval", "evaluate_fox_matrix",
    "search_homs", "gl_elements", "mat_mul", "mat_inv", "mat_det", "mat_identity",
]


# -- small dense matrices over a field ---------------------------------------

def mat_identity(n: int, F: ExactField) -> tuple:
    return tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n))


def mat_mul(A, B, F: ExactField) -> tuple:
    p = F.p
    n, m = len(A), len(B[0]) if B else 0
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            s = 0
            for k, a in enumerate(Ai):
                if a:
                    s += a * B[k][j]
            row.append(s % p if p is not None else s)
        out.append(tuple(row))
    return tuple(out)


def _gauss(A, F: ExactField, want_inverse: bool):
    n = len(A)
    p = F.p
    a = [list(r) + ([F.one if i == j else F.zero for j in range(n)] if want_inverse else []) for i, r in enumerate(A)]
    det = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return F.zero, None
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        pv = a[c][c]
        det = det * pv
        inv = F.inv(pv)
        a[c] = [x * inv for x in a[c]]
        if p is not None:
            a[c] = [x % p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
                if p is not None:
                    a[r] = [x % p for x in a[r]]
    det = F(det)
    if not want_inverse:
        return det, None
    return det, tuple(tuple(F(x) for x in r[n:]) for r in a)


def mat_det(A, F: ExactField):
    return _gauss(A, F, False)[0]


def mat_inv(A, F: ExactField) -> tuple:
    det, inv = _gauss(A, F, True)
    if not det:
        raise ZeroDivisionError("singular matrix")
    return inv


# -- representations -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Representation:
    """Invertible ``dimension x dimension`` image matrix for each generator."""

    dimension: int
    field: ExactField
    images: Mapping[str, tuple]
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        F = self.field
        k = self.dimension
        if k < 1:
            raise ValueError("dimension must be positive")
        imgs = {}
        for g, M in self.images.items():
            M = tuple(tuple(F(x) for x in row) for row in M)
            if len(M) != k or any(len(r) != k for r in M):
                raise ValueError(f"image of {g} is not {k}x{k}")
            if not mat_det(M, F):
                raise ValueError(f"image of {g} is singular over {F}")
            imgs[g] = M
        object.__setattr__(self, "images", imgs)

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.dimension == other.dimension
                and self.field == other.field and self.images == other.images)

    def __hash__(self):
        return hash((self.dimension, self.field, tuple(sorted(self.images.items()))))

    def letter(self, g: str, e: int) -> tuple:
        key = (g, e)
        M = self._cache.get(key)
        if M is None:
            try:
                M = self.images[g]
            except KeyError:
                raise AlphabetError(f"representation has no image for {g!r}") from None
            if e < 0:
                M = mat_inv(M, self.field)
            self._cache[key] = M
        return M

    def image(self, w: Word) -> tuple:
        M = mat_identity(self.dimension, self.field)
        for g, e in w.letters:
            M = mat_mul(M, self.letter(g, e), self.field)
        return M

    def is_abelian(self) -> bool:
        gens = list(self.images.values())
        F = self.field
        return all(mat_mul(A, B, F) == mat_mul(B, A, F) for A, B in itertools.combinations(gens, 2))

    def to_json(self) -> dict:
        F = self.field

        def enc(x):
            return int(x) if F.p is not None else F.fmt(x)

        return {
            "dimension": self.dimension,
            "field": F.to_json(),
            "images": {g: [[enc(x) for x in r] for r in M] for g, M in self.images.items()},
        }

    @classmethod
    def from_json(cls, data) -> "Representation":
        F = ExactField.from_json(data.get("field", {"kind": "Q"}))
        images = {g: [[F(str(x)) for x in r] for r in M] for g, M in data["images"].items()}
        return cls(int(data["dimension"]), F, images)


def verify(P: Presentation, r: Representation) -> bool:
    """True iff every relator of ``P`` maps to the identity."""
    missing = set(P.generators) - set(r.images)
    if missing:
        raise AlphabetError(f"no image for generators {sorted(missing)}")
    ident = mat_identity(r.dimension, r.field)
    return all(r.image(rel) == ident for rel in P.relators)


def trivial_rep(P: Presentation, field: ExactField = QQ) -> Representation:
    return Representation(1, field, {g: ((1,),) for g in P.generators})


def tensor_eval(r: Representation, eps: Epimorphism, x: GroupRingElement) -> PolyMatrix:
    """``sum_w coeff(w) * t^eps(w) * alpha(w)`` as a ``k x k`` matrix over F[t^+-1]."""
    F, k = r.field, r.dimension
    acc = [[{} for _ in range(k)] for _ in range(k)]
    for w, c in x.items():
        e = eps(w)
        M = r.image(w)
        for i in range(k):
            for j in range(k):
                if M[i][j]:
                    d = acc[i][j]
                    d[e] = d.get(e, 0) + c * M[i][j]
    return PolyMatrix(F, [[LaurentPoly(F, acc[i][j]) for j in range(k)] for i in range(k)], k)


def evaluate_fox_matrix(P: Presentation, eps: Epimorphism, r: Representation) -> PolyMatrix:
    """Fox matrix of ``P`` under ``alpha (x) eps``, laid out in ``k x k`` blocks.

    Walks each relator once, carrying the image of the running prefix, so it
    never materialises the group-ring derivatives.  Agrees entrywise with
    :func:`tensor_eval` applied to :func:`~knotsplit.foxcalc.fox_jacobian`.
    """
    F, k = r.field, r.dimension
    p = F.p
    col = {g: j for j, g in enumerate(P.generators)}
    ev = eps.as_dict()
    nrows, ncols = P.num_relators * k, P.num_generators * k
    acc = [[{} for _ in range(ncols)] for _ in range(nrows)]

    def add(bi, bj, e, M, sign):
        for i in range(k):
            row = acc[bi * k + i]
            for j in range(k):
                v = M[i][j]
                if v:
                    d = row[bj * k + j]
                    d[e] = d.get(e, 0) + sign * v

    ident = mat_identity(k, F)
    for bi, rel in enumerate(P.all_relators):
        pre, s = ident, 0
        for g, e in rel.letters:
            if e > 0:
                add(bi, col[g], s, pre, 1)
                pre = mat_mul(pre, r.letter(g, 1), F)
                s += ev[g]
            else:
                pre = mat_mul(pre, r.letter(g, -1), F)
                s -= ev[g]
                add(bi, col[g], s, pre, -1)
    if p is None:
        rows = [[LaurentPoly(F, d) for d in row] for row in acc]
    else:
        rows = [[LaurentPoly._raw(F, {e: c % p for e, c in d.items() if c % p}) for d in row] for row in acc]
    return PolyMatrix(F, rows, ncols)


# -- brute-force homomorphism search ---------------------------------------

_GL_CACHE: dict = {}
_MAX_GROUP = 2000


class _GLTable:
    """GL(d, F_p) in lexicographic order of row-major entries, with tables."""

    def __init__(self, d: int, p: int):
        F = GF(p)
        mats = []
        for entries in itertools.product(range(p), repeat=d * d):
            M = tuple(tuple(entries[i * d:(i + 1) * d]) for i in range(d))
            if mat_det(M, F):
                mats.append(M)
        if len(mats) > _MAX_GROUP:
            raise BudgetExceeded(f"|GL({d},{p})| = {len(mats)} is too large to tabulate")
        self.d, self.p, self.mats = d, p, mats
        arr = np.array(mats, dtype=np.int64).reshape(len(mats), d, d)
        weights = p ** np.arange(d * d - 1, -1, -1, dtype=np.int64)
        lookup = np.full(p ** (d * d), -1, dtype=np.int64)
        lookup[arr.reshape(len(mats), -1) @ weights] = np.arange(len(mats))
        prod = np.einsum("aij,bjk->abik", arr, arr) % p
        self.mul = lookup[prod.reshape(len(mats), len(mats), -1) @ weights]
        ident = np.eye(d, dtype=np.int64).reshape(-1) @ weights
        self.identity = int(lookup[ident])
        self.inv = np.argmax(self.mul == self.identity, axis=1)
        self.mul_list = self.mul.tolist()
        self.inv_list = self.inv.tolist()

    def __len__(self):
        return len(self.mats)

    def conjugacy_classes(self) -> list:
        seen = set()
        classes = []
        for x in range(len(self.mats)):
            if x in seen:
                continue
            cls = sorted({self.mul_list[self.mul_list[g][x]][self.inv_list[g]] for g in range(len(self.mats))})
            seen.update(cls)
            classes.append(cls)
        return classes


def _gl(d: int, p: int) -> _GLTable:
    key = (d, p)
    if key not in _GL_CACHE:
        _GL_CACHE[key] = _GLTable(d, p)
    return _GL_CACHE[key]


def gl_elements(d: int, p: int) -> list:
    """All of GL(d, F_p), lexicographically ordered by row-major entries."""
    return list(_gl(d, p).mats)


_CHUNK = 1 << 17


def _search(table: _GLTable, rels: list, cands: list, limit: Optional[int], first_slice=None) -> list:
    if first_slice is not None:
        cands = [first_slice] + list(cands[1:])
    n = len(cands)
    mul, inv, ident = table.mul, table.inv, table.identity
    mul_l, inv_l = table.mul_list, table.inv_list
    # vectorise over as many trailing generators as fit in one block
    m, size = 0, 1
    while m < n and size * len(cands[n - 1 - m]) <= _CHUNK:
        size *= len(cands[n - 1 - m])
        m += 1
    lead = n - m
    if m:
        grids = np.meshgrid(*[np.asarray(c, dtype=np.int64) for c in cands[lead:]], indexing="ij")
        grid = [g.reshape(-1) for g in grids]
        grid_inv = [inv[g] for g in grid]
    else:
        grid, grid_inv = [], []
    flat = mul.reshape(-1)
    N = len(table)
    early = [[] for _ in range(lead)]
    late = []
    for rel in rels:
        top = max(g for g, _ in rel)
        (early[top] if top < lead else late).append(rel)

    found: list = []
    assign = [0] * lead

    def scalar_ok(rel):
        acc = ident
        for g, s in rel:
            x = assign[g]
            acc = mul_l[acc][x if s > 0 else inv_l[x]]
        return acc == ident

    def leaf():
        if not grid:
            found.append(tuple(assign))
            return
        # survivors of the relators checked so far, as indices into the grid
        idx = None
        for rel in late:
            acc = ident
            for g, s in rel:
                if g < lead:
                    x = assign[g] if s > 0 else inv_l[assign[g]]
                    acc = mul_l[acc][x] if type(acc) is int else flat[acc * N + x]
                else:
                    x = (grid if s > 0 else grid_inv)[g - lead]
                    if idx is not None:
                        x = x[idx]
                    acc = mul[acc][x] if type(acc) is int else flat[acc * N + x]
            ok = np.flatnonzero(acc == ident)
            idx = ok if idx is None else idx[ok]
            if not len(idx):
                return
        hits = range(len(grid[0])) if idx is None else idx.tolist()
        head = tuple(assign)
        for h in hits:
            found.append(head + tuple(int(g[h]) for g in grid))
            if limit is not None and len(found) >= limit:
                return

    def dfs(i):
        if limit is not None and len(found) >= limit:
            return
        if i == lead:
            leaf()
            return
        for x in cands[i]:
            assign[i] = x
            if all(scalar_ok(rel) for rel in early[i]):
                dfs(i + 1)
                if limit is not None and len(found) >= limit:
                    return

    dfs(0)
    return found


def search_homs(P: Presentation, dimension: int, p: int, limit: Optional[int] = None,
                budget: int = 10 ** 7, workers: int = 1, conjugate_generators: bool = False) -> list:
    """Homomorphisms from ``P`` to GL(dimension, F_p), as representations.

    Results are ordered lexicographically by the tuple of generator images
    (each image ordered by its row-major entries).  Without ``limit`` the
    candidate space ``|GL|^generators`` must not exceed ``budget``.

    ``conjugate_generators=True`` restricts all images to a single conjugacy
    class at a time and groups the results by class.  For a Wirtinger
    presentation (all generators conjugate) nothing is lost; for any other
    presentation the search is incomplete.  ``workers`` changes speed only,
    never the output.
    """
    F = GF(p)
    table = _gl(dimension, p)
    n = P.num_generators
    N = len(table)
    if limit is None and N ** n > budget:
        raise BudgetExceeded(f"{N}^{n} candidate tuples exceed the budget {budget}; pass a limit")
    if limit is not None and limit <= 0:
        return []
    col = {g: i for i, g in enumerate(P.generators)}
    rels = [[(col[g], e) for g, e in r.letters] for r in P.relators]

    if n == 0:
        return [Representation(dimension, F, {})]

    if conjugate_generators:
        spaces = [[c] * n for c in table.conjugacy_classes()]
    else:
        spaces = [[list(range(N))] * n]

    found: list = []
    for cands in spaces:
        remaining = None if limit is None else limit - len(found)
        if workers > 1 and len(cands[0]) > 1:
            first = cands[0]
            step = -(-len(first) // workers)
            slices = [first[i:i + step] for i in range(0, len(first), step)]
            with ThreadPoolExecutor(max_workers=workers) as ex:
                parts = list(ex.map(lambda s: _search(table, rels, cands, remaining, s), slices))
            got = [x for part in parts for x in part]
        else:
            got = _search(table, rels, cands, remaining)
        found.extend(got if remaining is None else got[:remaining])
        if limit is not None and len(found) >= limit:
            break

    gens = P.generators
    out = []
    for tup in found:
        r = Representation(dimension, F, {g: table.mats[i] for g, i in zip(gens, tup)})
        for g, i in zip(gens, tup):
            r._cache[(g, -1)] = table.mats[table.inv_list[i]]
        out.append(r)
    return out
