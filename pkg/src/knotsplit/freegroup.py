"""Reduced words in free groups and Stallings foldings.

A :class:`Word` is a freely reduced tuple of ``(symbol, +1 | -1)`` letters; the
empty word is the identity.  Words do not remember an alphabet: alphabet checks
happen wherever one is declared (:class:`FreeGroup`, presentations, the parser).

Finitely generated subgroups are represented by folded core graphs
(:class:`SubgroupGraph`).  The graph is relabelled canonically after folding,
so two generating sets give equal graphs exactly when they generate the same
subgroup.
"""

from __future__ import annotations

import re
from collections import deque
from itertools import groupby
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import AlphabetError

__all__ = [
    "GENERATOR_RE", "Word", "FreeGroup", "reduce", "concat", "invert",
    "cyclic_reduce", "cyclically_equivalent", "SubgroupGraph", "stallings_fold",
    "rank", "contains", "is_basis", "free_hom_injective", "index",
]

# Plain identifiers, optionally level-tagged (``a@2``, ``b@-1``) as produced
# by the amalgam constructions.
GENERATOR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*(@-?[0-9]+)?\Z")


def check_generator(symbol: str) -> str:
    if not isinstance(symbol, str) or not GENERATOR_RE.match(symbol):
        raise AlphabetError(f"invalid generator name {symbol!r}")
    return symbol


def _free_reduce(letters: Iterable) -> tuple:
    out: list = []
    for s, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {e!r}")
        if out and out[-1][0] == s and out[-1][1] == -e:
            out.pop()
        else:
            out.append((s, e))
    return tuple(out)


@dataclass(frozen=True, order=True)
class Word:
    """Freely reduced word; construction always reduces."""

    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @classmethod
    def _reduced(cls, letters: tuple) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def gen(cls, symbol: str, exp: int = 1) -> "Word":
        """``symbol ** exp`` for any integer exponent."""
        e = 1 if exp > 0 else -1
        return cls._reduced(((symbol, e),) * abs(exp))

    @classmethod
    def from_string(cls, text: str) -> "Word":
        from .dsl import parse_word
        return parse_word(text)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        a, b = self.letters, other.letters
        i = 0
        n = min(len(a), len(b))
        while i < n and a[-1 - i][0] == b[i][0] and a[-1 - i][1] == -b[i][1]:
            i += 1
        return Word._reduced(a[:len(a) - i] + b[i:])

    def inverse(self) -> "Word":
        return Word._reduced(tuple((s, -e) for s, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        out = Word()
        for _ in range(abs(n)):
            out = out * base
        return out

    def symbols(self) -> set:
        return {s for s, _ in self.letters}

    def exponent_sum(self, symbol: str) -> int:
        return sum(e for s, e in self.letters if s == symbol)

    def relabel(self, mapping) -> "Word":
        """Rename symbols via a dict or callable."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return Word(tuple((f(s), e) for s, e in self.letters))

    def substitute(self, images: dict) -> "Word":
        """Apply the homomorphism sending each symbol in ``images`` to a word."""
        out = Word()
        for s, e in self.letters:
            img = images.get(s)
            if img is None:
                img = Word._reduced(((s, 1),))
            out = out * (img if e > 0 else img.inverse())
        return out

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        for s, group in groupby(self.letters):
            n = len(list(group)) * s[1]
            parts.append(s[0] if n == 1 else f"{s[0]}^{n}")
        return " ".join(parts)

    def __repr__(self):
        return f"Word({str(self)!r})"


def reduce(letters: Iterable, alphabet: Optional[Sequence[str]] = None) -> Word:
    """Freely reduce a raw letter sequence, optionally validating symbols."""
    letters = tuple((s, e) for s, e in letters)
    if alphabet is not None:
        allowed = set(alphabet)
        for s, _ in letters:
            if s not in allowed:
                raise AlphabetError(f"unknown generator {s!r}")
    return Word(letters)


def concat(u: Word, v: Word) -> Word:
    return u * v


def invert(u: Word) -> Word:
    return u.inverse()


def cyclic_reduce(w: Word) -> Word:
    a = w.letters
    i, j = 0, len(a) - 1
    while i < j and a[i][0] == a[j][0] and a[i][1] == -a[j][1]:
        i += 1
        j -= 1
    return Word._reduced(a[i:j + 1])


def cyclically_equivalent(u: Word, v: Word, allow_inverse: bool = True) -> bool:
    """Do ``u`` and ``v`` define the same relator (up to conjugation, optionally inversion)?"""
    cu, cv = cyclic_reduce(u).letters, cyclic_reduce(v).letters
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    candidates = [cv]
    if allow_inverse:
        candidates.append(cyclic_reduce(v.inverse()).letters)
    doubled = cu + cu
    for c in candidates:
        for k in range(len(cu)):
            if doubled[k:k + len(cu)] == c:
                return True
    return False


class FreeGroup:
    """A free group on a declared alphabet; validates words against it."""

    def __init__(self, generators: Sequence[str]):
        gens = tuple(check_generator(g) for g in generators)
        if len(set(gens)) != len(gens):
            raise AlphabetError("duplicate generator")
        self.generators = gens

    def __repr__(self):
        return f"FreeGroup({', '.join(self.generators)})"

    def __eq__(self, other):
        return isinstance(other, FreeGroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def check(self, w: Word) -> Word:
        extra = w.symbols() - set(self.generators)
        if extra:
            raise AlphabetError(f"word {w} uses generators {sorted(extra)} outside {self!r}")
        return w

    def reduce(self, letters) -> Word:
        return reduce(letters, self.generators)

    def word(self, text: str) -> Word:
        return self.check(Word.from_string(text))

    def concat(self, u: Word, v: Word) -> Word:
        return self.check(u) * self.check(v)

    def invert(self, u: Word) -> Word:
        return self.check(u).inverse()

    def gens(self) -> list:
        return [Word.gen(g) for g in self.generators]


# ---------------------------------------------------------------------------
# Stallings foldings


@dataclass(frozen=True)
class SubgroupGraph:
    """Folded core graph with basepoint 0; vertices are ``0..num_vertices-1``.

    ``edges`` holds ``(source, label, target)`` triples in sorted order.
    """

    num_vertices: int
    edges: tuple
    basepoint: int = 0
    _out: dict = field(default=None, compare=False, repr=False, hash=False)
    _in: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        out, inn = {}, {}
        for u, lab, v in self.edges:
            out[(u, lab)] = v
            inn[(v, lab)] = u
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inn)

    def step(self, v: int, symbol: str, exp: int) -> Optional[int]:
        return self._out.get((v, symbol)) if exp > 0 else self._in.get((v, symbol))

    def labels(self) -> set:
        return {lab for _, lab, _ in self.edges}

    def rank(self) -> int:
        return len(self.edges) - self.num_vertices + 1

    def spanning_tree(self):
        """BFS tree from the basepoint.

        Returns ``(path, tree_edges)`` where ``path[v]`` is the tree word from
        the basepoint to ``v``.  Neighbours are explored in label order,
        outgoing before incoming, then by vertex id.
        """
        path = {self.basepoint: Word()}
        tree = set()
        queue = deque([self.basepoint])
        adj = self._adjacency()
        while queue:
            v = queue.popleft()
            for lab, exp, w, edge in adj[v]:
                if w not in path:
                    path[w] = path[v] * Word._reduced(((lab, exp),))
                    tree.add(edge)
                    queue.append(w)
        return path, tree

    def _adjacency(self):
        adj = {v: [] for v in range(self.num_vertices)}
        for e in self.edges:
            u, lab, v = e
            adj[u].append((lab, 1, v, e))
            adj[v].append((lab, -1, u, e))
        for v in adj:
            adj[v].sort(key=lambda x: (x[0], -x[1], x[2]))
        return adj

    def basis(self) -> list:
        """Free basis read off the non-tree edges, in edge order."""
        path, tree = self.spanning_tree()
        out = []
        for e in self.edges:
            if e in tree:
                continue
            u, lab, v = e
            out.append(path[u] * Word._reduced(((lab, 1),)) * path[v].inverse())
        return out

    def to_json(self) -> dict:
        return {
            "vertices": list(range(self.num_vertices)),
            "basepoint": self.basepoint,
            "edges": [{"from": u, "to": v, "label": lab} for u, lab, v in self.edges],
        }

    @classmethod
    def from_json(cls, data) -> "SubgroupGraph":
        edges = tuple(sorted((e["from"], e["label"], e["to"]) for e in data["edges"]))
        return cls(len(data["vertices"]), edges, data.get("basepoint", 0))


def _canonical(vertices: set, edges: set, base: int) -> SubgroupGraph:
    adj: dict = {v: [] for v in vertices}
    for u, lab, v in edges:
        adj[u].append((lab, 0, v))
        adj[v].append((lab, 1, u))
    for v in adj:
        adj[v].sort()
    # folded graphs are deterministic in both directions, so BFS along
    # (label, direction) yields a canonical numbering
    num = {base: 0}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for _, _, w in adj[v]:
            if w not in num:
                num[w] = len(num)
                queue.append(w)
    new_edges = tuple(sorted((num[u], lab, num[v]) for u, lab, v in edges))
    return SubgroupGraph(len(num), new_edges, 0)


def stallings_fold(gens: Iterable[Word]) -> SubgroupGraph:
    """Folded core graph of the subgroup generated by ``gens``."""
    edges = set()
    nverts = 1
    for w in gens:
        if not w:
            continue
        prev = 0
        n = len(w)
        for i, (s, e) in enumerate(w.letters):
            if i == n - 1:
                nxt = 0
            else:
                nxt = nverts
                nverts += 1
            edges.add((prev, s, nxt) if e > 0 else (nxt, s, prev))
            prev = nxt

    parent = list(range(nverts))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    while True:
        edges = {(find(u), lab, find(v)) for u, lab, v in edges}
        out, inn = {}, {}
        merged = False
        for u, lab, v in sorted(edges):
            for table, key, other in ((out, (u, lab), v), (inn, (v, lab), u)):
                seen = table.get(key)
                if seen is None:
                    table[key] = other
                else:
                    a, b = find(seen), find(other)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
                        merged = True
        if not merged:
            break

    base = find(0)
    vertices = {find(v) for v in range(nverts)}
    # trim hanging trees (every non-base vertex must have degree >= 2)
    while True:
        deg = {v: 0 for v in vertices}
        for u, _, v in edges:
            deg[u] += 1
            deg[v] += 1
        dead = {v for v, d in deg.items() if d <= 1 and v != base}
        if not dead:
            break
        vertices -= dead
        edges = {e for e in edges if e[0] not in dead and e[2] not in dead}
    return _canonical(vertices, edges, base)


def rank(g: SubgroupGraph) -> int:
    """Free rank of the subgroup: ``E - V + 1`` on the folded core."""
    return g.rank()


def _trace(g: SubgroupGraph, w: Word):
    v = g.basepoint
    walk = []
    for s, e in w.letters:
        nxt = g.step(v, s, e)
        if nxt is None:
            return None
        walk.append((v, s, e, nxt))
        v = nxt
    return walk if v == g.basepoint else None


def contains(g: SubgroupGraph, w: Word, rewrite: bool = False):
    """Membership of ``w`` in the subgroup.

    With ``rewrite=True`` returns ``(member, expression)`` where ``expression``
    is a tuple of ``(basis_index, +1 | -1)`` pairs spelling ``w`` in
    :meth:`SubgroupGraph.basis`, or ``None`` when ``w`` is not a member.
    """
    walk = _trace(g, w)
    if not rewrite:
        return walk is not None
    if walk is None:
        return False, None
    _, tree = g.spanning_tree()
    idx = {e: i for i, e in enumerate(x for x in g.edges if x not in tree)}
    expr = []
    for u, s, e, v in walk:
        edge = (u, s, v) if e > 0 else (v, s, u)
        if edge in idx:
            expr.append((idx[edge], e))
    return True, tuple(expr)


def index(g: SubgroupGraph, alphabet: Sequence[str]) -> Optional[int]:
    """Index in the free group on ``alphabet``; ``None`` when infinite.

    The index is finite exactly when the core graph is a covering, i.e. every
    vertex has one incoming and one outgoing edge of every label.
    """
    for v in range(g.num_vertices):
        for a in alphabet:
            if g.step(v, a, 1) is None or g.step(v, a, -1) is None:
                return None
    return g.num_vertices


def is_basis(gens: Sequence[Word]) -> bool:
    """Do ``gens`` freely generate the subgroup they generate?

    Free groups of finite rank are Hopfian, so this holds iff the rank of the
    generated subgroup equals ``len(gens)``.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("is_basis needs a nonempty list")
    return stallings_fold(gens).rank() == len(gens)


def free_hom_injective(domain_gens: Sequence[Word], images: Sequence[Word]) -> bool:
    """Is the map ``domain_gens[i] -> images[i]`` an injective homomorphism?

    The domain must be a free basis of the subgroup it generates.  The induced
    map onto the subgroup generated by the images is surjective, and a
    surjection between free groups of the same finite rank is an isomorphism.
    """
    domain_gens, images = list(domain_gens), list(images)
    if len(domain_gens) != len(images):
        raise ValueError(f"{len(domain_gens)} domain generators but {len(images)} images")
    if not domain_gens:
        return True
    if not is_basis(domain_gens):
        raise ValueError("domain generators are not a free basis")
    return stallings_fold(images).rank() == len(images)
