"""Exact Laurent polynomials in one variable ``t`` over Q or F_p.

Everything here is exact.  Degree and gcd are discontinuous functions of the
coefficients, so floating point is never used.  Coefficients over Q are
:class:`fractions.Fraction`; over F_p they are canonical residues ``0..p-1``.

Units of ``F[t, t^-1]`` are the monomials ``c*t^k``; most normal forms in this
module are taken modulo that unit group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Optional, Sequence, Union

__all__ = [
    "ExactField", "QQ", "GF", "LaurentPoly", "RationalFunction", "PolyMatrix",
    "degree", "gcd", "determinant", "delete_submatrix", "equal_up_to_unit",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ExactField:
    """Q when ``p`` is None, otherwise the prime field F_p."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def kind(self) -> str:
        return "Q" if self.p is None else "Fp"

    def __call__(self, x):
        """Coerce an int, Fraction or numeric string into the field."""
        tx = type(x)
        if tx is int:
            return Fraction(x) if self.p is None else x % self.p
        if tx is Fraction and self.p is None:
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if self.p is None:
            return x if type(x) is Fraction else Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} is not defined in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def fmt(self, x) -> str:
        if self.p is None:
            return str(Fraction(x))
        return str(int(x) % self.p)

    def to_json(self) -> dict:
        return {"kind": "Q"} if self.p is None else {"kind": "Fp", "p": self.p}

    @classmethod
    def from_json(cls, data) -> "ExactField":
        if data.get("kind", "Q") == "Q":
            return cls()
        return cls(int(data["p"]))

    @classmethod
    def from_spec(cls, text: str) -> "ExactField":
        """Parse ``q`` / ``Q`` or ``fp:P``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls()
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:P'")

    def __str__(self):
        return "Q" if self.p is None else f"F_{self.p}"


QQ = ExactField()


def GF(p: int) -> ExactField:
    return ExactField(p)


Scalar = Union[int, Fraction]


class LaurentPoly:
    """Immutable Laurent polynomial ``sum c_e t^e`` with no zero coefficients stored."""

    __slots__ = ("field", "_terms", "_hash")

    def __init__(self, field: ExactField, terms: Union[Mapping[int, Scalar], Iterable] = ()):
        acc: dict = {}
        items = terms.items() if hasattr(terms, "items") else terms
        p = field.p
        for e, c in items:
            if type(c) is not int:
                c = field(c)
            acc[e] = acc.get(e, 0) + c
        self.field = field
        if p is not None:
            self._terms = {int(e): c % p for e, c in acc.items() if c % p}
        else:
            self._terms = {int(e): Fraction(c) for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, field, terms: dict) -> "LaurentPoly":
        # terms already reduced and free of zeros
        obj = object.__new__(cls)
        obj.field = field
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, field: ExactField = QQ) -> "LaurentPoly":
        return cls._raw(field, {})

    @classmethod
    def one(cls, field: ExactField = QQ) -> "LaurentPoly":
        return cls._raw(field, {0: field.one})

    @classmethod
    def const(cls, field: ExactField, c: Scalar) -> "LaurentPoly":
        return cls(field, {0: c})

    @classmethod
    def monomial(cls, field: ExactField, c: Scalar, e: int) -> "LaurentPoly":
        return cls(field, {e: c})

    @classmethod
    def t(cls, field: ExactField = QQ) -> "LaurentPoly":
        return cls._raw(field, {1: field.one})

    @classmethod
    def from_dense(cls, field: ExactField, coeffs: Sequence[Scalar], shift: int = 0) -> "LaurentPoly":
        """``coeffs[i]`` is the coefficient of ``t^(shift+i)``."""
        return cls(field, {shift + i: c for i, c in enumerate(coeffs)})

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def low(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def high(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def degree(self) -> int:
        """Top exponent minus bottom exponent."""
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._terms) - min(self._terms)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coeff(self, e: int):
        return self._terms.get(e, self.field.zero)

    def leading_coefficient(self):
        return self._terms[self.high]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def dense(self) -> list:
        """Coefficients from ``low`` to ``high`` inclusive."""
        if not self._terms:
            return []
        lo, hi = self.low, self.high
        return [self.coeff(e) for e in range(lo, hi + 1)]

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        p = self.field.p
        for e, c in other._terms.items():
            v = terms.get(e, 0) + c
            if p is not None:
                v %= p
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return LaurentPoly._raw(self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        if p is None:
            return LaurentPoly._raw(self.field, {e: -c for e, c in self._terms.items()})
        return LaurentPoly._raw(self.field, {e: (-c) % p for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        p = self.field.p
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        if p is not None:
            terms = {e: c % p for e, c in terms.items()}
        return LaurentPoly._raw(self.field, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        c = self.field(c)
        if not c:
            return LaurentPoly.zero(self.field)
        p = self.field.p
        if p is None:
            return LaurentPoly._raw(self.field, {e: a * c for e, a in self._terms.items()})
        return LaurentPoly._raw(self.field, {e: a * c % p for e, a in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ArithmeticError("only monomials are invertible")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(self.field, {e * n: self.field(self.field.inv(c) ** (-n))})
        out = LaurentPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly._raw(self.field, {e + k: c for e, c in self._terms.items()})

    def normalizing_scalar(self):
        """Scalar ``c`` making ``c*self`` normalized.

        Over Q that means coprime integer coefficients with positive leading
        coefficient (so Alexander polynomials print as in knot tables); over
        F_p it means monic.
        """
        lc = self.leading_coefficient()
        if self.field.p is not None:
            return self.field.inv(lc)
        den = 1
        num = 0
        for c in self._terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        for c in self._terms.values():
            num = math.gcd(num, int(c * den))
        c = Fraction(den, num)
        return c if lc > 0 else -c

    def unit_normal(self) -> "LaurentPoly":
        """Representative of the unit class: lowest exponent 0, normalized scalar."""
        if not self._terms:
            return self
        return self.shift(-self.low).scale(self.normalizing_scalar())

    def divmod(self, other: "LaurentPoly"):
        """Division of the shifted ordinary polynomials.

        Returns ``(q, r)`` with ``self = q*other + r`` where ``r`` has span
        strictly below ``other``'s once both are shifted to exponent 0.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self, self
        q, r = _pdivmod(self.dense(), other.dense(), self.field)
        shift = self.low - other.low
        return (LaurentPoly.from_dense(self.field, q, shift),
                LaurentPoly.from_dense(self.field, r, self.low))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "LaurentPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    # -- comparison and display ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.field, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            neg = False
            if self.field.p is None and c < 0:
                neg, c = True, -c
            cs = str(c)
            if e == 0:
                mono = cs
            else:
                tp = "t" if e == 1 else f"t^{e}"
                mono = tp if c == 1 else f"{cs}*{tp}"
            if self.field.p is None and isinstance(c, Fraction) and c.denominator != 1 and e != 0:
                mono = f"({cs})*{tp}"
            parts.append(("-" if neg else "+", mono))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self}, {self.field})"

    def to_json(self) -> list:
        return [[e, self.field.fmt(self._terms[e])] for e in sorted(self._terms)]

    @classmethod
    def from_json(cls, field: ExactField, data) -> "LaurentPoly":
        return cls(field, {int(e): field(str(c)) for e, c in data})


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _pdivmod(a: list, b: list, field: ExactField):
    """Long division of dense ordinary polynomials (index = exponent)."""
    a = _trim(list(a))
    b = _trim(list(b))
    p = field.p
    inv_lead = field.inv(b[-1])
    if len(a) < len(b):
        return [], a
    q = [field.zero] * (len(a) - len(b) + 1)
    r = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] * inv_lead
        if p is not None:
            c %= p
        if not c:
            continue
        q[i] = c
        for j, bj in enumerate(b):
            v = r[i + j] - c * bj
            r[i + j] = v % p if p is not None else v
    return _trim(q), _trim(r[:len(b) - 1])


def _pgcd(a: list, b: list, field: ExactField) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _pdivmod(a, b, field)
        a, b = b, r
    return a


def degree(x: Union[LaurentPoly, "RationalFunction"]) -> int:
    """Span of a Laurent polynomial, or difference of spans for a fraction."""
    return x.degree()


def gcd(ps: Iterable[LaurentPoly], field: Optional[ExactField] = None) -> LaurentPoly:
    """Greatest common divisor modulo units, in :meth:`LaurentPoly.unit_normal` form.

    Zero entries are ignored; the gcd of nothing but zeros is zero.
    """
    ps = list(ps)
    if field is None:
        if not ps:
            raise ValueError("gcd of an empty list needs an explicit field")
        field = ps[0].field
    acc: list = []
    for q in ps:
        if q.field != field:
            raise ValueError("field mismatch in gcd")
        if q.is_zero():
            continue
        acc = _pgcd(acc, q.dense(), field) if acc else _trim(q.dense())
        if len(acc) == 1:
            break
    if not acc:
        return LaurentPoly.zero(field)
    return LaurentPoly.from_dense(field, acc).unit_normal()


class RationalFunction:
    """Quotient ``num/den`` of Laurent polynomials.

    Stored with the common gcd cancelled and the denominator shifted to lowest
    exponent 0 with normalized scalar; any power of ``t`` is carried by the numerator
    so that the stored pair has exactly the value it was built with.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Optional[LaurentPoly] = None):
        field = num.field
        if den is None:
            den = LaurentPoly.one(field)
        if den.field != field:
            raise ValueError("field mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, LaurentPoly.one(field)
            return
        g = gcd([num, den])
        if not g.is_unit():
            num, den = num.exact_div(g), den.exact_div(g)
        s = den.low
        num, den = num.shift(-s), den.shift(-s)
        c = den.normalizing_scalar()
        self.num, self.den = num.scale(c), den.scale(c)

    @property
    def field(self) -> ExactField:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def degree(self) -> int:
        if self.num.is_zero():
            raise ValueError("degree of the zero rational function is undefined")
        return self.num.degree() - self.den.degree()

    def unit_normal(self) -> "RationalFunction":
        """Display form: numerator normalized like the denominator (value changes by a unit)."""
        if self.num.is_zero():
            return self
        return RationalFunction(self.num.unit_normal(), self.den)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFunction(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _as_rf(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction(x)


def equal_up_to_unit(p, q) -> bool:
    """True iff ``p = c * t^k * q`` for a nonzero scalar ``c`` and integer ``k``."""
    p, q = _as_rf(p), _as_rf(q)
    if p.field != q.field:
        raise ValueError("cannot compare across fields")
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    a = p.num * q.den
    b = q.num * p.den
    return a.unit_normal() == b.unit_normal()


class PolyMatrix:
    """Rectangular matrix of :class:`LaurentPoly` over a single field."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: ExactField, rows: Sequence[Sequence], ncols: Optional[int] = None):
        conv = []
        for r in rows:
            conv.append(tuple(x if isinstance(x, LaurentPoly) else LaurentPoly.const(field, x) for x in r))
        widths = {len(r) for r in conv}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.field = field
        self.rows = tuple(conv)
        self.ncols = widths.pop() if widths else (ncols or 0)

    @classmethod
    def identity(cls, field: ExactField, n: int) -> "PolyMatrix":
        one, zero = LaurentPoly.one(field), LaurentPoly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: ExactField, m: int, n: int) -> "PolyMatrix":
        z = LaurentPoly.zero(field)
        return cls(field, [[z] * n for _ in range(m)], n)

    @property
    def shape(self):
        return len(self.rows), self.ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = LaurentPoly.zero(self.field)
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = zero
                for k, a in enumerate(r):
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out, other.ncols)

    def scale(self, c) -> "PolyMatrix":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(self.field, c)
        return PolyMatrix(self.field, [[c * a for a in r] for r in self.rows], self.ncols)

    def t_support(self, rows: Optional[Iterable[int]] = None) -> frozenset:
        """Exponents of ``t`` occurring anywhere in the selected rows."""
        sel = range(self.nrows) if rows is None else rows
        out = set()
        for i in sel:
            for a in self.rows[i]:
                out |= a.support()
        return frozenset(out)

    def coefficient(self, e: int) -> "PolyMatrix":
        """Constant matrix of the ``t^e`` coefficients."""
        return PolyMatrix(self.field, [[LaurentPoly.const(self.field, a.coeff(e)) for a in r] for r in self.rows], self.ncols)

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows) + "]"

    __repr__ = __str__

    def to_json(self) -> list:
        return [[a.to_json() for a in r] for r in self.rows]


def delete_submatrix(m: PolyMatrix, rows: Iterable[int], col: Optional[int], block: int = 1) -> PolyMatrix:
    """Delete row-blocks ``rows`` and column-block ``col`` of a ``block``-blocked matrix.

    With ``block = k`` the matrix is read as an array of ``k x k`` blocks, which
    is the layout of a Fox matrix evaluated under a ``k``-dimensional
    representation.
    """
    if col is None:
        raise ValueError("a column must be deleted")
    if block < 1 or m.nrows % block or m.ncols % block:
        raise ValueError(f"matrix shape {m.shape} is not divisible into {block}x{block} blocks")
    nrb, ncb = m.nrows // block, m.ncols // block
    rows = set(rows)
    if not 0 <= col < ncb:
        raise IndexError(f"column block {col} out of range 0..{ncb - 1}")
    bad = [r for r in rows if not 0 <= r < nrb]
    if bad:
        raise IndexError(f"row blocks {sorted(bad)} out of range 0..{nrb - 1}")
    keep_r = [i for i in range(m.nrows) if i // block not in rows]
    keep_c = [j for j in range(m.ncols) if j // block != col]
    return PolyMatrix(m.field, [[m.rows[i][j] for j in keep_c] for i in keep_r], len(keep_c))


def _det_cofactor(rows: Sequence[Sequence[LaurentPoly]], field: ExactField) -> LaurentPoly:
    n = len(rows)
    if n == 0:
        return LaurentPoly.one(field)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = LaurentPoly.zero(field)
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det_cofactor(minor, field)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _pmul(a: list, b: list, p: Optional[int]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    if p is not None:
        out = [v % p for v in out]
    return _trim(out)


def _psub(a: list, b: list, p: Optional[int]) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    if p is not None:
        out = [v % p for v in out]
    return _trim(out)


def _det_bareiss(rows: Sequence[Sequence[LaurentPoly]], field: ExactField) -> LaurentPoly:
    """Fraction-free elimination on dense coefficient lists of F[t]."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.one(field)
    p = field.p
    # shift every row into nonnegative exponents; undo at the end
    total_shift = 0
    a = []
    for r in rows:
        nz = [x.low for x in r if x]
        if not nz:
            return LaurentPoly.zero(field)
        s = min(nz)
        total_shift += s
        a.append([[x._terms.get(e, 0) for e in range(s, x.high + 1)] if x else [] for x in r])
    sign = 1
    prev = [field.one]
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(field)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                v = _pmul(pivot, a[i][j], p)
                if aik:
                    v = _psub(v, _pmul(aik, a[k][j], p), p)
                if len(prev) > 1 or prev[0] != 1:
                    q, rem = _pdivmod(v, prev, field) if v else ([], [])
                    if rem:
                        raise ArithmeticError("inexact Bareiss division")
                    v = q
                a[i][j] = v
            a[i][k] = []
        prev = pivot
    det = LaurentPoly.from_dense(field, a[n - 1][n - 1], total_shift)
    return det if sign > 0 else -det


def _det_kronecker(rows: Sequence[Sequence[LaurentPoly]], field: ExactField) -> LaurentPoly:
    """Bareiss elimination over Z[t] with each polynomial packed into one integer.

    Substituting ``t = 2**B`` turns polynomial products and exact quotients
    into integer ones, provided every intermediate coefficient fits in
    ``B - 1`` bits.  Bareiss intermediates are minors of the input, so the
    row-norm product bounds them all.  Coefficients over Q are first made
    integral row by row; over F_p the integer result is reduced at the end.
    """
    n = len(rows)
    if n == 0:
        return LaurentPoly.one(field)
    p = field.p
    total_shift = 0
    scale = Fraction(1)
    ints = []
    bound = 1
    for r in rows:
        nz = [x.low for x in r if x]
        if not nz:
            return LaurentPoly.zero(field)
        s = min(nz)
        total_shift += s
        if p is None:
            den = math.lcm(*(c.denominator for x in r for c in x._terms.values()))
            scale /= den
            ir = [{e - s: int(c * den) for e, c in x._terms.items()} for x in r]
        else:
            ir = [{e - s: c for e, c in x._terms.items()} for x in r]
        bound *= sum(abs(c) for d in ir for c in d.values())
        ints.append(ir)
    B = (2 * bound + 1).bit_length() + 1
    a = [[sum(c << (B * e) for e, c in d.items()) for d in ir] for ir in ints]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(field)
        pivot, rk = a[k][k], a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    x = sign * a[n - 1][n - 1]
    terms = {}
    mask, half, e = (1 << B) - 1, 1 << (B - 1), 0
    while x:
        c = x & mask
        if c >= half:
            c -= 1 << B
        if c:
            terms[e + total_shift] = c if p is None else c % p
        x = (x - c) >> B
        e += 1
    if p is None:
        return LaurentPoly(field, {e: c * scale for e, c in terms.items()})
    return LaurentPoly(field, terms)


def determinant(m: PolyMatrix, method: str = "auto") -> LaurentPoly:
    """Exact determinant; the 0x0 determinant is 1.

    ``method`` is ``"cofactor"``, ``"bareiss"`` (fraction-free elimination on
    coefficient lists), ``"kronecker"`` (the same elimination on packed
    integers) or ``"auto"`` (kronecker).
    """
    n, k = m.shape
    if n != k:
        raise ValueError(f"determinant of a non-square {n}x{k} matrix")
    if method == "auto":
        method = "kronecker"
    if method == "cofactor":
        return _det_cofactor(m.rows, m.field)
    if method == "bareiss":
        return _det_bareiss(m.rows, m.field)
    if method == "kronecker":
        return _det_kronecker(m.rows, m.field)
    raise ValueError(f"unknown determinant method {method!r}")
