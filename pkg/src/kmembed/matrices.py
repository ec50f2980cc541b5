"""Square matrices over an exact ring, SL2 generators and the Bruhat word."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DeterminantError, DimensionMismatch, NotInvertible, RingMismatch
from .rings import K, KT, QQ, LaurentPolynomial, RationalFunction, Ring


def ring_of(x) -> Ring:
    """Smallest built-in ring holding the scalar ``x``."""
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QQ
    if isinstance(x, RationalFunction):
        return K
    if isinstance(x, LaurentPolynomial):
        return KT
    field = getattr(x, "field", None)
    if field is not None:
        return field
    raise RingMismatch(f"no ring known for {x!r}")


class Matrix:
    """Immutable n x n matrix whose entries all live in ``ring``."""

    __slots__ = ("rows", "ring", "_hash")

    def __init__(self, rows: Sequence[Sequence], ring: Ring | None = None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and non-empty")
        if ring is None:
            ring = _join_rings([ring_of(x) for r in rows for x in r])
        self.ring = ring
        self.rows = tuple(tuple(ring.coerce(x) for x in r) for r in rows)
        self._hash = None

    @classmethod
    def _raw(cls, rows, ring) -> "Matrix":
        m = cls.__new__(cls)
        m.rows = rows
        m.ring = ring
        m._hash = None
        return m

    @classmethod
    def identity(cls, n: int, ring: Ring = QQ) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), ring)

    @classmethod
    def diagonal(cls, entries: Sequence, ring: Ring | None = None) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], ring)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for r in self.rows:
            yield from r

    def to_ring(self, ring: Ring) -> "Matrix":
        if ring is self.ring:
            return self
        return Matrix._raw(tuple(tuple(ring.coerce(x) for x in r) for r in self.rows), ring)

    def map(self, fn, ring: Ring | None = None) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows], ring or self.ring)

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.rows)), self.ring)

    def _check(self, other: "Matrix"):
        if self.n != other.n:
            raise DimensionMismatch(f"dimension mismatch: {self.n} vs {other.n}")
        if self.ring.tag != other.ring.tag or self.ring != other.ring:
            ring = _join_rings([self.ring, other.ring])
            return self.to_ring(ring), other.to_ring(ring)
        return self, other

    def __matmul__(self, other: "Matrix") -> "Matrix":
        a, b = self._check(other)
        cols = list(zip(*b.rows))
        zero = a.ring.zero
        out = []
        for r in a.rows:
            row = []
            for c in cols:
                s = zero
                for x, y in zip(r, c):
                    if x and y:
                        s = s + x * y
                row.append(s)
            out.append(tuple(row))
        return Matrix._raw(tuple(out), a.ring)

    __mul__ = __matmul__

    def __add__(self, other: "Matrix") -> "Matrix":
        a, b = self._check(other)
        return Matrix._raw(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a.rows, b.rows)), a.ring
        )

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self.rows), self.ring)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.ring.coerce(c)
        return Matrix._raw(tuple(tuple(c * x for x in r) for r in self.rows), self.ring)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.n:
            raise DimensionMismatch("vector length does not match matrix size")
        zero = self.ring.zero
        out = []
        for r in self.rows:
            s = zero
            for x, y in zip(r, vec):
                if x and y:
                    s = s + x * y
            out.append(s)
        return tuple(out)

    def det(self):
        return _det(self.rows, self.ring)

    def adjugate(self) -> "Matrix":
        n = self.n
        if n == 1:
            return Matrix._raw(((self.ring.one,),), self.ring)
        cof = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = tuple(
                    tuple(x for c, x in enumerate(r) if c != j)
                    for k, r in enumerate(self.rows) if k != i
                )
                d = _det(minor, self.ring)
                row.append(-d if (i + j) % 2 else d)
            cof.append(row)
        # adj = transpose of the cofactor matrix
        return Matrix._raw(tuple(tuple(cof[j][i] for j in range(n)) for i in range(n)), self.ring)

    def inverse(self) -> "Matrix":
        d = self.det()
        if self.ring.is_zero(d):
            raise NotInvertible("singular matrix")
        if d == 1:
            return self.adjugate()
        try:
            dinv = self.ring.inverse(d)
        except (NotInvertible, ZeroDivisionError) as exc:
            raise NotInvertible(f"determinant {d} is not a unit of {self.ring.tag}") from exc
        return self.adjugate().scale(dinv)

    def __pow__(self, e: int) -> "Matrix":
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.n, self.ring)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def is_identity(self) -> bool:
        return all((x == 1) if i == j else (x == 0)
                   for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def trace(self):
        s = self.ring.zero
        for i in range(self.n):
            s = s + self.rows[i][i]
        return s

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and all(
            x == y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def to_record(self) -> dict:
        """Shared matrix format: ``{n, ring, entries}`` with row-major strings."""
        rec = {
            "n": self.n,
            "ring": self.ring.tag,
            "entries": [self.ring.serialize(x) for x in self.entries()],
        }
        extra = getattr(self.ring, "record_fields", None)
        if extra is not None:
            rec.update(extra())
        return rec

    def to_string(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(self.ring.serialize(x) for x in r) + "]" for r in self.rows
        ) + "]"

    __str__ = to_string

    def __repr__(self):
        return f"Matrix({self.to_string()}, ring={self.ring.tag})"


_RING_RANK = {"Q": 0, "L": 1, "k": 1, "k[t]": 2}


def _join_rings(rings) -> Ring:
    rings = list(rings)
    fields = [r for r in rings if r.tag == "L"]
    if fields:
        if any(r.tag in ("k", "k[t]") for r in rings):
            raise RingMismatch("cannot mix number-field and function-field entries")
        if any(f != fields[0] for f in fields):
            raise RingMismatch("entries come from different number fields")
        return fields[0]
    return max(rings, key=lambda r: _RING_RANK[r.tag]) if rings else QQ


def _det(rows, ring: Ring):
    """Division-free determinant by cofactor expansion over column subsets."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    zero = ring.zero

    @lru_cache(maxsize=None)
    def minor(row: int, cols: int):
        # determinant of rows[row:] restricted to the columns in bitmask ``cols``
        if row == n - 1:
            (j,) = [j for j in range(n) if cols >> j & 1]
            return rows[row][j]
        s = zero
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                x = rows[row][j]
                if x:
                    term = x * minor(row + 1, cols & ~(1 << j))
                    s = s + term if sign > 0 else s - term
                sign = -sign
        return s

    return minor(0, (1 << n) - 1)


def matrix_arithmetic(a: Matrix, b: Matrix | None, op: str):
    if op == "mul":
        return a @ b
    if op == "inv":
        return a.inverse()
    if op == "det":
        return a.det()
    raise ValueError(f"unknown matrix operation {op!r}")


# --------------------------------------------------------------------------
# SL2 generators

def u_plus(r, ring: Ring | None = None) -> Matrix:
    return Matrix([[1, r], [0, 1]], ring)


def u_minus(r, ring: Ring | None = None) -> Matrix:
    return Matrix([[1, 0], [r, 1]], ring)


def _nonzero_param(u, ring: Ring, kind: str):
    u = ring.coerce(u)
    if ring.is_zero(u):
        raise ValueError(f"{kind} needs a nonzero parameter")
    return u


def m_matrix(u, ring: Ring | None = None) -> Matrix:
    """m(u) = u+(u) u-(-1/u) u+(u) = [[0, u], [-1/u, 0]]."""
    ring = ring or ring_of(u)
    u = _nonzero_param(u, ring, "m")
    return Matrix([[0, u], [-ring.inverse(u), 0]], ring)


def torus(a, ring: Ring | None = None) -> Matrix:
    """diag(a, 1/a) = m(-a) m(1)."""
    ring = ring or ring_of(a)
    a = _nonzero_param(a, ring, "torus")
    return Matrix([[a, 0], [0, ring.inverse(a)]], ring)


def s_matrix(ring: Ring = QQ) -> Matrix:
    return Matrix([[0, -1], [1, 0]], ring)


def sl2_generators(kind: str, param=None, ring: Ring | None = None) -> Matrix:
    if kind == "u_plus":
        return u_plus(param, ring)
    if kind == "u_minus":
        return u_minus(param, ring)
    if kind == "m":
        return m_matrix(param, ring)
    if kind == "s":
        return s_matrix(ring or QQ)
    if kind == "torus":
        return torus(param, ring)
    raise ValueError(f"unknown generator kind {kind!r}")


# --------------------------------------------------------------------------
# elementary words

UPPER = "u+"
LOWER = "u-"


@dataclass(frozen=True)
class ElementaryWord:
    """Product of elementary matrices u+(r) / u-(r), left to right."""

    factors: tuple = ()
    ring: Ring = QQ

    def __len__(self):
        return len(self.factors)

    def evaluate(self) -> Matrix:
        g = Matrix.identity(2, self.ring)
        for kind, r in self.factors:
            g = g @ (u_plus(r, self.ring) if kind == UPPER else u_minus(r, self.ring))
        return g

    def to_strings(self) -> list:
        return [f"{kind}({self.ring.serialize(r)})" for kind, r in self.factors]

    def __str__(self):
        return " * ".join(self.to_strings()) if self.factors else "1"


def m_word(u, ring: Ring) -> list:
    return [(UPPER, u), (LOWER, -ring.inverse(u)), (UPPER, u)]


def torus_word(a, ring: Ring) -> list:
    if a == 1:
        return []
    return m_word(-a, ring) + m_word(ring.one, ring)


def bruhat_decompose_sl2(g: Matrix) -> ElementaryWord:
    """Write g in SL2(field) as at most 11 elementary matrices.

    Upper triangular g = torus(g11) u+(g12/g11); otherwise
    g = u+(g11/g21) torus(1/g21) s u+(g22/g21) with s = m(-1).
    """
    ring = g.ring
    if g.n != 2:
        raise DimensionMismatch("Bruhat decomposition is implemented for 2x2 matrices only")
    if not ring.is_field:
        raise RingMismatch(f"entries must lie in a field, got {ring.tag}")
    if g.det() != 1:
        raise DeterminantError(f"det = {ring.serialize(g.det())}, expected 1")
    (a, b), (c, d) = g.rows
    if ring.is_zero(c):
        factors = torus_word(a, ring) + [(UPPER, b * ring.inverse(a))]
    else:
        cinv = ring.inverse(c)
        factors = (
            [(UPPER, a * cinv)]
            + torus_word(cinv, ring)
            + m_word(-ring.one, ring)
            + [(UPPER, d * cinv)]
        )
    factors = tuple((kind, r) for kind, r in factors if not ring.is_zero(r))
    return ElementaryWord(factors, ring)
