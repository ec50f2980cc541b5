"""Number fields L = Q(a) given by a monic integral minimal polynomial, and
the constructive bounded-generation tools for SL2 over them."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DeterminantError,
    DivisionByZero,
    NotPrimitive,
    ReducibleError,
    RingMismatch,
    SearchCapExceeded,
)
from .linalg import rank, solve
from .matrices import Matrix, bruhat_decompose_sl2, u_minus, u_plus, UPPER
from .rings import Ring


# --------------------------------------------------------------------------
# univariate helpers (ascending coefficient lists)

def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_divmod(f, g):
    f = [Fraction(c) for c in f]
    g = _poly_trim([Fraction(c) for c in g])
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    while len(_poly_trim(f)) >= len(g):
        f = _poly_trim(f)
        shift = len(f) - len(g)
        c = f[-1] / g[-1]
        q[shift] = c
        for i, gc in enumerate(g):
            f[i + shift] -= c * gc
    return _poly_trim(q), _poly_trim(f)


def _divisors(m: int) -> list:
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _interpolate(xs, ys):
    """Coefficients (ascending) of the polynomial through the points."""
    n = len(xs)
    out = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, b in enumerate(basis):
            out[k] += scale * b
    return out


def is_irreducible(coeffs: Sequence[int]) -> bool:
    """Irreducibility over Q of a monic integer polynomial (ascending coefficients).

    Integer-root test, then Kronecker's method for factors of degree 2..n/2.
    """
    f = _poly_trim([int(c) for c in coeffs])
    n = len(f) - 1
    if n <= 1:
        return n == 1
    if f[0] == 0:
        return False
    for d in _divisors(f[0]):
        if _poly_eval(f, d) == 0 or _poly_eval(f, -d) == 0:
            return False
    if n <= 3:
        return True
    span = max(8, 2 * n)
    candidates = sorted(range(-span, span + 1), key=lambda x: (len(_divisors(_poly_eval(f, x))), abs(x)))
    for d in range(2, n // 2 + 1):
        xs = sorted(candidates[: d + 1])
        choices = [_divisors(_poly_eval(f, x)) for x in xs]
        signed = [[v for dv in ch for v in (dv, -dv)] for ch in choices]
        signed[0] = choices[0]  # h and -h give the same factor
        for ys in itertools.product(*signed):
            h = _poly_trim(_interpolate(xs, ys))
            if len(h) != d + 1 or abs(h[-1]) != 1:
                continue
            if any(c.denominator != 1 for c in h):
                continue
            _, r = _poly_divmod(f, h)
            if not r:
                return False
    return True


# --------------------------------------------------------------------------
# fields and elements

class NumberField(Ring):
    """L = Q[u] / (min_poly).  ``min_poly`` lists integer coefficients from the
    leading one down, e.g. ``[1, 0, -2]`` for u^2 - 2."""

    tag = "L"
    is_field = True

    def __init__(self, min_poly: Sequence[int], *, check: bool = True):
        coeffs = [int(c) for c in min_poly]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        if len(coeffs) < 2 or coeffs[0] != 1:
            raise ReducibleError("minimal polynomial must be monic of degree >= 1")
        self.min_poly = tuple(coeffs)
        self._asc = tuple(reversed(coeffs))
        self.degree = len(coeffs) - 1
        if check and not is_irreducible(self._asc):
            raise ReducibleError(f"{self.poly_string()} is reducible over Q")

    @property
    def n(self) -> int:
        return self.degree

    def poly_string(self) -> str:
        parts = []
        for e, c in zip(range(self.degree, -1, -1), self.min_poly):
            if not c:
                continue
            var = "" if e == 0 else "u" if e == 1 else f"u^{e}"
            mag = abs(c)
            body = var if mag == 1 and var else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.min_poly == self.min_poly

    def __hash__(self):
        return hash(("NumberField", self.min_poly))

    def __repr__(self):
        return f"NumberField({list(self.min_poly)})"

    # element construction

    def element(self, coords) -> "NFElement":
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError(f"too many coordinates for a degree {self.degree} field")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return NFElement(self, tuple(coords))

    @property
    def gen(self) -> "NFElement":
        if self.degree == 1:
            return self.element([-self._asc[0]])
        return self.element([0, 1])

    def from_poly(self, coeffs) -> "NFElement":
        """Value of sum c_i a^i for ascending rational coefficients."""
        return NFElement(self, self._reduce([Fraction(c) for c in coeffs]))

    def _reduce(self, coeffs) -> tuple:
        c = list(coeffs)
        n = self.degree
        low = self._asc[:-1]
        for top in range(len(c) - 1, n - 1, -1):
            v = c[top]
            if v:
                for i, a in enumerate(low):
                    c[top - n + i] -= v * a
        c = c[:n] + [Fraction(0)] * (n - len(c))
        return tuple(c)

    # Ring protocol

    def coerce(self, x):
        if isinstance(x, NFElement):
            if x.field != self:
                raise RingMismatch("element belongs to a different number field")
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return self.element([x])
        from .rings import LaurentPolynomial, RationalFunction

        if isinstance(x, RationalFunction) and x.is_constant():
            return self.element([x.constant_value()])
        if isinstance(x, LaurentPolynomial) and x.is_constant():
            return self.coerce(x.constant_value())
        raise RingMismatch(f"{x!r} is not an element of {self!r}")

    def inverse(self, x):
        return self.coerce(x).inverse()

    def serialize(self, x) -> str:
        return self.coerce(x).to_string()

    def record_fields(self) -> dict:
        return {"min_poly": list(self.min_poly)}

    def conjugate(self, x: "NFElement") -> "NFElement":
        """Nontrivial automorphism of a quadratic field: a |-> -b - a for a^2 + b a + c."""
        if self.degree != 2:
            raise RingMismatch("conjugation is only defined for quadratic fields")
        x = self.coerce(x)
        c0, c1 = x.coords
        b = self._asc[1]
        return NFElement(self, (c0 - c1 * b, -c1))


class NFElement:
    """Element of a number field as power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise RingMismatch("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.element([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coords, other.coords
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return NFElement(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def multiplication_matrix(self) -> list:
        """Rows/cols: column j holds the coordinates of self * a^j."""
        n = self.field.degree
        cols = []
        cur = self
        gen = self.field.gen
        for _ in range(n):
            cols.append(cur.coords)
            cur = cur * gen
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def inverse(self) -> "NFElement":
        if not self:
            raise DivisionByZero("division by zero in number field")
        n = self.field.degree
        e0 = [Fraction(1)] + [Fraction(0)] * (n - 1)
        return NFElement(self.field, tuple(solve(self.multiplication_matrix(), e0)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.element([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except RingMismatch:
            return False
        if other is None:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        if all(c == 0 for c in self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def is_integral(self) -> bool:
        """Membership in the order Z[a]."""
        return all(c.denominator == 1 for c in self.coords)

    def denominator(self) -> int:
        """Least q > 0 with q * self in Z[a]."""
        return math.lcm(*(c.denominator for c in self.coords))

    def to_string(self) -> str:
        parts = []
        for e, c in enumerate(self.coords):
            if not c:
                continue
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                var = "a" if e == 1 else f"a^{e}"
                body = var if a == 1 else f"{a}*{var}"
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts) if parts else "0"

    __str__ = to_string

    def __repr__(self):
        return f"NFElement({self.to_string()!r})"


# --------------------------------------------------------------------------
# primitive elements

def power_basis_rank(y: NFElement) -> int:
    """dim_Q Q(y) = rank of 1, y, ..., y^(n-1)."""
    n = y.field.degree
    rows = []
    cur = y.field.element([1])
    for _ in range(n):
        rows.append(list(cur.coords))
        cur = cur * y
    return rank(rows)


def is_primitive(y: NFElement, L: NumberField | None = None) -> bool:
    L = L or y.field
    y = L.coerce(y)
    return power_basis_rank(y) == L.degree


def primitive_power_search(L: NumberField, n: int | None = None, cap: int = 10000):
    """First y = a + i (i = 0, 1, ...) with y, y^2, ..., y^n all primitive.

    Returns ``(y, i)``.
    """
    n = L.degree if n is None else n
    x = L.gen
    for i in range(cap):
        y = x + i
        p = y
        ok = True
        for _ in range(n):
            if not is_primitive(p, L):
                ok = False
                break
            p = p * y
        if ok:
            return y, i
    raise SearchCapExceeded(f"no suitable y among the first {cap} candidates a + i")


def vandermonde_span_solve(points: Sequence, k: int, target: Sequence) -> tuple:
    """Rationals c_i with sum_i c_i (t - points[i])^k = target.

    ``target`` holds ascending coefficients of a polynomial of degree <= k.
    """
    pts = [Fraction(p) for p in points]
    if len(pts) != k + 1:
        raise ValueError(f"need exactly k + 1 = {k + 1} points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    tgt = _poly_trim([Fraction(c) for c in target])
    if len(tgt) > k + 1:
        raise ValueError(f"target degree {len(tgt) - 1} exceeds k = {k}")
    tgt += [Fraction(0)] * (k + 1 - len(tgt))
    # row j: coefficient of t^j in (t - a)^k is C(k, j) (-a)^(k - j)
    a = [[math.comb(k, j) * (-p) ** (k - j) for p in pts] for j in range(k + 1)]
    return tuple(solve(a, tgt))


def expand_power_combination(points: Sequence, k: int, coeffs: Sequence) -> list:
    """Ascending coefficients of sum_i coeffs[i] (t - points[i])^k."""
    out = [Fraction(0)] * (k + 1)
    for p, c in zip(points, coeffs):
        base = [Fraction(1)]
        for _ in range(k):
            base = [Fraction(0)] + base
            for j in range(len(base) - 1):
                base[j] -= Fraction(p) * base[j + 1]
        for j, b in enumerate(base):
            out[j] += Fraction(c) * b
    return _poly_trim(out)


def even_power_coordinates(l: NFElement, x: NFElement, L: NumberField | None = None) -> tuple:
    """Rationals r_i with l = sum_i r_i x^(2i), i < n."""
    L = L or x.field
    l, x = L.coerce(l), L.coerce(x)
    x2 = x * x
    if not is_primitive(x2, L):
        raise NotPrimitive(f"x^2 = {x2} is not a primitive element")
    n = L.degree
    cols = []
    cur = L.element([1])
    for _ in range(n):
        cols.append(cur.coords)
        cur = cur * x2
    a = [[cols[j][i] for j in range(n)] for i in range(n)]
    return tuple(solve(a, list(l.coords)))


# --------------------------------------------------------------------------
# bounded generation by SL2(Q) and a congruence subgroup

RATIONAL = "RATIONAL"
V_MEMBER = "V_MEMBER"


def is_rational_matrix(g: Matrix) -> bool:
    return all(x.is_rational() for x in g.entries())


def in_congruence_subgroup(g: Matrix, level: int) -> bool:
    """g in SL2(Z[a]) with g = I mod level, entrywise."""
    for i, row in enumerate(g.rows):
        for j, x in enumerate(row):
            y = x - 1 if i == j else x
            if any(c.denominator != 1 or c.numerator % level for c in y.coords):
                return False
    return g.det() == 1


@dataclass(frozen=True)
class DecompositionCertificate:
    target: Matrix
    factors: tuple  # of (tag, Matrix)
    level: int
    budget: int = 33

    def __len__(self):
        return len(self.factors)

    def product(self) -> Matrix:
        g = Matrix.identity(self.target.n, self.target.ring)
        for _, f in self.factors:
            g = g @ f
        return g

    def verify(self) -> bool:
        if len(self.factors) > self.budget:
            return False
        for tag, f in self.factors:
            if tag == RATIONAL and not is_rational_matrix(f):
                return False
            if tag == V_MEMBER and not in_congruence_subgroup(f, self.level):
                return False
            if tag not in (RATIONAL, V_MEMBER):
                return False
        return self.product() == self.target


def _sandwich(kind: str, l: NFElement, level: int, L: NumberField) -> list:
    # u+(l) = diag(1/c, c) u+(c^2 l) diag(c, 1/c),  u-(l) = diag(c, 1/c) u-(c^2 l) diag(1/c, c)
    c = Fraction(level * l.denominator())
    small = Matrix.diagonal([1 / c, c], L)
    big = Matrix.diagonal([c, 1 / c], L)
    if kind == UPPER:
        return [(RATIONAL, small), (V_MEMBER, u_plus(c * c * l, L)), (RATIONAL, big)]
    return [(RATIONAL, big), (V_MEMBER, u_minus(c * c * l, L)), (RATIONAL, small)]


def decompose_3N0(g: Matrix, L: NumberField | None = None, level: int = 2) -> DecompositionCertificate:
    """Factor g in SL2(L) into at most 33 matrices from SL2(Q) or the level-N
    congruence subgroup of SL2(Z[a])."""
    L = L or g.ring
    if not isinstance(L, NumberField):
        raise RingMismatch("decompose_3N0 needs a number field")
    if level < 1:
        raise ValueError("congruence level must be positive")
    g = g.to_ring(L)
    if g.det() != 1:
        raise DeterminantError(f"det = {g.det()}, expected 1")
    word = bruhat_decompose_sl2(g)
    factors = []
    for kind, l in word.factors:
        if l.is_rational():
            factors.append((RATIONAL, u_plus(l, L) if kind == UPPER else u_minus(l, L)))
        else:
            factors.extend(_sandwich(kind, l, level, L))
    cert = DecompositionCertificate(g, tuple(factors), level)
    if not cert.verify():
        raise AssertionError("decomposition certificate failed verification")
    return cert


# --------------------------------------------------------------------------
# double embedding SL2(L) -> SL4, g |-> diag(g, sigma(g))

PRESERVES = "PRESERVES"
MOVES = "MOVES"


@dataclass(frozen=True)
class DoubleEmbeddingResult:
    verdict: str
    images: tuple  # images of (1,0,1,0) and (0,1,0,1)


def double_embedding(g: Matrix, L: NumberField) -> Matrix:
    g = g.to_ring(L)
    sg = g.map(L.conjugate)
    z = L.zero
    rows = [list(r) + [z, z] for r in g.rows] + [[z, z] + list(r) for r in sg.rows]
    return Matrix(rows, L)


def double_embedding_orbit(g: Matrix, L: NumberField | None = None) -> DoubleEmbeddingResult:
    """Does diag(g, sigma(g)) map U = <(1,0,1,0), (0,1,0,1)> onto itself?

    Vectors are rows acted on from the right (u |-> u * psi(g)).
    """
    L = L or g.ring
    if not isinstance(L, NumberField) or L.degree != 2:
        raise RingMismatch("double embedding needs a quadratic number field")
    if g.n != 2:
        raise ValueError("g must be 2x2")
    psi = double_embedding(g, L)
    basis = [[L.coerce(c) for c in v] for v in ((1, 0, 1, 0), (0, 1, 0, 1))]
    cols = list(zip(*psi.rows))
    images = []
    for v in basis:
        img = []
        for col in cols:
            s = L.zero
            for a, b in zip(v, col):
                s = s + a * b
            img.append(s)
        images.append(tuple(img))
    verdict = PRESERVES if rank(basis + [list(w) for w in images]) == 2 else MOVES
    return DoubleEmbeddingResult(verdict, tuple(images))
