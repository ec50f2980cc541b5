"""Exact scalar rings: rationals, the rational function field k = Q(t_i),
and the Laurent polynomial ring k[t, t^-1].

Field variables are indexed by integers; a monomial is a sorted tuple of
``(index, exponent)`` pairs with positive exponents, so values never depend
on a window size.  Windows only matter where derivations are applied.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DivisionByZero, NotInvertible, RingMismatch, WindowError

DEFAULT_WINDOW = 8

Monomial = tuple  # tuple[tuple[int, int], ...]

ONE_MONO: Monomial = ()


# --------------------------------------------------------------------------
# monomials

def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    if not b:
        return a
    d = dict(a)
    for i, e in b:
        r = d[i] - e
        if r:
            d[i] = r
        else:
            del d[i]
    return tuple(sorted(d.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_key(m: Monomial):
    """Sort key for the graded lexicographic order, smaller index = bigger variable."""
    return (_mono_degree(m), tuple((-i, e) for i, e in m))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


def check_window(index: int, window: int) -> None:
    if not -window <= index <= window:
        raise WindowError(f"index {index} outside the window [-{window}, {window}]")


# --------------------------------------------------------------------------
# multivariate polynomials over Q

class MultiPolynomial:
    """Sparse polynomial in the variables t_i with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPolynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "MultiPolynomial":
        c = _as_fraction(c)
        return cls._raw({ONE_MONO: c} if c else {})

    @classmethod
    def variable(cls, index: int) -> "MultiPolynomial":
        return cls._raw({((index, 1),): Fraction(1)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get(ONE_MONO) == 1

    def constant_value(self) -> Fraction:
        return self._terms.get(ONE_MONO, Fraction(0))

    def variables(self) -> frozenset:
        return frozenset(i for m in self._terms for i, _ in m)

    def leading_term(self):
        m = max(self._terms, key=mono_key)
        return m, self._terms[m]

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: mono_key(mc[0]), reverse=True)

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return MultiPolynomial._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolynomial._raw({m: -c for m, c in self._terms.items()})

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
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPolynomial._raw({})
        if len(a) == 1 and ONE_MONO in a:
            c = a[ONE_MONO]
            return MultiPolynomial._raw({m: c * v for m, v in b.items()})
        if len(b) == 1 and ONE_MONO in b:
            c = b[ONE_MONO]
            return MultiPolynomial._raw({m: c * v for m, v in a.items()})
        d: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return MultiPolynomial._raw({m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPolynomial":
        c = _as_fraction(c)
        if not c:
            return MultiPolynomial._raw({})
        return MultiPolynomial._raw({m: c * v for m, v in self._terms.items()})

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = MultiPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def diff(self, index: int) -> "MultiPolynomial":
        d = {}
        for m, c in self._terms.items():
            for pos, (i, e) in enumerate(m):
                if i == index:
                    if e == 1:
                        nm = m[:pos] + m[pos + 1:]
                    else:
                        nm = m[:pos] + ((i, e - 1),) + m[pos + 1:]
                    d[nm] = d.get(nm, 0) + c * e
                    break
        return MultiPolynomial._raw({m: c for m, c in d.items() if c})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_string(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            factors = [f"x_{i}" if e == 1 else f"x_{i}^{e}" for i, e in m]
            if a != 1 or not factors:
                factors.insert(0, str(a))
            body = "*".join(factors)
            if k == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    __str__ = to_string

    def __repr__(self):
        return f"MultiPolynomial({self.to_string()!r})"


# --------------------------------------------------------------------------
# gcd (multivariate case delegated to sympy's sparse polynomial rings)

@lru_cache(maxsize=256)
def _sympy_ring(indices: tuple):
    from sympy.polys.domains import QQ
    from sympy.polys.orderings import grlex
    from sympy.polys.rings import PolyRing

    names = [f"t{i}" if i >= 0 else f"tm{-i}" for i in indices]
    return PolyRing(names, QQ, grlex)


def _to_sympy(p: MultiPolynomial, ring, pos: dict):
    from sympy.polys.domains import QQ

    n = len(pos)
    d = {}
    for m, c in p._terms.items():
        ev = [0] * n
        for i, e in m:
            ev[pos[i]] = e
        d[tuple(ev)] = QQ(c.numerator, c.denominator)
    return ring(d)


def _from_sympy(sp, indices: tuple) -> MultiPolynomial:
    d = {}
    for ev, c in sp.items():
        m = tuple((indices[k], e) for k, e in enumerate(ev) if e)
        d[m] = Fraction(int(c.numerator), int(c.denominator))
    return MultiPolynomial._raw(d)


def _monomial_content(p: MultiPolynomial, vars_: Iterable[int]) -> Monomial:
    """Largest monomial in ``vars_`` dividing every term of ``p``."""
    mins = {i: None for i in vars_}
    for m in p._terms:
        md = dict(m)
        for i in mins:
            e = md.get(i, 0)
            if mins[i] is None or e < mins[i]:
                mins[i] = e
    return tuple(sorted((i, e) for i, e in mins.items() if e))


def _divide_by_monomial(p: MultiPolynomial, m: Monomial) -> MultiPolynomial:
    if not m:
        return p
    return MultiPolynomial._raw({_mono_div(k, m): c for k, c in p._terms.items()})


def poly_cancel(num: MultiPolynomial, den: MultiPolynomial):
    """Return ``(num/g, den/g)`` with ``g = gcd(num, den)``."""
    if num.is_constant() or den.is_constant():
        return num, den
    nv, dv = num.variables(), den.variables()
    common = nv & dv
    if not common:
        return num, den
    if len(den._terms) == 1 or len(num._terms) == 1:
        mono_side = den if len(den._terms) == 1 else num
        (m,) = mono_side._terms
        m = tuple((i, e) for i, e in m if i in common)
        other = num if mono_side is den else den
        md = dict(m)
        g = _monomial_content(other, md)
        g = tuple((i, min(e, md[i])) for i, e in g)
        return _divide_by_monomial(num, g), _divide_by_monomial(den, g)
    indices = tuple(sorted(nv | dv))
    ring = _sympy_ring(indices)
    pos = {i: k for k, i in enumerate(indices)}
    _, a, b = _to_sympy(num, ring, pos).cofactors(_to_sympy(den, ring, pos))
    return _from_sympy(a, indices), _from_sympy(b, indices)


# --------------------------------------------------------------------------
# rational functions

class RationalFunction:
    """Element of k = Q(t_i) in lowest terms with a monic denominator.

    >>> x = RationalFunction.variable(1)
    >>> str((x * x - 1) / (x - 1))
    'x_1 + 1'
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _to_poly(num)
        den = _to_poly(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        self._set(*_canonical(num, den))

    def _set(self, num, den):
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den) -> "RationalFunction":
        f = cls.__new__(cls)
        f._set(num, den)
        return f

    @classmethod
    def _make(cls, num, den) -> "RationalFunction":
        return cls._raw(*_canonical(num, den))

    @classmethod
    def variable(cls, index: int) -> "RationalFunction":
        return cls._raw(MultiPolynomial.variable(index), _POLY_ONE)

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls._raw(MultiPolynomial.constant(c), _POLY_ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_value()

    def variables(self) -> frozenset:
        return self.num.variables() | self.den.variables()

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_one():
                return RationalFunction._raw(self.num + other.num, _POLY_ONE)
            return RationalFunction._make(self.num + other.num, self.den)
        return RationalFunction._make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

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
        if self.num.is_zero() or other.num.is_zero():
            return _RF_ZERO
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._raw(self.num * other.num, _POLY_ONE)
        # cross-cancel; both operands are already reduced
        a, d = poly_cancel(self.num, other.den)
        c, b = poly_cancel(other.num, self.den)
        return RationalFunction._raw(*_monic(a * c, b * d))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise DivisionByZero("division by zero in k")
        return RationalFunction._raw(*_monic(self.den, self.num))

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
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction._raw(self.num ** e, self.den ** e)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def to_string(self) -> str:
        n = self.num.to_string()
        if self.den.is_one():
            return n
        d = self.den.to_string()
        if len(self.num._terms) > 1:
            n = f"({n})"
        if len(self.den._terms) > 1 or not _is_bare_monomial(self.den):
            d = f"({d})"
        return f"{n}/{d}"

    __str__ = to_string

    def __repr__(self):
        return f"RationalFunction({self.to_string()!r})"


def _is_bare_monomial(p: MultiPolynomial) -> bool:
    if len(p._terms) != 1:
        return False
    ((m, c),) = p._terms.items()
    return c == 1 and len(m) == 1 and m[0][1] == 1


def _to_poly(x) -> MultiPolynomial:
    if isinstance(x, MultiPolynomial):
        return x
    return MultiPolynomial.constant(x)


def _monic(num: MultiPolynomial, den: MultiPolynomial):
    _, lc = den.leading_term()
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def _canonical(num: MultiPolynomial, den: MultiPolynomial):
    if num.is_zero():
        return num, _POLY_ONE
    num, den = poly_cancel(num, den)
    return _monic(num, den)


_POLY_ONE = MultiPolynomial.constant(1)
_RF_ZERO = RationalFunction._raw(MultiPolynomial(), _POLY_ONE)


def t(index: int) -> RationalFunction:
    """The field variable t_index as an element of k."""
    return RationalFunction.variable(index)


# --------------------------------------------------------------------------
# derivations

class Derivation:
    """Partial derivative with respect to t_index on k."""

    __slots__ = ("index", "window")

    def __init__(self, index: int, window: int = DEFAULT_WINDOW):
        check_window(index, window)
        self.index = index
        self.window = window

    def __call__(self, f):
        return partial_derivative(f, self)

    def __repr__(self):
        return f"Derivation({self.index})"

    def __eq__(self, other):
        return isinstance(other, Derivation) and other.index == self.index

    def __hash__(self):
        return hash(("Derivation", self.index))


def partial_derivative(f, d: Derivation) -> RationalFunction:
    """Quotient rule: (p/q)' = (p'q - pq') / q^2."""
    if isinstance(f, (int, Fraction)):
        return _RF_ZERO
    i = d.index
    dp = f.num.diff(i)
    dq = f.den.diff(i)
    if dq.is_zero():
        if dp.is_zero():
            return _RF_ZERO
        return RationalFunction._make(dp, f.den)
    return RationalFunction._make(dp * f.den - f.num * dq, f.den * f.den)


def support_variables(f) -> frozenset:
    """Indices i with d_i(f) != 0.

    For f = p/q in lowest terms over a field of characteristic zero these are
    exactly the variables occurring in p or q.
    """
    if isinstance(f, (int, Fraction)):
        return frozenset()
    if isinstance(f, LaurentPolynomial):
        out = frozenset()
        for c in f.coefficients.values():
            out |= c.variables()
        return out
    return f.variables()


def field_arithmetic(a, b, op: str) -> RationalFunction:
    a = RationalFunction._coerce(a)
    b = RationalFunction._coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


# --------------------------------------------------------------------------
# Laurent polynomials over k

class LaurentPolynomial:
    """Finite sum of c_e t^e with c_e in k and e in Z."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coefficients: Mapping[int, object] | None = None):
        clean = {}
        if coefficients:
            for e, c in coefficients.items():
                c = _to_rf(c)
                if c:
                    clean[int(e)] = c
        self._coeffs = clean
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: dict) -> "LaurentPolynomial":
        f = cls.__new__(cls)
        f._coeffs = coeffs
        f._hash = None
        return f

    @classmethod
    def monomial(cls, coefficient, exponent: int) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c) -> "LaurentPolynomial":
        return cls({0: c})

    @property
    def coefficients(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, e: int) -> RationalFunction:
        return self._coeffs.get(e, _RF_ZERO)

    def is_zero(self) -> bool:
        return not self._coeffs

    def exponents(self) -> list:
        return sorted(self._coeffs)

    def is_constant(self) -> bool:
        return not self._coeffs or set(self._coeffs) == {0}

    def constant_value(self) -> RationalFunction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on t")
        return self.coefficient(0)

    def degrees(self):
        """``(deg_t, deg_tinv)`` or None for the zero polynomial."""
        return laurent_degrees(self)

    def substitute_inverse(self) -> "LaurentPolynomial":
        """f(1/t)."""
        return LaurentPolynomial._raw({-e: c for e, c in self._coeffs.items()})

    def is_unit(self) -> bool:
        return len(self._coeffs) == 1

    def inverse(self) -> "LaurentPolynomial":
        if len(self._coeffs) != 1:
            if not self._coeffs:
                raise DivisionByZero("division by zero in k[t, t^-1]")
            raise NotInvertible(f"{self} is not a unit of k[t, t^-1]")
        ((e, c),) = self._coeffs.items()
        return LaurentPolynomial._raw({-e: c.inverse()})

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction, RationalFunction)):
            return LaurentPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = dict(self._coeffs)
        for e, c in other._coeffs.items():
            if e in d:
                s = d[e] + c
                if s:
                    d[e] = s
                else:
                    del d[e]
            else:
                d[e] = c
        return LaurentPolynomial._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._coeffs.items()})

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
        d: dict = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                p = c1 * c2
                d[e] = d[e] + p if e in d else p
        return LaurentPolynomial._raw({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

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
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def to_string(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, e in enumerate(sorted(self._coeffs)):
            c = self._coeffs[e]
            neg = False
            if e != 0 and len(c.num._terms) == 1 and c.den.is_one():
                (m, v), = c.num._terms.items()
                if v < 0:
                    neg, c = True, -c
            cs = c.to_string()
            if e == 0:
                body = cs
            else:
                tp = "t" if e == 1 else f"t^{e}"
                if c == 1:
                    body = tp
                else:
                    if not (len(c.num._terms) == 1 and c.den.is_one()):
                        cs = f"({cs})"
                    body = f"{cs}*{tp}"
            if k == 0:
                parts.append("-" + body if neg else body)
            elif neg:
                parts.append("- " + body)
            elif body.startswith("-"):
                parts.append("- " + body[1:])
            else:
                parts.append("+ " + body)
        return " ".join(parts)

    __str__ = to_string

    def __repr__(self):
        return f"LaurentPolynomial({self.to_string()!r})"


def _to_rf(c) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    if isinstance(c, (int, Fraction)):
        return RationalFunction.constant(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient in k")


def laurent_degrees(f):
    """``(deg_t f, deg_{t^-1} f) = (N0, -N1)`` for the lowest exponent N0 and
    highest exponent N1 of ``f``; None (no degree) for ``f = 0``."""
    f = LaurentPolynomial._coerce(f)
    if f is None:
        raise TypeError("expected a Laurent polynomial")
    if not f._coeffs:
        return None
    return min(f._coeffs), -max(f._coeffs)


def laurent_t() -> LaurentPolynomial:
    return LaurentPolynomial._raw({1: RationalFunction.constant(1)})


# --------------------------------------------------------------------------
# ring descriptors

class Ring:
    """Describes the scalars of a matrix: coercion, units, serialization."""

    tag = ""
    is_field = True

    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def inverse(self, x):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == 0

    def serialize(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"<ring {self.tag}>"


class RationalRing(Ring):
    tag = "Q"

    def coerce(self, x):
        if isinstance(x, bool):
            raise RingMismatch("booleans are not rationals")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, RationalFunction) and x.is_constant():
            return x.constant_value()
        if isinstance(x, LaurentPolynomial) and x.is_constant():
            return self.coerce(x.constant_value())
        raise RingMismatch(f"{x!r} is not a rational number")

    def inverse(self, x):
        if x == 0:
            raise DivisionByZero("division by zero in Q")
        return 1 / Fraction(x)


class FunctionField(Ring):
    tag = "k"

    def coerce(self, x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return RationalFunction.constant(x)
        if isinstance(x, LaurentPolynomial) and x.is_constant():
            return x.constant_value()
        raise RingMismatch(f"{x!r} is not an element of k")

    def inverse(self, x):
        return self.coerce(x).inverse()


class LaurentRing(Ring):
    tag = "k[t]"
    is_field = False

    def coerce(self, x):
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, (int, Fraction, RationalFunction)) and not isinstance(x, bool):
            return LaurentPolynomial.constant(x)
        raise RingMismatch(f"{x!r} is not an element of k[t, t^-1]")

    def inverse(self, x):
        return self.coerce(x).inverse()


QQ = RationalRing()
K = FunctionField()
KT = LaurentRing()
