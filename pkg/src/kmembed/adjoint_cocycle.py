"""Adjoint representation of SL_m, derivation cocycles and the embedding

    g  |->  (Ad g, sum_i coords(d_i(g) g^-1) t^i)

of SL_m(k) into Ad SL_m(k) |x k[t, t^-1]^n, n = m^2 - 1, realized inside
SL_{n+1}(k[t, t^-1]) as block matrices [[Ad g, v], [0, 1]].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CocycleError, DeterminantError, DimensionMismatch, WindowError
from .matrices import Matrix
from .rings import (
    DEFAULT_WINDOW,
    K,
    KT,
    Derivation,
    LaurentPolynomial,
    RationalFunction,
    check_window,
    partial_derivative,
    support_variables,
    t,
)


class LieBasis:
    """Ordered basis of sl_m: E_ij (i < j), then E_ij (i > j), then
    H_k = E_kk - E_{k+1,k+1}.  For m = 2 this is (e, f, h)."""

    def __init__(self, m: int = 2):
        if m < 2:
            raise ValueError("m must be at least 2")
        self.m = m
        upper = [(i, j) for i in range(m) for j in range(m) if i < j]
        lower = [(i, j) for i in range(m) for j in range(m) if i > j]
        self.offdiag = upper + lower
        self.n = m * m - 1

    @property
    def basis(self) -> list:
        out = []
        m = self.m
        for i, j in self.offdiag:
            out.append(Matrix([[1 if (a, b) == (i, j) else 0 for b in range(m)] for a in range(m)]))
        for k in range(m - 1):
            out.append(Matrix.diagonal([1 if a == k else -1 if a == k + 1 else 0 for a in range(m)]))
        return out

    def coords(self, x: Matrix) -> tuple:
        """Coordinates of a traceless m x m matrix."""
        if x.n != self.m:
            raise DimensionMismatch(f"expected a {self.m}x{self.m} matrix")
        if x.trace() != 0:
            raise CocycleError(f"matrix is not traceless: trace {x.trace()}")
        out = [x[i, j] for i, j in self.offdiag]
        acc = x.ring.zero
        for k in range(self.m - 1):
            acc = acc + x[k, k]
            out.append(acc)
        return tuple(out)

    def from_coords(self, coords, ring=K) -> Matrix:
        if len(coords) != self.n:
            raise DimensionMismatch(f"expected {self.n} coordinates")
        m = self.m
        rows = [[ring.zero] * m for _ in range(m)]
        for (i, j), c in zip(self.offdiag, coords):
            rows[i][j] = c
        hs = coords[len(self.offdiag):]
        for k, c in enumerate(hs):
            rows[k][k] = rows[k][k] + c
            rows[k + 1][k + 1] = rows[k + 1][k + 1] - c
        return Matrix(rows, ring)

    def __eq__(self, other):
        return isinstance(other, LieBasis) and other.m == self.m

    def __hash__(self):
        return hash(("LieBasis", self.m))


@lru_cache(maxsize=None)
def lie_basis(m: int) -> LieBasis:
    return LieBasis(m)


def _require_sl(g: Matrix):
    d = g.det()
    if d != 1:
        raise DeterminantError(f"det = {d}, expected 1")


def _in_k(g: Matrix) -> Matrix:
    return g.to_ring(K)


def adjoint_matrix(g: Matrix, basis: LieBasis | None = None, *, check: bool = True) -> Matrix:
    """Matrix of X |-> g X g^-1 in ``basis`` (columns are images of basis vectors)."""
    g = _in_k(g)
    basis = basis or lie_basis(g.n)
    if g.n != basis.m:
        raise DimensionMismatch(f"g is {g.n}x{g.n}, basis is for sl_{basis.m}")
    if check:
        _require_sl(g)
    ginv = g.adjugate()
    cols = [basis.coords(g @ b.to_ring(K) @ ginv) for b in basis.basis]
    n = basis.n
    return Matrix._raw(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)), K)


def _entrywise_derivative(g: Matrix, d: Derivation) -> Matrix:
    return Matrix._raw(tuple(tuple(partial_derivative(x, d) for x in r) for r in g.rows), K)


def derivation_cocycle(g: Matrix, d: Derivation, basis: LieBasis | None = None) -> tuple:
    """Left cocycle g^-1 d(g) as Lie coordinates."""
    g = _in_k(g)
    _require_sl(g)
    basis = basis or lie_basis(g.n)
    return basis.coords(g.adjugate() @ _entrywise_derivative(g, d))


def right_cocycle(g: Matrix, d: Derivation, basis: LieBasis | None = None) -> tuple:
    """Right cocycle d(g) g^-1 = Ad(g)(g^-1 d(g)) as Lie coordinates."""
    g = _in_k(g)
    _require_sl(g)
    basis = basis or lie_basis(g.n)
    return basis.coords(_entrywise_derivative(g, d) @ g.adjugate())


@dataclass(frozen=True)
class EmbeddingSpec:
    m: int = 2
    window: int = DEFAULT_WINDOW

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("group size m must be >= 2")
        if self.window < 1:
            raise ValueError("window M must be >= 1")

    @property
    def n(self) -> int:
        return self.m * self.m - 1


@dataclass(frozen=True)
class SemidirectElement:
    """(A, v) with multiplication (A1, v1)(A2, v2) = (A1 A2, v1 + A1 v2)."""

    ad_part: Matrix
    vec_part: tuple

    def __post_init__(self):
        if len(self.vec_part) != self.ad_part.n:
            raise DimensionMismatch("vector part length must equal the size of Ad part")

    @property
    def n(self) -> int:
        return self.ad_part.n

    @classmethod
    def identity(cls, n: int) -> "SemidirectElement":
        return cls(Matrix.identity(n, K), tuple(LaurentPolynomial() for _ in range(n)))

    def __matmul__(self, other: "SemidirectElement") -> "SemidirectElement":
        return semidirect_multiply(self, other)

    def inverse(self) -> "SemidirectElement":
        ainv = self.ad_part.inverse()
        v = ainv.to_ring(KT).apply(self.vec_part)
        return SemidirectElement(ainv, tuple(-x for x in v))

    def block_matrix(self) -> Matrix:
        """The (n+1) x (n+1) matrix [[A, v], [0, 1]] over k[t, t^-1]."""
        n = self.n
        rows = [list(r) + [v] for r, v in zip(self.ad_part.rows, self.vec_part)]
        rows.append([0] * n + [1])
        return Matrix(rows, KT)

    def component(self, degree: int) -> tuple:
        """Homogeneous component of the vector part in t^degree."""
        return tuple(v.coefficient(degree) for v in self.vec_part)

    def t_support(self) -> frozenset:
        out = set()
        for v in self.vec_part:
            out.update(v.exponents())
        return frozenset(out)


def semidirect_multiply(a: SemidirectElement, b: SemidirectElement) -> SemidirectElement:
    if a.n != b.n:
        raise DimensionMismatch(f"semidirect factors of sizes {a.n} and {b.n}")
    av = a.ad_part.to_ring(KT).apply(b.vec_part)
    return SemidirectElement(
        a.ad_part @ b.ad_part, tuple(x + y for x, y in zip(a.vec_part, av))
    )


def embed_element(g: Matrix, spec: EmbeddingSpec = EmbeddingSpec()) -> SemidirectElement:
    """Image of g under the derivation-cocycle embedding (right cocycle convention)."""
    g = _in_k(g)
    if g.n != spec.m:
        raise DimensionMismatch(f"g is {g.n}x{g.n} but the spec has m = {spec.m}")
    _require_sl(g)
    basis = lie_basis(spec.m)
    ginv = g.adjugate()
    support = set()
    for x in g.entries():
        support |= support_variables(x)
    for i in support:
        if not -spec.window <= i <= spec.window:
            raise WindowError(f"entry variable t_{i} outside the window M = {spec.window}")
    coeffs = [dict() for _ in range(basis.n)]
    for i in sorted(support):
        d = Derivation(i, spec.window)
        c = basis.coords(_entrywise_derivative(g, d) @ ginv)
        for slot, x in zip(coeffs, c):
            if x:
                slot[i] = x
    vec = tuple(LaurentPolynomial(c) for c in coeffs)
    return SemidirectElement(adjoint_matrix(g, basis, check=False), vec)


def torus_probe(i: int, spec: EmbeddingSpec = EmbeddingSpec()) -> Matrix:
    """diag(t_i, 1/t_i) padded with ones to size m."""
    check_window(i, spec.window)
    ti = t(i)
    diag = [ti, ti.inverse()] + [RationalFunction.constant(1)] * (spec.m - 2)
    return Matrix.diagonal(diag, K)
