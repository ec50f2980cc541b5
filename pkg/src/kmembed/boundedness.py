"""Degree valuations of matrices over k[t, t^-1] and boundedness evidence.

A subgroup U of SL_n(k[t, t^-1]) is bounded exactly when |deg_t g| and
|deg_{t^-1} g| are uniformly bounded over g in U.  Since U is infinite this
is only semi-decided here: breadth-first growth tables give evidence,
closed-form power patterns and torus witnesses give certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .adjoint_cocycle import EmbeddingSpec, embed_element, torus_probe
from .errors import AlgebraError, DeterminantError, WindowError
from .matrices import Matrix
from .rings import KT, laurent_degrees


@dataclass(frozen=True)
class DegreeProfile:
    deg_t: int
    deg_tinv: int

    def as_tuple(self):
        return (self.deg_t, self.deg_tinv)


def degree_profile(g: Matrix) -> DegreeProfile:
    """Maxima of entry valuations over the nonzero entries of g."""
    g = g.to_ring(KT)
    degs = [laurent_degrees(x) for x in g.entries()]
    degs = [d for d in degs if d is not None]
    if not degs:
        raise AlgebraError("the zero matrix has no degree profile")
    return DegreeProfile(max(d[0] for d in degs), max(d[1] for d in degs))


@dataclass(frozen=True)
class GrowthRow:
    length: int
    count: int
    max_abs_deg_t: int
    max_abs_deg_tinv: int


@dataclass
class GrowthReport:
    rows: list = field(default_factory=list)

    def maxima(self) -> list:
        return [(r.max_abs_deg_t, r.max_abs_deg_tinv) for r in self.rows]

    def counts(self) -> list:
        return [r.count for r in self.rows]

    def is_plateau(self) -> bool:
        return len({(r.max_abs_deg_t, r.max_abs_deg_tinv) for r in self.rows}) <= 1

    def is_strictly_growing(self) -> bool:
        m = [max(a, b) for a, b in self.maxima()]
        return all(x < y for x, y in zip(m, m[1:]))


def canonical_key(g: Matrix) -> str:
    return g.to_string()


def growth_explore(generators, max_length: int) -> GrowthReport:
    """Breadth-first ball growth of the group generated by ``generators``.

    Row l describes the ball of radius l (identity included): its size and
    the largest |deg_t| and |deg_{t^-1}| seen so far.
    """
    gens = [g.to_ring(KT) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    letters = []
    for g in gens:
        if g.n != n:
            raise AlgebraError("generators have different sizes")
        if g.det() != 1:
            raise DeterminantError(f"generator {g} is not unimodular")
        letters.append(g)
        letters.append(g.adjugate())

    identity = Matrix.identity(n, KT)
    seen = {canonical_key(identity)}
    frontier = [identity]
    best_t = best_tinv = 0
    report = GrowthReport()
    for length in range(1, max_length + 1):
        nxt = []
        for h in frontier:
            for a in letters:
                g = h @ a
                key = canonical_key(g)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(g)
                p = degree_profile(g)
                best_t = max(best_t, abs(p.deg_t))
                best_tinv = max(best_tinv, abs(p.deg_tinv))
        frontier = nxt
        report.rows.append(GrowthRow(length, len(seen), best_t, best_tinv))
    return report


def cyclic_boundedness(g: Matrix):
    """Certified verdict for the cyclic group <g> when a closed form is known.

    Returns "BOUNDED", "UNBOUNDED" or None (no certificate available).
    Diagonal g: powers are diag(c_i^j t^(j e_i)), bounded iff every e_i = 0.
    Unipotent triangular g: g^j = sum_r C(j, r) N^r with N nilpotent, so the
    entry supports stay inside those of I, N, ..., N^(n-1).
    """
    g = g.to_ring(KT)
    n = g.n
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    if all(not g[i, j] for i, j in off):
        exps = []
        for i in range(n):
            x = g[i, i]
            if not x.is_unit():
                return None
            exps.append(x.exponents()[0])
        return "BOUNDED" if all(e == 0 for e in exps) else "UNBOUNDED"
    if all(g[i, i] == 1 for i in range(n)):
        upper = all(not g[i, j] for i, j in off if i > j)
        lower = all(not g[i, j] for i, j in off if i < j)
        if upper or lower:
            return "BOUNDED"
    return None


@dataclass(frozen=True)
class UnboundednessWitness:
    target_degree: int
    element_word: str
    element: Matrix
    profile: DegreeProfile

    @property
    def degree(self) -> int:
        """Signed degree reached: deg_t for D >= 0, -deg_{t^-1} for D < 0."""
        if self.target_degree >= 0:
            return self.profile.deg_t
        return -self.profile.deg_tinv


def certify_unbounded_embedding(spec: EmbeddingSpec, target_degree: int) -> UnboundednessWitness:
    """Element whose embedded image has a nonzero t^D component.

    The image of torus_probe(D) has vector part (0, ..., 0, t_D^-1 t^D, ...),
    so its degree profile reaches D.  Possible for every |D| <= M.
    """
    D = target_degree
    if abs(D) > spec.window:
        raise WindowError(f"|D| = {abs(D)} exceeds the window M = {spec.window}; enlarge it")
    if D == 0:
        g = Matrix.identity(spec.m)
        word = "identity"
    else:
        g = torus_probe(D, spec)
        word = f"torus_probe({D})"
    image = embed_element(g, spec)
    profile = degree_profile(image.block_matrix())
    if max(abs(profile.deg_t), abs(profile.deg_tinv)) < abs(D):
        raise AlgebraError(f"witness for D = {D} failed: profile {profile}")
    if D != 0 and not any(image.component(D)):
        raise AlgebraError(f"embedded probe has no t^{D} component")
    return UnboundednessWitness(D, word, g, profile)
