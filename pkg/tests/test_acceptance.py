"""Acceptance criteria 1-10, one test each.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints a
PASS/FAIL line per criterion.
"""

import random
import time
from fractions import Fraction

import pytest

from kmembed.adjoint_cocycle import EmbeddingSpec, adjoint_matrix, embed_element, semidirect_multiply
from kmembed.boundedness import certify_unbounded_embedding, growth_explore
from kmembed.matrices import Matrix, bruhat_decompose_sl2, torus, u_plus
from kmembed.number_fields import (
    MOVES,
    PRESERVES,
    RATIONAL,
    V_MEMBER,
    NumberField,
    decompose_3N0,
    double_embedding_orbit,
    expand_power_combination,
    in_congruence_subgroup,
    is_primitive,
    is_rational_matrix,
    primitive_power_search,
    vandermonde_span_solve,
)
from kmembed.rings import KT, laurent_t

from words import random_k_element, random_nf_sl2, random_rational_sl2

QI = NumberField([1, 0, 1])
QSQRT2 = NumberField([1, 0, -2])
QCBRT2 = NumberField([1, 0, 0, -2])
QSQRT23 = NumberField([1, 0, -10, 0, 1])
FIELDS = [QI, QSQRT2, QCBRT2, QSQRT23]


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.acceptance(1, "homomorphism exactness on 100 random pairs")
def test_criterion_1_homomorphism():
    rng = random.Random(1)
    spec = EmbeddingSpec(2, 8)
    with Timer() as clock:
        for _ in range(100):
            g = random_k_element(rng)
            h = random_k_element(rng)
            assert embed_element(g @ h, spec) == semidirect_multiply(embed_element(g, spec), embed_element(h, spec))
    assert clock.elapsed < 60


@pytest.mark.acceptance(2, "unboundedness witnesses reach every degree up to the window")
def test_criterion_2_unbounded_witnesses():
    with Timer() as clock:
        for window in (10, 20):
            spec = EmbeddingSpec(2, window)
            for D in range(1, window + 1):
                w = certify_unbounded_embedding(spec, D)
                assert w.degree == D
    assert clock.elapsed < 10


@pytest.mark.acceptance(3, "det Ad(g) = 1 and embedded block determinants are 1")
def test_criterion_3_determinants():
    rng = random.Random(3)
    spec = EmbeddingSpec(2, 8)
    for _ in range(100):
        g = random_k_element(rng, indices=(1,), max_len=5)
        assert adjoint_matrix(g).det() == 1
        assert embed_element(g, spec).block_matrix().det() == 1


@pytest.mark.acceptance(4, "growth tables: strict growth for the loop torus, plateau for a unipotent")
def test_criterion_4_growth():
    T = laurent_t()
    with Timer() as clock:
        torus_report = growth_explore([Matrix.diagonal([T, T ** -1], KT)], 6)
        unipotent_report = growth_explore([u_plus(T + 2 * T ** -1, KT)], 6)
    assert [r.max_abs_deg_t for r in torus_report.rows] == [1, 2, 3, 4, 5, 6]
    assert torus_report.is_strictly_growing()
    assert unipotent_report.maxima() == [(0, 0)] * 6
    assert clock.elapsed < 5


@pytest.mark.acceptance(5, "Bruhat words of at most 11 elementary factors over Q")
def test_criterion_5_bruhat_budget():
    rng = random.Random(5)
    cases = set()
    for _ in range(200):
        g = random_rational_sl2(rng)
        word = bruhat_decompose_sl2(g)
        assert len(word) <= 11
        assert word.evaluate() == g
        cases.add(g[1, 0] == 0)
    assert cases == {True, False}


@pytest.mark.acceptance(6, "certificates of at most 33 factors over Q(sqrt 2), level 2")
def test_criterion_6_bounded_generation():
    rng = random.Random(6)
    for _ in range(50):
        g = random_nf_sl2(rng, QSQRT2)
        cert = decompose_3N0(g, QSQRT2, level=2)
        assert len(cert) <= 33
        assert cert.product() == g
        for tag, f in cert.factors:
            assert tag in (RATIONAL, V_MEMBER)
            if tag == RATIONAL:
                assert is_rational_matrix(f) and f.det() == 1
            else:
                assert in_congruence_subgroup(f, 2)


@pytest.mark.acceptance(7, "primitive power search on four number fields")
def test_criterion_7_primitive_powers():
    for L in FIELDS:
        y, offset = primitive_power_search(L, cap=10000)
        assert offset < 10000
        p = y
        for _ in range(L.degree):
            assert is_primitive(p, L)
            p = p * y
    assert primitive_power_search(QI)[0] == QI.element([1, 1])
    assert primitive_power_search(QSQRT2)[0] == QSQRT2.element([1, 1])


@pytest.mark.acceptance(8, "Vandermonde span instances solve and round-trip")
def test_criterion_8_vandermonde():
    rng = random.Random(8)
    for _ in range(20):
        k = rng.randint(1, 5)
        points = rng.sample(range(-10, 11), k + 1)
        target = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(k + 1)]
        coeffs = vandermonde_span_solve(points, k, target)
        expanded = expand_power_combination(points, k, coeffs)
        expanded += [Fraction(0)] * (k + 1 - len(expanded))
        assert expanded == target
    assert list(vandermonde_span_solve([1, 2, 3], 2, [0, 1])) == [Fraction(5, 4), Fraction(-2), Fraction(3, 4)]


@pytest.mark.acceptance(9, "double embedding preserves for rational g and moves for u+(sqrt 2)")
def test_criterion_9_double_embedding():
    rng = random.Random(9)
    for _ in range(20):
        g = random_rational_sl2(rng).to_ring(QSQRT2)
        assert double_embedding_orbit(g, QSQRT2).verdict == PRESERVES
    res = double_embedding_orbit(u_plus(QSQRT2.gen, QSQRT2), QSQRT2)
    assert res.verdict == MOVES
    a = QSQRT2.gen
    assert list(res.images[0]) == [QSQRT2.one, a, QSQRT2.one, -a]


@pytest.mark.acceptance(10, "conjugation identity d^i u+(r) d^-i = u+(r x^2i)")
def test_criterion_10_conjugation():
    rng = random.Random(10)
    for L in FIELDS:
        x, _ = primitive_power_search(L)
        d = torus(x, L)
        for _ in range(10):
            r = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
            i = rng.randint(0, L.degree - 1)
            assert d ** i @ u_plus(r, L) @ d ** (-i) == u_plus(r * x ** (2 * i), L)
