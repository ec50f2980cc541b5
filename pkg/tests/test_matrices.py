import random
from fractions import Fraction

import pytest

from kmembed.errors import DeterminantError, DimensionMismatch, NotInvertible
from kmembed.matrices import (
    LOWER,
    UPPER,
    ElementaryWord,
    Matrix,
    bruhat_decompose_sl2,
    m_matrix,
    matrix_arithmetic,
    s_matrix,
    sl2_generators,
    torus,
    u_minus,
    u_plus,
)
from kmembed.number_fields import NumberField
from kmembed.rings import K, KT, QQ, laurent_t, t

from words import random_k_element, random_nf_sl2, random_rational_sl2

T = laurent_t()


def test_identity_product():
    i2 = Matrix.identity(2)
    assert matrix_arithmetic(i2, i2, "mul") == i2


def test_det_of_laurent_torus():
    assert matrix_arithmetic(Matrix.diagonal([T, T ** -1], KT), None, "det") == 1


def test_unipotent_inverse():
    g = Matrix([[1, T + 2], [0, 1]], KT)
    assert matrix_arithmetic(g, None, "inv") == Matrix([[1, -T - 2], [0, 1]], KT)


def test_errors_are_distinct():
    with pytest.raises(NotInvertible):
        Matrix([[1, 2], [2, 4]]).inverse()
    with pytest.raises(NotInvertible):
        Matrix([[1 + T, 0], [0, 1]], KT).inverse()
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2) @ Matrix.identity(3)


def test_laurent_unit_determinant_inverse():
    g = Matrix([[T, 0], [0, 1]], KT)
    assert g @ g.inverse() == Matrix.identity(2, KT)


def test_m_of_one_by_hand():
    # oracle: multiply u+(1) u-(-1) u+(1) explicitly
    prod = u_plus(1) @ u_minus(-1) @ u_plus(1)
    assert prod == Matrix([[0, 1], [-1, 0]])
    assert m_matrix(1) == prod


def test_torus_is_product_of_two_m():
    a = t(1) + 3
    assert m_matrix(-a) @ m_matrix(1, K) == torus(a)
    assert torus(a) == Matrix([[a, 0], [0, 1 / a]])


def test_s_matrix():
    assert sl2_generators("s") == Matrix([[0, -1], [1, 0]])
    assert s_matrix() == m_matrix(-1)


def test_generator_param_errors():
    with pytest.raises(ValueError):
        sl2_generators("torus", 0)
    with pytest.raises(ValueError):
        sl2_generators("m", 0)


@pytest.mark.parametrize("kind,param", [
    ("u_plus", t(2)), ("u_minus", Fraction(3, 7)), ("m", t(1) - 1), ("s", None), ("torus", t(-1) * t(2)),
])
def test_generators_have_det_one(kind, param):
    assert sl2_generators(kind, param).det() == 1


def test_bruhat_s():
    w = bruhat_decompose_sl2(Matrix([[0, -1], [1, 0]]))
    assert w.factors == ((UPPER, -1), (LOWER, 1), (UPPER, -1))
    assert w.evaluate() == s_matrix()


def test_bruhat_worked_example():
    g = Matrix([[2, 3], [1, 2]])
    # oracle: u+(2) s u+(2) by direct multiplication
    assert u_plus(2) @ s_matrix() @ u_plus(2) == g
    w = bruhat_decompose_sl2(g)
    assert len(w) == 5
    assert w.evaluate() == g


def test_bruhat_identity():
    assert len(bruhat_decompose_sl2(Matrix.identity(2))) == 0


def test_bruhat_rejects_bad_det():
    with pytest.raises(DeterminantError):
        bruhat_decompose_sl2(Matrix([[2, 0], [0, 1]]))


def test_bruhat_round_trip_rational():
    rng = random.Random(11)
    for _ in range(200):
        g = random_rational_sl2(rng)
        w = bruhat_decompose_sl2(g)
        assert len(w) <= 11
        assert w.evaluate() == g


def test_bruhat_over_function_field_and_number_field():
    rng = random.Random(5)
    L = NumberField([1, 0, -2])
    for _ in range(15):
        for g in (random_k_element(rng), random_nf_sl2(rng, L)):
            w = bruhat_decompose_sl2(g)
            assert len(w) <= 11 and w.evaluate() == g


def test_word_drops_identity_factors():
    w = bruhat_decompose_sl2(Matrix([[1, 5], [0, 1]]))
    assert w == ElementaryWord(((UPPER, Fraction(5)),), QQ)


def test_det_multiplicative_over_rings():
    rng = random.Random(3)
    L = NumberField([1, 0, 1])
    pairs = [
        (Matrix([[1, 2, 0], [3, 1, 1], [0, 5, 2]]), Matrix([[Fraction(1, 2), 0, 1], [1, 1, 1], [2, 0, 3]])),
        (Matrix([[t(1), 1], [2, t(2)]]), Matrix([[1 / t(1), t(3)], [0, 1 + t(1)]])),
        (Matrix([[T, 1, 0], [0, 2, T ** -1], [1, 0, 1]], KT), Matrix([[1, T, T], [0, 1, 0], [T ** 2, 0, 1]], KT)),
        (Matrix([[L.gen, 1], [2, 3]]), Matrix([[1, L.gen + 1], [L.gen, 0]])),
    ]
    for a, b in pairs:
        assert (a @ b).det() == a.det() * b.det()


def test_inverse_times_matrix_is_identity():
    rng = random.Random(8)
    L = NumberField([1, 0, -3])
    mats = [random_k_element(rng) for _ in range(5)] + [random_nf_sl2(rng, L) for _ in range(5)]
    mats.append(Matrix([[1, 2, 3], [0, 1, 4], [5, 6, 0]]))
    mats.append(Matrix([[T, T + 1], [0, T ** -1]], KT))
    for a in mats:
        assert a @ a.inverse() == Matrix.identity(a.n, a.ring)
