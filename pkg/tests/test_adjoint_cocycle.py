import random

import pytest

from kmembed.adjoint_cocycle import (
    EmbeddingSpec,
    LieBasis,
    SemidirectElement,
    adjoint_matrix,
    derivation_cocycle,
    embed_element,
    right_cocycle,
    semidirect_multiply,
    torus_probe,
)
from kmembed.errors import DeterminantError, DimensionMismatch, WindowError
from kmembed.matrices import Matrix, torus, u_plus
from kmembed.rings import K, KT, Derivation, LaurentPolynomial, laurent_t, support_variables, t

from words import random_k_element, random_rational_sl2

T = laurent_t()
x1 = t(1)


def lv(*coords):
    return tuple(K.coerce(c) for c in coords)


def test_basis_sl2_order():
    e, f, h = LieBasis(2).basis
    assert e == Matrix([[0, 1], [0, 0]])
    assert f == Matrix([[0, 0], [1, 0]])
    assert h == Matrix([[1, 0], [0, -1]])


def test_basis_sl3_coordinates_round_trip():
    b = LieBasis(3)
    assert b.n == 8 and len(b.basis) == 8
    for k, x in enumerate(b.basis):
        c = b.coords(x)
        assert c == tuple(1 if j == k else 0 for j in range(8))
        assert b.from_coords(c) == x.to_ring(K)


def test_adjoint_of_torus_by_hand():
    a = t(2) + 1
    g = torus(a)
    # oracle: g e g^-1 = a^2 e, g f g^-1 = a^-2 f, g h g^-1 = h
    assert adjoint_matrix(g) == Matrix.diagonal([a ** 2, a ** -2, 1], K)


def test_adjoint_of_identity():
    assert adjoint_matrix(Matrix.identity(2)) == Matrix.identity(3, K)


def test_adjoint_det_one_random():
    rng = random.Random(1)
    for _ in range(10):
        g = random_k_element(rng, indices=(1,))
        assert adjoint_matrix(g).det() == 1


def test_adjoint_rejects_bad_det():
    with pytest.raises(DeterminantError):
        adjoint_matrix(Matrix([[2, 0], [0, 1]]))


def test_cocycle_of_torus():
    g = torus(x1)
    assert derivation_cocycle(g, Derivation(1)) == lv(0, 0, 1 / x1)


def test_cocycle_of_unipotent():
    assert derivation_cocycle(u_plus(x1 ** 2), Derivation(1)) == lv(2 * x1, 0, 0)


def test_cocycle_of_constant():
    rng = random.Random(2)
    g = random_rational_sl2(rng)
    assert derivation_cocycle(g, Derivation(4)) == lv(0, 0, 0)


def test_semidirect_identity_and_inverse():
    rng = random.Random(4)
    g = random_k_element(rng)
    a = embed_element(g)
    one = SemidirectElement.identity(3)
    assert semidirect_multiply(one, a) == a
    assert semidirect_multiply(a, a.inverse()) == one
    ainv = a.ad_part.inverse()
    explicit = SemidirectElement(ainv, tuple(-x for x in ainv.to_ring(KT).apply(a.vec_part)))
    assert semidirect_multiply(a, explicit) == one


def test_semidirect_block_product_oracle():
    a = t(3)
    A = SemidirectElement(Matrix.diagonal([a ** 2, a ** -2, 1], K), (LaurentPolynomial(),) * 2 + (LaurentPolynomial(),))
    c = LaurentPolynomial({2: x1})
    B = SemidirectElement(Matrix.identity(3, K), (LaurentPolynomial(), LaurentPolynomial(), c))
    prod = semidirect_multiply(A, B)
    assert prod == SemidirectElement(A.ad_part, (LaurentPolynomial(), LaurentPolynomial(), c))
    # oracle: the (n+1)x(n+1) block matrices multiply the same way
    assert prod.block_matrix() == A.block_matrix() @ B.block_matrix()


def test_semidirect_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        semidirect_multiply(SemidirectElement.identity(3), SemidirectElement.identity(8))


def test_embed_torus_example():
    img = embed_element(torus(x1), EmbeddingSpec(2, 1))
    assert img.ad_part == Matrix.diagonal([x1 ** 2, x1 ** -2, 1], K)
    assert img.vec_part == (LaurentPolynomial(), LaurentPolynomial(), LaurentPolynomial({1: 1 / x1}))


def test_embed_constant_has_zero_vector():
    g = random_rational_sl2(random.Random(9))
    img = embed_element(g)
    assert img.ad_part == adjoint_matrix(g)
    assert all(v.is_zero() for v in img.vec_part)


def test_embed_window_violation():
    with pytest.raises(WindowError):
        embed_element(torus(t(9)), EmbeddingSpec(2, 8))


def test_homomorphism_law():
    rng = random.Random(2024)
    spec = EmbeddingSpec(2, 4)
    for _ in range(100):
        g = random_k_element(rng, indices=(1, 2))
        h = random_k_element(rng, indices=(1, 2))
        assert embed_element(g @ h, spec) == semidirect_multiply(embed_element(g, spec), embed_element(h, spec))


def test_homomorphism_law_sl3():
    rng = random.Random(7)
    spec = EmbeddingSpec(3, 3)

    def elem():
        g = Matrix.identity(3, K)
        for _ in range(3):
            i, j = rng.sample(range(3), 2)
            p = rng.choice([2, -1, t(1), 1 + t(2), t(1) * t(2)])
            e = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
            e[i][j] = p
            g = g @ Matrix(e, K)
        return g

    for _ in range(5):
        g, h = elem(), elem()
        assert embed_element(g @ h, spec) == embed_element(g, spec) @ embed_element(h, spec)
        assert embed_element(g, spec).block_matrix().det() == 1


def test_adjoint_is_homomorphism():
    rng = random.Random(12)
    for _ in range(20):
        g, h = random_k_element(rng), random_k_element(rng)
        assert adjoint_matrix(g @ h) == adjoint_matrix(g) @ adjoint_matrix(h)


def test_right_left_cocycle_consistency():
    rng = random.Random(13)
    for _ in range(20):
        g = random_k_element(rng)
        for i in (1, 2, 3):
            d = Derivation(i)
            left = derivation_cocycle(g, d)
            right = right_cocycle(g, d)
            assert adjoint_matrix(g).apply(left) == right


def test_block_matrix_in_sl_over_laurent_ring():
    rng = random.Random(14)
    for _ in range(20):
        b = embed_element(random_k_element(rng)).block_matrix()
        assert b.ring is KT
        assert b.det() == 1


def test_finite_t_support():
    rng = random.Random(15)
    for _ in range(20):
        g = random_k_element(rng)
        sup = set()
        for x in g.entries():
            sup |= support_variables(x)
        assert embed_element(g).t_support() <= sup


@pytest.mark.parametrize("i", [1, -3, 0])
def test_torus_probe_components(i):
    spec = EmbeddingSpec(2, 5)
    g = torus_probe(i, spec)
    assert g == torus(t(i))
    img = embed_element(g, spec)
    assert img.t_support() == {i}
    assert img.component(i) == lv(0, 0, 1 / t(i))


def test_torus_probe_padding_and_window():
    g = torus_probe(2, EmbeddingSpec(3, 4))
    assert g == Matrix.diagonal([t(2), 1 / t(2), 1], K)
    with pytest.raises(WindowError):
        torus_probe(5, EmbeddingSpec(2, 4))
