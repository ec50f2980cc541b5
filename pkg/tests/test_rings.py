from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kmembed.errors import DivisionByZero, WindowError
from kmembed.rings import (
    Derivation,
    LaurentPolynomial,
    MultiPolynomial,
    RationalFunction,
    field_arithmetic,
    laurent_degrees,
    laurent_t,
    partial_derivative,
    support_variables,
    t,
)

x1, x2, x3 = t(1), t(2), t(3)
T = laurent_t()


# ---------------------------------------------------------------- strategies

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, indices=(-2, -1, 1, 2), max_terms=3, max_exp=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        mono = {}
        for i in draw(st.lists(st.sampled_from(indices), max_size=2)):
            mono[i] = draw(st.integers(1, max_exp))
        terms[tuple(sorted(mono.items()))] = draw(small_q)
    return MultiPolynomial(terms)


@st.composite
def rational_functions(draw, nonzero=False):
    num = draw(polys())
    if nonzero and num.is_zero():
        num = MultiPolynomial.constant(1)
    den = draw(polys())
    if den.is_zero():
        den = MultiPolynomial.constant(1)
    return RationalFunction(num, den)


@st.composite
def laurents(draw, nonzero=False):
    d = draw(st.dictionaries(st.integers(-3, 3), rational_functions(nonzero=True), max_size=3))
    if nonzero and not d:
        d = {0: RationalFunction.constant(1)}
    return LaurentPolynomial(d)


# ---------------------------------------------------------------- field_arithmetic

def test_monomial_product():
    assert field_arithmetic(x1, x1, "mul") == x1 ** 2


def test_inverse_pair():
    assert field_arithmetic(1 / x1, x1, "mul") == 1


def test_gcd_cancellation():
    f = (x1 ** 2 - 1) / (x1 - 1)
    # oracle: polynomial division (x^2 - 1) = (x + 1)(x - 1) with zero remainder
    q = MultiPolynomial({((1, 1),): 1, (): 1})
    assert q * MultiPolynomial({((1, 1),): 1, (): -1}) == MultiPolynomial({((1, 2),): 1, (): -1})
    assert field_arithmetic(f, 1, "mul") == RationalFunction(q)
    assert f.den.is_one()


def test_division_by_zero_is_distinct():
    with pytest.raises(DivisionByZero):
        field_arithmetic(x1, x1 - x1, "div")
    with pytest.raises(DivisionByZero):
        RationalFunction(1, 0)


def test_canonical_denominator_is_monic():
    f = RationalFunction(x1.num, MultiPolynomial({((2, 1),): -3}))
    _, lc = f.den.leading_term()
    assert lc == 1
    assert f == -x1 / (3 * x2)


def test_multivariate_gcd_cancellation():
    a = x1 * x2 + x3
    b = x1 - x2 ** 2
    c = x1 + 2 * x3
    f = (a * b) / (a * c)
    assert f == b / c
    assert f.num == (b / c).num


# ---------------------------------------------------------------- derivatives

def test_power_rule():
    assert partial_derivative(x1 ** 2, Derivation(1)) == 2 * x1


def test_other_variable_is_constant():
    assert partial_derivative(x2, Derivation(1)) == 0
    assert partial_derivative(RationalFunction.constant(Fraction(7, 3)), Derivation(1)) == 0


def test_quotient_rule_inverse():
    d = Derivation(1)
    f = 1 / x1
    assert partial_derivative(f, d) == -1 / x1 ** 2
    # oracle: (f * f^-1)' = f' f^-1 + f (f^-1)' = 0
    g = x1
    assert partial_derivative(f, d) * g + f * partial_derivative(g, d) == 0


def test_derivation_window():
    with pytest.raises(WindowError):
        Derivation(9)
    Derivation(9, window=9)


@settings(max_examples=60, deadline=None)
@given(rational_functions(), rational_functions(), st.sampled_from([-2, -1, 1, 2]))
def test_leibniz(f, g, i):
    d = Derivation(i)
    assert partial_derivative(f * g, d) == f * partial_derivative(g, d) + partial_derivative(f, d) * g


# ---------------------------------------------------------------- support

def test_support_examples():
    assert support_variables(RationalFunction.constant(5)) == frozenset()
    assert support_variables(x1 + t(-2)) == {1, -2}
    f = (x1 * x3) / x3
    assert support_variables(f) == {1}
    assert partial_derivative(f, Derivation(3)) == 0


@settings(max_examples=60, deadline=None)
@given(rational_functions(), polys())
def test_support_invariant_under_common_factor(f, c):
    if c.is_zero():
        c = MultiPolynomial.constant(1)
    g = RationalFunction(f.num * c, f.den * c)
    assert support_variables(g) == support_variables(f)
    exact = {i for i in range(-3, 4) if partial_derivative(f, Derivation(i)) != 0}
    assert support_variables(f) == exact


# ---------------------------------------------------------------- canonical form

@settings(max_examples=60, deadline=None)
@given(rational_functions())
def test_canonicalization_idempotent(f):
    g = RationalFunction(f.num, f.den)
    assert g.num == f.num and g.den == f.den
    assert RationalFunction(MultiPolynomial(f.num.terms), MultiPolynomial(f.den.terms)) == f


# ---------------------------------------------------------------- Laurent degrees

def test_laurent_degree_examples():
    f = LaurentPolynomial({-1: 2, 2: 3})
    assert laurent_degrees(f) == (-1, -2)
    assert laurent_degrees(LaurentPolynomial.constant(7)) == (0, 0)
    g = LaurentPolynomial({3: 1 / x1})
    assert laurent_degrees(g) == (3, -3)
    # oracle: deg_{t^-1} f = deg_t f(1/t)
    assert laurent_degrees(g.substitute_inverse())[0] == laurent_degrees(g)[1]


def test_zero_has_no_degree():
    assert laurent_degrees(LaurentPolynomial()) is None


def test_laurent_arithmetic():
    f = T + 2 * T ** -1
    assert f * T == T ** 2 + 2
    assert (T ** 3).inverse() == T ** -3
    assert str(LaurentPolynomial({-1: x2 + 3})) == "(x_2 + 3)*t^-1"


@settings(max_examples=60, deadline=None)
@given(laurents(nonzero=True), laurents(nonzero=True))
def test_valuation_additivity(f, g):
    a, b = laurent_degrees(f), laurent_degrees(g)
    assert laurent_degrees(f * g) == (a[0] + b[0], a[1] + b[1])


@settings(max_examples=60, deadline=None)
@given(laurents(nonzero=True))
def test_substitution_identity(f):
    assert laurent_degrees(f)[1] == laurent_degrees(f.substitute_inverse())[0]
