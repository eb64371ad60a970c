from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tjurina import (
    DEGREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    parse_poly,
    partial_derivative,
    translate_to_origin,
)

P = parse_poly


def coeffs():
    return st.one_of(
        st.integers(-9, 9),
        st.fractions(min_value=-5, max_value=5, max_denominator=7),
    )


def polys(nvars=2, max_deg=4, max_terms=6):
    mono = st.tuples(*[st.integers(0, max_deg) for _ in range(nvars)])
    return st.lists(st.tuples(mono, coeffs()), max_size=max_terms).map(
        lambda ts: Polynomial(nvars, ts))


def homogeneous_polys(nvars=3, degree=3):
    from tjurina.poly import monomials_of_degree
    monos = list(monomials_of_degree(nvars, degree))
    return st.lists(st.sampled_from(monos), min_size=1, max_size=5).flatmap(
        lambda ms: st.tuples(*[coeffs() for _ in ms]).map(
            lambda cs: Polynomial(nvars, list(zip(ms, cs)))))


# -- construction and basic structure ---------------------------------------


def test_zero_polynomial_has_no_degree():
    z = Polynomial.zero(2)
    assert z.is_zero()
    assert z.degree() is None
    assert z.min_degree() is None


def test_coefficients_normalize_to_lowest_terms():
    f = Polynomial(2, {(1, 0): Fraction(4, 2)})
    assert f.coefficient((1, 0)) == 2
    g = Polynomial(2, [((0, 0), Fraction(1, 2)), ((0, 0), Fraction(1, 2))])
    assert g == 1


def test_zero_coefficients_are_dropped():
    f = Polynomial(2, {(1, 1): 1, (2, 0): 0})
    assert len(f) == 1


def test_bad_exponents_rejected():
    with pytest.raises(ValueError):
        Polynomial(2, {(1,): 1})
    with pytest.raises(ValueError):
        Polynomial(2, {(-1, 0): 1})


# -- ring laws ----------------------------------------------------------------


@given(polys(), polys(), polys())
def test_addition_associative(f, g, h):
    assert (f + g) + h == f + (g + h)


@given(polys(), polys(), polys())
def test_multiplication_distributes(f, g, h):
    assert f * (g + h) == f * g + f * h


@given(polys(), polys())
def test_multiplication_commutes(f, g):
    assert f * g == g * f


@given(polys())
def test_additive_inverse(f):
    assert f - f == Polynomial.zero(2)


@given(polys(), st.integers(0, 4))
def test_power_matches_repeated_product(f, n):
    expected = Polynomial.constant(2, 1)
    for _ in range(n):
        expected = expected * f
    assert f ** n == expected


# -- derivatives --------------------------------------------------------------


def test_partial_derivative_examples():
    f = P("x^9+y^9+x^7*y^3")
    assert partial_derivative(f, 0) == P("9*x^8+7*x^6*y^3")
    assert partial_derivative(Polynomial.constant(2, 5), 0).is_zero()
    assert partial_derivative(P("y^2-x^6"), 1) == P("2*y")


def test_partial_derivative_index_out_of_range():
    with pytest.raises(ValueError):
        P("x").partial_derivative(2)


@given(polys(), polys())
def test_leibniz_rule(f, g):
    for v in (0, 1):
        lhs = (f * g).partial_derivative(v)
        rhs = f * g.partial_derivative(v) + g * f.partial_derivative(v)
        assert lhs == rhs


@given(homogeneous_polys(nvars=3, degree=4))
def test_euler_relation(f):
    # d*f = sum_i x_i * d_i f for homogeneous f of degree d
    d = 4
    total = Polynomial.zero(3)
    for i in range(3):
        total = total + Polynomial.variable(3, i) * f.partial_derivative(i)
    assert total == f.scale(d)


# -- homogeneous components ----------------------------------------------------


def test_homogeneous_component_of_the_quintic_pair():
    f = P("x*y*(x-y)*(x+y)^2+x^6+y^6")
    assert f.homogeneous_component(5) == P("x*y*(x-y)*(x+y)^2")
    assert f.homogeneous_component(4).is_zero()
    assert P("x^2+y^3").homogeneous_component(5).is_zero()


@given(polys())
def test_components_reassemble(f):
    total = Polynomial.zero(2)
    d = f.degree()
    if d is not None:
        for k in range(d + 1):
            total = total + f.homogeneous_component(k)
    assert total == f


# -- translation ---------------------------------------------------------------


def test_translate_examples():
    assert translate_to_origin(P("y^2-(x-1)^3"), (1, 0)) == P("y^2-x^3")
    f = P("x^4*y-3*x+y^2")
    assert translate_to_origin(f, (0, 0)) == f
    assert translate_to_origin(P("x^2+y^2-1"), (1, 0)) == P("x^2+2*x+y^2")


@given(polys(max_deg=3), st.integers(-3, 3), st.integers(-3, 3))
def test_translate_evaluates_correctly(f, p, q):
    g = translate_to_origin(f, (p, q))
    assert g.constant_term() == f.evaluate((p, q))
    # translating back is the inverse
    assert translate_to_origin(g, (-p, -q)) == f


# -- monomial orders -------------------------------------------------------------


def test_grlex_compares_degree_first():
    assert GRLEX.key((0, 3)) > GRLEX.key((2, 0))
    assert GRLEX.key((2, 1)) > GRLEX.key((1, 2))


def test_lex_ignores_degree():
    assert LEX.key((1, 0)) > LEX.key((0, 9))


def test_degrevlex_vs_grlex_in_three_vars():
    # classical separating example: x z vs y^2 with x > y > z
    a, b = (1, 0, 1), (0, 2, 0)
    assert GRLEX.key(a) > GRLEX.key(b)
    assert DEGREVLEX.key(b) > DEGREVLEX.key(a)


def test_precedence_permutation():
    y_first = MonomialOrder("grlex", precedence=(1, 0))
    assert y_first.key((0, 1)) > y_first.key((1, 0))


def test_order_validation():
    with pytest.raises(ValueError):
        MonomialOrder("degree")
    with pytest.raises(ValueError):
        MonomialOrder("grlex", precedence=(0, 0))


def test_leading_monomial():
    f = P("y^2-x^3")
    assert f.leading_monomial(GRLEX) == (3, 0)
    assert f.leading_coefficient(GRLEX) == -1
    assert f.monic().leading_coefficient(GRLEX) == 1


@given(st.tuples(st.integers(0, 5), st.integers(0, 5)),
       st.tuples(st.integers(0, 5), st.integers(0, 5)),
       st.tuples(st.integers(0, 5), st.integers(0, 5)))
def test_orders_are_multiplicative_total_orders(m, n, t):
    from tjurina.poly import monomial_mul, monomial_divides
    for order in (GRLEX, LEX, DEGREVLEX):
        km, kn = order.key(m), order.key(n)
        # totality with equality only for equal monomials
        assert (km == kn) == (m == n)
        # compatibility with multiplication
        assert (km < kn) == (order.key(monomial_mul(m, t)) < order.key(monomial_mul(n, t)))
        # divisibility implies order (so 1 is the least monomial: well-order)
        if monomial_divides(m, n):
            assert km <= kn


# -- structural equality and hashing ----------------------------------------------


@given(polys())
def test_hash_is_structural(f):
    g = Polynomial(2, dict(f.terms()))
    assert f == g
    assert hash(f) == hash(g)


def test_evaluate_is_exact():
    f = P("1/3*x^2+y")
    assert f.evaluate((Fraction(1, 2), Fraction(-1, 12))) == 0
