import random

import pytest

from tjurina import (
    GRLEX,
    MonomialIdeal,
    Polynomial,
    buchberger,
    divide,
    is_zero_dimensional,
    leading_term_ideal,
    parse_poly,
    s_polynomial,
)
from tjurina.poly import monomials_of_degree

P = parse_poly


# -- division -----------------------------------------------------------------


def test_divide_monomial_cases():
    q, r = divide(P("x^7"), [P("x^6")])
    assert r.is_zero() and q[0] == P("x")
    q, r = divide(P("y"), [P("x")])
    assert r == P("y") and q[0].is_zero()


def test_divide_reconstructs_input():
    f = P("x^3*y^2-x*y+7")
    basis = [P("x*y-1"), P("y^2-x")]
    quots, rem = divide(f, basis)
    total = rem
    for q, b in zip(quots, basis):
        total = total + q * b
    assert total == f
    lt = [b.leading_monomial(GRLEX) for b in basis]
    from tjurina.poly import monomial_divides
    for m, _ in rem.terms():
        assert not any(monomial_divides(l, m) for l in lt)


def test_divide_table_identity_for_b1():
    # f = (x/b) f1 + (1 - a/b) f3 + f4 with remainder zero, at (a,b,c)=(9,7,3)
    f = P("x^9+y^9+x^7*y^3")
    basis = [P("7*x^6*y^3+9*x^8"), P("3*x^7*y^2+9*y^8"), P("x^9"), P("y^9"), P("x^2*y^8")]
    _, rem = divide(f, basis)
    assert rem.is_zero()


def test_divide_requires_sane_basis():
    with pytest.raises(ValueError):
        divide(P("x"), [])
    with pytest.raises(ValueError):
        divide(P("x"), [P("0")])


def test_divide_is_deterministic_in_basis_order():
    f = P("x^2*y")
    q1, r1 = divide(f, [P("x"), P("y")])
    assert q1[0] == P("x*y") and q1[1].is_zero() and r1.is_zero()
    q2, r2 = divide(f, [P("y"), P("x")])
    assert q2[0] == P("x^2") and q2[1].is_zero() and r2.is_zero()


# -- S-polynomials ---------------------------------------------------------------


def test_s_polynomial_scaled_identity():
    # bc * S(f_x, f_y) = ac x^a - ab y^a for the family member (9, 7, 3)
    f1 = P("7*x^6*y^3+9*x^8")
    f2 = P("3*x^7*y^2+9*y^8")
    s = s_polynomial(f1, f2)
    assert s.scale(7 * 3) == P("27*x^9-63*y^9")


def test_s_polynomial_of_monomials_vanishes():
    assert s_polynomial(P("x^9"), P("y^9")).is_zero()
    f = P("x^2*y-x")
    assert s_polynomial(f, f).is_zero()


def test_s_polynomial_rejects_zero():
    with pytest.raises(ValueError):
        s_polynomial(P("0"), P("x"))


# -- Buchberger -------------------------------------------------------------------


def test_cuspidal_family_basis():
    n = 5
    f = P(f"y^2-x^{n + 1}")
    gb = buchberger([f, f.partial_derivative(0), f.partial_derivative(1)])
    assert set(gb.generators) == {P("y"), P(f"x^{n}")}


def test_b1_family_basis_matches_table():
    f = P("x^9+y^9+x^7*y^3")
    gb = buchberger([f, f.partial_derivative(0), f.partial_derivative(1)])
    expected = {
        P("x^6*y^3+9/7*x^8"),   # f_x made monic
        P("x^7*y^2+3*y^8"),     # f_y made monic
        P("x^9"),
        P("y^9"),
        P("x^2*y^8"),
    }
    assert set(gb.generators) == expected


def test_already_reduced_singleton():
    gb = buchberger([P("x^2")])
    assert gb.generators == (P("x^2"),)
    assert gb.reduced


def test_buchberger_rejects_all_zero():
    with pytest.raises(ValueError):
        buchberger([P("0"), P("0")])


def test_generators_reduce_to_zero_against_basis():
    gens = [P("x^3*y-2*x+1"), P("y^2-x"), P("x^2*y^2-y")]
    gb = buchberger(gens)
    for g in gens:
        _, rem = divide(g, list(gb.generators))
        assert rem.is_zero()


def test_random_ideal_combinations_reduce_to_zero():
    # any polynomial combination of the generators lies in the ideal, so it
    # must reduce to zero against the basis
    rng = random.Random(9001)
    gens = [P("x^2*y-1"), P("x*y^2-x"), P("y^3-x^2")]
    gb = buchberger(gens)
    basis = list(gb.generators)
    for _ in range(25):
        combo = Polynomial.zero(2)
        for g in gens:
            h = Polynomial(2, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3)})
            combo = combo + h * g
        _, rem = divide(combo, basis)
        assert rem.is_zero()


def test_reduced_basis_is_unique_under_shuffles():
    rng = random.Random(1234)
    gens = [P("x^2+y"), P("x*y-1"), P("y^3-x*y+2"), P("x^3-y^2")]
    reference = buchberger(gens).generators
    for _ in range(50):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled).generators == reference


def test_basis_sorted_by_decreasing_leading_monomial():
    gb = buchberger([P("y^2-x^6"), P("2*y"), P("6*x^5")])
    keys = [GRLEX.key(g.leading_monomial(GRLEX)) for g in gb.generators]
    assert keys == sorted(keys, reverse=True)


def _random_homogeneous(rng, nvars, degree):
    terms = {}
    for m in monomials_of_degree(nvars, degree):
        if rng.random() < 0.5:
            c = rng.randint(-5, 5)
            if c:
                terms[m] = c
    return Polynomial(nvars, terms)


def test_euler_membership_for_random_homogeneous():
    # f lies in the ideal of its partials (Euler relation), so f reduces to 0
    rng = random.Random(55)
    done = 0
    while done < 20:
        f = _random_homogeneous(rng, 3, rng.randint(1, 5))
        if f.is_zero():
            continue
        parts = [f.partial_derivative(i) for i in range(3)]
        parts = [p for p in parts if not p.is_zero()]
        gb = buchberger(parts)
        _, rem = divide(f, list(gb.generators))
        assert rem.is_zero()
        done += 1


# -- leading term ideals -----------------------------------------------------------


def test_leading_term_ideal_examples():
    f = P("x^9+y^9+x^7*y^3")
    gb = buchberger([f, f.partial_derivative(0), f.partial_derivative(1)])
    assert leading_term_ideal(gb) == MonomialIdeal(2, [(6, 3), (7, 2), (9, 0), (0, 9), (2, 8)])

    gb = buchberger([P("y"), P("x^4")])
    assert leading_term_ideal(gb) == MonomialIdeal(2, [(0, 1), (4, 0)])


def test_monomial_ideal_minimalizes():
    mi = MonomialIdeal(2, [(2, 0), (2, 1), (0, 3), (1, 3)])
    assert mi.gens == frozenset({(2, 0), (0, 3)})
    assert MonomialIdeal(2, []).gens == frozenset()


def test_is_zero_dimensional():
    assert is_zero_dimensional(MonomialIdeal(2, [(6, 3), (7, 2), (9, 0), (0, 9), (2, 8)]))
    assert not is_zero_dimensional(MonomialIdeal(2, [(1, 0)]))
    assert not is_zero_dimensional(MonomialIdeal(2, []))
    assert is_zero_dimensional(MonomialIdeal(2, [(0, 0)]))  # unit ideal
