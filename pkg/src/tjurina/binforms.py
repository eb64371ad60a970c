"""Binary forms: common-factor tests via resultants and discriminants.

A binary form is a nonzero homogeneous polynomial in two variables; over
the complex numbers it splits into linear factors, i.e. lines through the
origin.  The questions answered here are purely about multiplicities of
those factors, and both are decidable exactly over Q:

* do two forms share a line?  (resultant test)
* does a form have a repeated line?  (discriminant test)

Forms are dehomogenized by setting x = 1, which turns them into univariate
polynomials in y; the factor x itself becomes invisible ("a root at
infinity") and is bookkept separately by the degree drop.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, Scalar

# Univariate polynomials are coefficient lists, lowest degree first,
# trailing zeros stripped; [] is the zero polynomial.
UPoly = list


def upoly_trim(u: UPoly) -> UPoly:
    while u and u[-1] == 0:
        u.pop()
    return u


def upoly_degree(u: UPoly) -> int:
    """Degree, with the convention deg 0 = -1 (internal use only)."""
    return len(u) - 1


def upoly_derivative(u: UPoly) -> UPoly:
    return upoly_trim([i * c for i, c in enumerate(u)][1:])


def upoly_divmod(u: UPoly, v: UPoly) -> tuple[UPoly, UPoly]:
    if not v:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(u)
    q = [0] * max(0, len(u) - len(v) + 1)
    dv = len(v) - 1
    lv = Fraction(v[-1])
    while len(r) - 1 >= dv and upoly_trim(r):
        dr = len(r) - 1
        if dr < dv:
            break
        f = r[-1] / lv
        q[dr - dv] = f
        for i, c in enumerate(v):
            r[dr - dv + i] -= f * c
        upoly_trim(r)
    return upoly_trim(q), r


def upoly_gcd(u: UPoly, v: UPoly) -> UPoly:
    """Monic gcd over Q via the Euclidean algorithm."""
    a, b = list(u), list(v)
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    if a:
        lead = Fraction(a[-1])
        a = [c / lead for c in a]
    return upoly_trim(a)


def sylvester_resultant(u: UPoly, v: UPoly) -> Scalar:
    """Resultant of two nonzero univariate polynomials (Sylvester determinant).

    Computed by exact fraction-based Gaussian elimination; deg 0 operands
    follow the usual convention Res(c, v) = c^deg(v).
    """
    if not u or not v:
        raise ValueError("resultant of the zero polynomial is undefined")
    n, m = len(u) - 1, len(v) - 1
    if n == 0:
        return Fraction(u[0]) ** m if m else Fraction(1)
    if m == 0:
        return Fraction(v[0]) ** n
    size = n + m
    rows = []
    uc = list(reversed(u))  # highest degree first
    vc = list(reversed(v))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in uc] + [Fraction(0)] * (size - n - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in vc] + [Fraction(0)] * (size - m - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det *= pv
        for r in range(col + 1, size):
            f = rows[r][col] / pv
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return det


def discriminant(u: UPoly) -> Scalar:
    """Discriminant of a univariate polynomial of degree >= 1, with the
    standard normalization (-1)^(n(n-1)/2) Res(u, u') / lc(u)."""
    n = len(u) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    res = sylvester_resultant(u, upoly_derivative(u))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / Fraction(u[-1])


# ---------------------------------------------------------------------------
# binary forms


def _check_binary_form(g: Polynomial) -> int:
    if g.nvars != 2:
        raise ValueError("binary forms live in 2 variables")
    if g.is_zero():
        raise ValueError("binary form must be nonzero")
    if not g.is_homogeneous():
        raise ValueError("binary form must be homogeneous")
    return g.degree()


def dehomogenize(g: Polynomial) -> UPoly:
    """g(1, y) as a univariate coefficient list, indexed by the y-exponent.

    The degree drop m - deg(g(1,y)) is the multiplicity of the factor x."""
    m = _check_binary_form(g)
    coeffs: UPoly = [0] * (m + 1)
    for (i, j), c in g.terms():
        coeffs[j] = c
    return upoly_trim(coeffs)


def binary_form_resultant(g: Polynomial, h: Polynomial) -> Scalar:
    """Nonzero iff the two forms share no linear factor over C.

    The dehomogenizations g(1,y), h(1,y) see every factor except x; the
    factor x shows up as a degree drop, and a shared x factor forces the
    result to 0 directly.
    """
    mg = _check_binary_form(g)
    mh = _check_binary_form(h)
    gu = dehomogenize(g)
    hu = dehomogenize(h)
    x_in_g = mg - (len(gu) - 1)
    x_in_h = mh - (len(hu) - 1)
    if x_in_g > 0 and x_in_h > 0:
        return Fraction(0)
    return sylvester_resultant(gu, hu)


def squarefree_binary_form(g: Polynomial) -> bool:
    """True iff a binary form of degree m has m distinct linear factors over C.

    Factor out x^e first; e >= 2 is an immediate repeated line, and what is
    left dehomogenizes with no degree drop, so its discriminant decides.
    """
    _check_binary_form(g)
    min_x = min(m[0] for m in dict(g.terms()))
    if min_x >= 2:
        return False
    if min_x == 1:
        g = Polynomial(2, {(i - 1, j): c for (i, j), c in g.terms()})
    u = dehomogenize(g)
    if len(u) - 1 < 1:
        return True
    return discriminant(u) != 0
