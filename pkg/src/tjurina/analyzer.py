"""Per-point analysis of plane curve singularities.

Everything is exact and local: a point with rational coordinates is
translated to the origin and the invariants are read off ideals in
Q[x,y].

* multiplicity and ordinariness (squarefreeness of the initial form);
* the Tjurina number tau = length at O of (f, f_x, f_y) and the Milnor
  number mu = length at O of (f_x, f_y), both via truncation traces;
* symmetry order of a zero-dimensional scheme (the common length of its
  intersection with every line through O, when that is constant), decided
  symbolically by one gcd over Q[t], never by sampling slopes;
* the double-point classifier: a double point is A_n exactly when its
  Jacobian scheme is curvilinear of length n, so the stabilized
  truncation value plus the embedding dimension certify the type;
* the nodes-only criterion tau = C(d-1, 2) - g for irreducible curves of
  degree d and geometric genus g without infinitely near singular points.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .binforms import binary_form_resultant, squarefree_binary_form, upoly_gcd, upoly_trim
from .groebner import buchberger, is_zero_dimensional, leading_term_ideal
from .lengths import (
    StabilizationError,
    TruncationTrace,
    VERTICAL,
    line_restriction_length,
    local_length_at_origin,
    local_length_oracle,
)
from .poly import Polynomial, translate_to_origin

Point = tuple

# -- classification values ---------------------------------------------------


@dataclass(frozen=True)
class Classification:
    """Singularity type tag: smooth, A_n (n = tau for double points),
    ordinary or non-ordinary multiple point of the given multiplicity."""

    kind: str  # "smooth" | "A_n" | "ordinary" | "non_ordinary"
    index: int | None = None

    def __str__(self):
        if self.kind == "smooth":
            return "smooth point"
        if self.kind == "A_n":
            return "node (A_1)" if self.index == 1 else f"A_{self.index}"
        if self.kind == "ordinary":
            return f"ordinary multiple point (m = {self.index})"
        return f"non-ordinary multiple point (m = {self.index})"


@dataclass(frozen=True)
class SimplePoint:
    """Algorithm outcome: a smooth point, with its tangent line (the
    vanishing of the linear part at the point)."""

    tangent: Polynomial


@dataclass(frozen=True)
class DoubleA:
    """Algorithm outcome: a double point of type A_n."""

    n: int


@dataclass(frozen=True)
class MultiplicityAtLeastThree:
    """Algorithm outcome: multiplicity >= 3, outside the double-point case."""

    multiplicity: int


DoublePointOutcome = "SimplePoint | DoubleA | MultiplicityAtLeastThree"


@dataclass(frozen=True)
class SingularityReport:
    point: Point
    multiplicity: int
    is_on_curve: bool
    ordinary: bool | None
    tjurina: int
    milnor: int
    symmetry_order: int | None
    classification: Classification
    tjurina_trace: TruncationTrace
    milnor_trace: TruncationTrace


# -- basic local data ---------------------------------------------------------


def multiplicity_at(f: Polynomial, point: Point) -> int:
    """Least degree of a nonzero homogeneous component after translating
    the point to the origin; 0 means the point is off the curve."""
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial is undefined")
    return translate_to_origin(f, point).min_degree()


def is_ordinary(f: Polynomial, point: Point) -> bool:
    """True iff the tangent cone at a singular point consists of distinct
    lines (squarefree initial form).  Requires multiplicity >= 2."""
    if f.is_zero():
        raise ValueError("the zero polynomial does not define a curve")
    g = translate_to_origin(f, point)
    m = g.min_degree()
    if m < 2:
        raise ValueError("ordinariness is defined at singular points (multiplicity >= 2)")
    return squarefree_binary_form(g.homogeneous_component(m))


def local_tjurina(f: Polynomial, point: Point) -> tuple[int, TruncationTrace]:
    """Length at the point of the Jacobian scheme of (f, f_x, f_y).

    Zero iff the point is smooth or off the curve.  Raises
    StabilizationError if the curve is not reduced at the point.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial does not define a curve")
    g = translate_to_origin(f, point)
    gens = [g, g.partial_derivative(0), g.partial_derivative(1)]
    try:
        return local_length_at_origin(gens)
    except StabilizationError as e:
        raise StabilizationError(f"curve not reduced at {_fmt_point(point)}: {e}") from e


def local_milnor(f: Polynomial, point: Point) -> tuple[int, TruncationTrace]:
    """Length at the point of the Milnor scheme of (f_x, f_y)."""
    if f.is_zero():
        raise ValueError("the zero polynomial does not define a curve")
    g = translate_to_origin(f, point)
    gens = [g.partial_derivative(0), g.partial_derivative(1)]
    try:
        return local_length_at_origin(gens)
    except StabilizationError as e:
        raise StabilizationError(
            f"non-isolated critical point at {_fmt_point(point)}: {e}") from e


def _fmt_point(point: Point) -> str:
    return "(" + ",".join(str(c) for c in point) + ")"


# -- symmetry and slci tests ---------------------------------------------------


def k_symmetry_order(gens: Sequence[Polynomial]) -> int | None:
    """The k such that the scheme at O meets *every* line through O in
    length exactly k, or None if no such k exists.

    Writing g(x, tx) = sum_j c_j(t) x^j, the valuation along the slope-t
    line is the least j with c_j(t) != 0, which is at least
    k = min ord(g_i) always and exactly k unless t is a common root of
    the level-k coefficient polynomials.  So the answer is k iff the gcd
    over Q[t] of those coefficients is a nonzero constant and the vertical
    line also gives k.  (A gcd over Q detects all complex roots, so no
    slope is special over C either; components of the scheme away from
    the origin cannot change any valuation at O.)
    """
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        raise ValueError("need at least one nonzero generator")
    gb = buchberger(polys, verify=False)
    if not is_zero_dimensional(leading_term_ideal(gb)):
        raise ValueError("the scheme is not zero-dimensional")
    k = min(g.min_degree() for g in polys)
    level: list[list] = []
    for g in polys:
        init = g.homogeneous_component(k)
        if init.is_zero():
            continue
        coeffs = [0] * (k + 1)
        for (i, j), c in init.terms():
            coeffs[j] = c
        level.append(upoly_trim(coeffs))
    acc: list = []
    for c in level:
        acc = upoly_gcd(acc, c) if acc else list(c)
    if len(acc) != 1:  # nonconstant gcd: some complex slope exceeds k
        return None
    if line_restriction_length(polys, VERTICAL) != k:
        return None
    return k


def is_slci(f: Polynomial, point: Point) -> bool:
    """True iff the Milnor scheme at a point of multiplicity m is a local
    complete intersection of two multiplicity-(m-1) curves with no common
    tangent: both partials vanish to order exactly m-1 and their initial
    forms share no linear factor."""
    if f.is_zero():
        raise ValueError("the zero polynomial does not define a curve")
    g = translate_to_origin(f, point)
    m = g.min_degree()
    if m < 2:
        raise ValueError("slci test is defined at singular points (multiplicity >= 2)")
    gx = g.partial_derivative(0)
    gy = g.partial_derivative(1)
    if gx.is_zero() or gy.is_zero():
        return False
    if gx.min_degree() != m - 1 or gy.min_degree() != m - 1:
        return False
    init_x = gx.homogeneous_component(m - 1)
    init_y = gy.homogeneous_component(m - 1)
    return binary_form_resultant(init_x, init_y) != 0


def embedding_dimension(gens: Sequence[Polynomial]) -> int:
    """Local embedding dimension at O of a zero-dimensional scheme:
    0 for the reduced point (or empty scheme), 1 for a curvilinear tangent
    space, 2 for a fat one.  Computed as alpha_2 - 1 via the Macaulay
    oracle."""
    alpha2 = local_length_oracle(gens, 2)
    return max(0, alpha2 - 1)


# -- the double-point algorithm -------------------------------------------------


def classify_double_point(f: Polynomial, point: Point):
    """Decide whether a curve point is simple, a double point A_n, or of
    multiplicity >= 3.

    After translating the point to the origin: a nonzero linear part means
    a simple point (tangent = that linear part); a vanishing quadratic
    part means multiplicity >= 3; otherwise the point is double, and the
    stabilized truncation value n of the Jacobian ideal (f, f_x, f_y) is
    its type A_n (the Jacobian scheme of a double point is curvilinear of
    length n exactly for A_n).
    """
    if f.is_zero():
        raise ValueError("the zero polynomial does not define a curve")
    g = translate_to_origin(f, point)
    if g.constant_term() != 0:
        raise ValueError(f"point {_fmt_point(point)} is not on the curve")
    linear = g.homogeneous_component(1)
    if not linear.is_zero():
        return SimplePoint(tangent=linear)
    if g.homogeneous_component(2).is_zero():
        return MultiplicityAtLeastThree(multiplicity=g.min_degree())
    n, _trace = local_length_at_origin(
        [g, g.partial_derivative(0), g.partial_derivative(1)])
    return DoubleA(n=n)


def nodes_only_check(d: int, g: int, tau: int) -> bool:
    """For an irreducible degree-d curve of geometric genus g with no
    infinitely near singular points: nodes only iff tau = C(d-1,2) - g."""
    if d < 1 or g < 0 or tau < 0:
        raise ValueError("need d >= 1, g >= 0, tau >= 0")
    expected = comb(d - 1, 2) - g
    if expected < 0:
        raise ValueError(f"inconsistent inputs: C({d-1},2) - {g} < 0")
    return tau == expected


# -- the full report -------------------------------------------------------------


def analyze(f: Polynomial, point: Point) -> SingularityReport:
    """Complete singularity report for a curve at a rational point.

    Both local lengths are attempted even if the first one fails, so a
    non-reduced input produces one diagnostic naming everything that went
    wrong.  The symmetry order is None when the scheme is symmetric for
    no k, and also when the ambient Jacobian ideal is not zero-dimensional
    (curve non-reduced away from the point).
    """
    if f.is_zero():
        raise ValueError("the zero polynomial does not define a curve")
    if f.degree() == 0:
        raise ValueError("a nonzero constant defines the empty curve")
    g = translate_to_origin(f, point)
    m = g.min_degree()
    on_curve = m >= 1
    gx = g.partial_derivative(0)
    gy = g.partial_derivative(1)

    errors = []
    tau = mu = None
    tau_trace = mu_trace = None
    try:
        tau, tau_trace = local_length_at_origin([g, gx, gy])
    except StabilizationError as e:
        errors.append(f"tjurina: {e}")
    try:
        mu, mu_trace = local_length_at_origin([gx, gy])
    except StabilizationError as e:
        errors.append(f"milnor: {e}")
    except ValueError as e:  # constant curve: both partials vanish
        errors.append(f"milnor: {e}")
    if errors:
        raise StabilizationError(
            f"curve not reduced at {_fmt_point(point)}: " + "; ".join(errors))

    ordinary = None
    if m >= 2:
        ordinary = squarefree_binary_form(g.homogeneous_component(m))

    symmetry = None
    if m >= 2:
        try:
            symmetry = k_symmetry_order([g, gx, gy])
        except ValueError:
            symmetry = None

    if m <= 1:
        classification = Classification("smooth")
    elif m == 2:
        classification = Classification("A_n", tau)
    elif ordinary:
        classification = Classification("ordinary", m)
    else:
        classification = Classification("non_ordinary", m)

    assert tau <= mu, "Tjurina number exceeds Milnor number"
    if ordinary:
        assert mu == (m - 1) ** 2, "ordinary point with mu != (m-1)^2"

    return SingularityReport(
        point=tuple(point),
        multiplicity=m,
        is_on_curve=on_curve,
        ordinary=ordinary,
        tjurina=tau,
        milnor=mu,
        symmetry_order=symmetry,
        classification=classification,
        tjurina_trace=tau_trace,
        milnor_trace=mu_trace,
    )
