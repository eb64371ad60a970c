"""The family x^a + y^a + x^b y^c: closed forms against the live engine.

For every a >= 2 and b + c > a these curves have an ordinary multiplicity-a
point at the origin, and their Jacobian ideals have completely explicit
reduced Groebner bases.  The Tjurina number is a four-branch polynomial in
(a, b, c) whose minimum floor((3a^2 - 2a - 4)/4) is the smallest Tjurina
number an ordinary multiplicity-a point can have at all.

This script classifies a few members, prints their predicted bases, runs
Buchberger to confirm, and tabulates the minimum for small a.
"""

from tjurina import (
    FamilyParams,
    admissible_params,
    family_case,
    min_tjurina,
    predicted_gb,
    render_poly,
    tjurina_formula,
    verify_params,
)

print("selected members:")
for (a, b, c) in [(9, 7, 3), (10, 6, 5), (9, 9, 1), (9, 8, 8), (3, 2, 2)]:
    p = FamilyParams(a, b, c)
    v = verify_params(p, check_gb=True)
    basis = ", ".join(render_poly(g) for g in predicted_gb(p))
    print(f"  (a,b,c) = ({a},{b},{c}): case {family_case(p).value}")
    print(f"    predicted basis: {basis}")
    print(f"    tau: formula {v.formula_tau}, live {v.live_tau},"
          f" basis match {v.gb_match}, LT match {v.lt_match}")

print()
print("minimum Tjurina number of an ordinary multiplicity-a point:")
print("  a | min tau | attained at (b, c) | scan agrees")
for a in range(2, 10):
    value, argmin = min_tjurina(a)
    live_min = min(verify_params(p).live_tau for p in admissible_params(a))
    print(f" {a:2d} | {value:7d} | ({argmin.b}, {argmin.c})"
          f"{' ' * (15 - len(str((argmin.b, argmin.c))))}| {live_min == value}")

# Not every value in [min, (a-1)^2] is hit by the three-term family; the
# gaps are filled by curves with one more monomial:
print()
print("gap fillers:")
from tjurina import local_tjurina, parse_poly
for expr, tau in [("x^9+y^9+x^5*y^7+x^7*y^4", 59),
                  ("x^10+y^10+x^3*y^8+x^7*y^5", 71),
                  ("x^10+y^10+x^2*y^9+x^7*y^6", 74)]:
    live, _ = local_tjurina(parse_poly(expr), (0, 0))
    print(f"  {expr}: tau = {live} (expected {tau})")
