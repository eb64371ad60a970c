"""Two quintic curves with very different singularities at the origin.

Both curves below have multiplicity 5 at O = (0,0).  The first is a union
of five distinct lines (an *ordinary* quintuple point); the second has a
doubled tangent line, so its tangent cone is not squarefree.  One might
expect the degenerate one to carry the larger Jacobian scheme, but the
lengths come out 16 vs 15: the ordinary point is the bigger one.
"""

from tjurina import analyze, local_milnor, local_tjurina, parse_poly, render_poly

O = (0, 0)

ordinary = parse_poly("x^5-y^5")
degenerate = parse_poly("x*y*(x-y)*(x+y)^2+x^6+y^6")

print("curve D:", render_poly(ordinary))
print("curve C:", render_poly(degenerate))
print()

for name, curve in [("D", ordinary), ("C", degenerate)]:
    report = analyze(curve, O)
    print(f"--- {name} at the origin ---")
    print(f"multiplicity:    {report.multiplicity}")
    print(f"ordinary:        {report.ordinary}")
    print(f"tjurina number:  {report.tjurina}")
    print(f"milnor number:   {report.milnor}")
    print(f"symmetry order:  {report.symmetry_order}")
    print(f"classification:  {report.classification}")
    print(f"truncation trace (r, alpha_r): {list(report.tjurina_trace.pairs)}")
    print()

# For an ordinary point of multiplicity m the Milnor number is always
# (m-1)^2 and the Jacobian scheme meets every line through the point in
# length exactly m-1.  The degenerate curve fails both: its Jacobian
# scheme is shorter and not symmetric at all.
tau_d, _ = local_tjurina(ordinary, O)
mu_d, _ = local_milnor(ordinary, O)
assert tau_d == mu_d == 16

tau_c, _ = local_tjurina(degenerate, O)
assert tau_c == 15
print("summary: tau(D) = 16 > tau(C) = 15, despite C being the degenerate one")
