"""Classifying double points by the length of their Jacobian scheme.

A double point of a plane curve is of type A_n exactly when the Jacobian
scheme at the point is curvilinear of length n.  That turns classification
into a stabilization loop: compute alpha_r = dim A/((f, f_x, f_y) + m^r)
for growing r and stop at the first repeat.  The normal forms y^2 - x^(n+1)
walk the whole ladder: node, cusp, tacnode, ...
"""

from tjurina import (
    buchberger,
    classify_double_point,
    embedding_dimension,
    local_length_at_origin,
    parse_poly,
    render_poly,
)

O = (0, 0)

print("the A_n ladder on normal forms y^2 - x^(n+1):")
for n in range(1, 9):
    f = parse_poly(f"y^2-x^{n + 1}")
    outcome = classify_double_point(f, O)
    gens = [f, f.partial_derivative(0), f.partial_derivative(1)]
    gb = buchberger(gens)
    basis = ", ".join(render_poly(g) for g in gb.generators)
    print(f"  n = {n}: {outcome} | jacobian ideal = ({basis})"
          f" | embedding dim {embedding_dimension(gens)}")

# The same loop run by hand on the tacnode, showing the alpha_r trace:
f = parse_poly("y^2-x^4")
value, trace = local_length_at_origin([f, f.partial_derivative(0), f.partial_derivative(1)])
print()
print("tacnode trace:", list(trace.pairs), "-> tau =", value)

# The classifier also recognizes the other two outcomes of the algorithm:
print()
print("y - x^2 at O:  ", classify_double_point(parse_poly("y-x^2"), O))
print("x^5 - y^5 at O:", classify_double_point(parse_poly("x^5-y^5"), O))

# It works at any rational point, not just the origin:
print("y^2-(x-2)^5 at (2,0):", classify_double_point(parse_poly("y^2-(x-2)^5"), (2, 0)))
