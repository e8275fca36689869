"""
Recovering chi_y from a few values
==================================

A polynomial of degree n is fixed by n + 1 values, so chi_y of an
n-dimensional variety follows from its values at 0, 1, -1 and a few more
points. Even dimensions need only about half as many thanks to the
symmetry chi_{1/y} = y^{-n} chi_y.
"""

from chiygenus.hirzebruch import specialize, t_p_component, t_y_class
from chiygenus.reconstruction import (
    default_nodes,
    inverse_vandermonde,
    reciprocal_node_plan,
    reconstruct_class,
    reconstruct_genus,
)
from chiygenus.varieties import ProjectiveSpace, catalog, chern_model, chi_y

quintic = chi_y(catalog()["quintic_threefold"])
nodes = list(default_nodes(3))
samples = {a: quintic(a) for a in nodes}
print("samples:", {str(a): str(v) for a, v in samples.items()})
print("recovered:", reconstruct_genus(3, samples))

# the inverse Vandermonde matrix turns samples into coefficients
inv = inverse_vandermonde(nodes)
for row in inv.rows:
    print([str(x) for x in row])

# P^4 from its values at 0, 1, -1, 2 alone
p4 = chi_y(ProjectiveSpace(4))
print("P4 via reciprocal nodes:", reconstruct_genus(4, {a: p4(a) for a in default_nodes(4)}))
print("                        ", reciprocal_node_plan(4, {a: p4(a) for a in (0, 1, -1, 2)}))

# whole classes are reconstructed slot by slot
ty = t_y_class(chern_model(ProjectiveSpace(2)).tangent)
rebuilt = reconstruct_class(2, [(a, specialize(ty, a)) for a in default_nodes(2)])
print("T_y(P2) rebuilt exactly:", rebuilt == ty)
print("T^2(P2):", [str(c) for c in t_p_component(rebuilt, 2).h_coefficients()])
