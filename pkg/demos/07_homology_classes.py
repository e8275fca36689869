"""
The homology class T_y* and products
====================================

T_y* caps T_y with the fundamental class. Its point coefficient recovers
chi_y, and on products it is the cross product of the factors.
"""

from chiygenus.derived import derived_class, leibniz_product
from chiygenus.hirzebruch import specialize, t_y_star
from chiygenus.varieties import ProjectiveSpace, chern_model

p1 = t_y_star(chern_model(ProjectiveSpace(1)))
p2 = t_y_star(chern_model(ProjectiveSpace(2)))
print("T_y*(P1):", p1.to_json())
print("at y = -1 (Chern class):", specialize(p1, -1).to_json())

prod = t_y_star([chern_model(ProjectiveSpace(1)), chern_model(ProjectiveSpace(2))])
print("T_y*(P1 x P2):")
for key, coeff in sorted(prod.terms.items(), reverse=True):
    print(" ", list(key), coeff)
# the zero-cycle coefficient is chi_y(P1) chi_y(P2)
print("summed by cycle dimension:", {d: str(c) for d, c in sorted(prod.by_dimension().items())})

for p in range(3):
    same = leibniz_product(p, [p1, p2]) == derived_class(p, prod)
    print(f"Leibniz rule at p = {p}:", same)
