"""
The Hirzebruch class T_y and its specializations
================================================

T_y interpolates between the total Chern class (y = -1), the Todd
class (y = 0) and the L-class (y = 1).
"""

from chiygenus.graded_ring import genus_class, total_chern_class
from chiygenus.hirzebruch import (
    even_odd_parts,
    l_series,
    q_series,
    specialize,
    t_p_component,
    t_y_class,
    todd_series,
    universal_t_y,
)
from chiygenus.varieties import ProjectiveSpace, chern_model

# the power series Q_y(a) behind the class
for k, c in enumerate(q_series(3).coeffs):
    print(f"a^{k}:", c)

# weight two of the universal class, keyed by partitions of c_1, c_2
ty = universal_t_y(2)
for key, coeff in sorted(ty.terms.items()):
    print(list(key), coeff)

n = 4
ty = universal_t_y(n)
print("y = -1 is c:", specialize(ty, -1) == total_chern_class(n))
print("y = 0 is td:", specialize(ty, 0) == genus_class(todd_series(n), n))
print("y = 1 is L: ", specialize(ty, 1) == genus_class(l_series(n), n))

# on P^2 everything is a polynomial in the hyperplane class h
tangent = chern_model(ProjectiveSpace(2)).tangent
ty_p2 = t_y_class(tangent)
print("T_y(P2) in powers of h:", [str(c) for c in ty_p2.h_coefficients()])
for p in range(3):
    print(f"T^{p}:", [str(c) for c in t_p_component(ty_p2, p).h_coefficients()])

even, odd = even_odd_parts(ty_p2)
print("even part:", [str(c) for c in even.h_coefficients()])
print("odd part: ", [str(c) for c in odd.h_coefficients()])
