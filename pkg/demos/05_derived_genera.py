"""
Derived genera and Taylor expansions at y = -1
==============================================

The Taylor coefficients of chi_y at y = -1 refine the Euler characteristic.
For toric varieties they count torus orbits.
"""

from math import comb

from chiygenus.derived import (
    derived_genus,
    leibniz_product,
    libgober_wood,
    orbit_counts_from_chi_y,
    taylor_coefficients,
)
from chiygenus.varieties import CompleteIntersection, ProjectiveSpace, chern_data, chi_y

p4 = chi_y(ProjectiveSpace(4))
print("Taylor coefficients of chi_y(P4) at -1:", [str(a) for a in taylor_coefficients(p4, -1).coeffs])
print("second derived genus:", derived_genus(2, p4))

# closed forms in Chern numbers for the first few coefficients
_, numbers = chern_data(ProjectiveSpace(4))
for p in (1, 2, 3, 4):
    print(f"a_{p}: closed form {libgober_wood(p, 4, numbers, 5)}, derivative route {taylor_coefficients(p4, -1)[p]}")
# the a_4 form as usually printed has the opposite sign

quartic = CompleteIntersection(3, (4,))
_, qn = chern_data(quartic)
print("quartic a_2:", libgober_wood(2, 2, qn, 24), "=", taylor_coefficients(chi_y(quartic), -1)[2])

# orbit counts of P^3 are binomial coefficients
print("orbits of P3:", [str(c) for c in orbit_counts_from_chi_y(chi_y(ProjectiveSpace(3)), 3)])
print("expected:    ", [comb(4, p + 1) for p in range(4)])

# derived genera of a product
p1 = chi_y(ProjectiveSpace(1))
print("P1 x P1, p = 2:", leibniz_product(2, [p1, p1]), "=", derived_genus(2, p1 * p1))
