"""
The chi_y genus of projective spaces and hypersurfaces
======================================================

chi_y is computed by pairing the universal class T_y with Chern numbers.
"""

from chiygenus import CompleteIntersection, ProjectiveSpace, chi_y
from chiygenus.hirzebruch import Bundle, chi_y_gHRR
from chiygenus.varieties import chern_model

# projective spaces give alternating sums 1 - y + y^2 - ...
for n in range(5):
    print(f"P{n}:", chi_y(ProjectiveSpace(n)))

# three special values: arithmetic genus, signature, Euler characteristic
quartic = chi_y(CompleteIntersection(3, (4,)))
print("quartic surface:", quartic)
print("  chi_0 =", quartic(0), " chi_1 =", quartic(1), " chi_-1 =", quartic(-1))

quintic = chi_y(CompleteIntersection(4, (5,)))
print("quintic threefold:", quintic, " Euler characteristic", quintic(-1))

# twisting by a line bundle O(k) on P^1
p1 = chern_model(ProjectiveSpace(1))
for k in (-2, 0, 3):
    print(f"chi_y(P1, O({k})) =", chi_y_gHRR(p1, Bundle.line(k)))
