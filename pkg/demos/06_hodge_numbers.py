"""
Hodge numbers, Hodge-Deligne polynomials and higher Euler characteristics
=========================================================================
"""

from chiygenus.derived import higher_euler
from chiygenus.exact_poly import Polynomial
from chiygenus.varieties import K3_DIAMOND, HodgeDiamond, chi_y_from_hodge, hodge_deligne, poincare_polynomial

y = Polynomial([0, 1])
E = hodge_deligne(K3_DIAMOND)
print("E(K3; u, v) terms:", {k: str(v) for k, v in sorted(E.terms.items())})
print("E(y, -1):", E(y, -1), " chi_y:", chi_y_from_hodge(K3_DIAMOND))

# Kunneth for a curve of genus 2 times K3
C = HodgeDiamond.curve(2)
X = C * K3_DIAMOND
print("h^{p,q}(C x K3):")
for row in X.h:
    print("  ", row)
print("multiplicative:", hodge_deligne(X) == hodge_deligne(C) * E)

print("Betti numbers of K3:", [str(b) for b in poincare_polynomial(K3_DIAMOND).coeffs])
print("higher Euler characteristics:", [str(c) for c in higher_euler(K3_DIAMOND)])
