"""Independent sympy oracles, kept apart from the code under test."""
from fractions import Fraction
from itertools import combinations

import sympy

from chiygenus.exact_poly import Polynomial

Y = sympy.Symbol("y")


def to_sym(x):
    if isinstance(x, Polynomial):
        return sum((to_sym(c) * Y**k for k, c in enumerate(x.coeffs)), sympy.Integer(0))
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def from_sym_poly(expr) -> Polynomial:
    expr = sympy.expand(expr)
    if expr == 0:
        return Polynomial()
    coeffs = sympy.Poly(expr, Y).all_coeffs()[::-1]
    return Polynomial(Fraction(int(c.p), int(c.q)) for c in map(sympy.Rational, coeffs))


def elementary(roots, i):
    if i == 0:
        return sympy.Integer(1)
    return sum((sympy.Mul(*c) for c in combinations(roots, i)), sympy.Integer(0))


def truncate_total_degree(expr, gens, n):
    poly = sympy.Poly(sympy.expand(expr), *gens)
    return sum(
        (coeff * sympy.Mul(*(g**e for g, e in zip(gens, monom))) for monom, coeff in poly.terms() if sum(monom) <= n),
        sympy.Integer(0),
    )


def product_over_roots(series_coeffs, roots, n):
    """prod_i Q(a_i) with Q truncated at order n, then truncated at total degree n."""
    total = sympy.Integer(1)
    for a in roots:
        total = sympy.expand(total * sum(to_sym(c) * a**k for k, c in enumerate(series_coeffs[: n + 1])))
        total = truncate_total_degree(total, roots, n)
    return total


def class_at_roots(cls, roots):
    """Substitute c_i = e_i(roots) into a GradedClass."""
    e = [elementary(roots, i) for i in range(cls.dim_bound + 1)]
    total = sympy.Integer(0)
    for key, coeff in cls.terms.items():
        total += to_sym(coeff) * sympy.Mul(*(e[i] if i < len(e) else 0 for i in key))
    return truncate_total_degree(total, roots, cls.dim_bound)


def bott_chi_y_p1(k):
    """chi^0 = h^0 - h^1 of O(k); chi^1 uses Omega^1 = O(-2)."""
    def euler(d):
        return d + 1  # Riemann-Roch on P^1, valid for every integer d
    return Polynomial([euler(k), euler(k - 2)])


def euler_line_bundle_pn(n, m):
    """chi(P^n, O(m)) = C(m + n, n) read as a polynomial in m."""
    num = 1
    for i in range(1, n + 1):
        num *= m + i
    return Fraction(num, sympy.factorial(n))


def bott_chi_y(n, k):
    """chi_y(P^n, O(k)) from the Koszul resolution of Omega^p.

    0 -> Omega^p -> wedge^p O(-1)^(n+1) -> Omega^(p-1) -> 0 gives
    chi(Omega^p(k)) = sum_i (-1)^i C(n+1, p-i) chi(O(k - p + i)).
    """
    coeffs = []
    for p in range(n + 1):
        total = Fraction(0)
        for i in range(p + 1):
            total += (-1) ** i * sympy.binomial(n + 1, p - i) * euler_line_bundle_pn(n, k - p + i)
        coeffs.append(Fraction(int(total)))
    return Polynomial(coeffs)
