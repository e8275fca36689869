"""Derived genera: normalized ``y``-derivatives and Taylor coefficients of ``chi_y``.

The derivative route is the reference for every Taylor coefficient.  The
Libgober-Wood closed forms for ``a_1 .. a_4`` are evaluated exactly as they
are usually printed (including the leading sign of each), so that callers
can compare them against the reference.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import DimensionError, MissingDataError
from .exact_poly import Polynomial, derivative, evaluate, taylor_matrix, taylor_shift, to_rational
from .graded_ring import normalize_partition
from .hirzebruch import ChernNumbers, HomologyVector
from .varieties import HodgeDiamond, poincare_polynomial

__all__ = [
    "TaylorExpansion",
    "derived_genus",
    "derived_class",
    "taylor_coefficients",
    "libgober_wood",
    "higher_euler",
    "euler_characteristic",
    "leibniz_product",
    "orbit_counts_from_chi_y",
]


@dataclass(frozen=True)
class TaylorExpansion:
    """``f(y) = sum coeffs[p] (y - center)^p``."""

    center: Fraction
    coeffs: tuple

    def expand(self) -> Polynomial:
        shift = Polynomial([-self.center, 1])
        total = Polynomial()
        power = Polynomial([1])
        for a in self.coeffs:
            total = total + power * a
            power = power * shift
        return total

    def __getitem__(self, p: int):
        return self.coeffs[p]

    def __len__(self):
        return len(self.coeffs)


def derived_genus(p: int, f: Polynomial) -> Polynomial:
    """``(1/p!) d^p f / dy^p``."""
    return derivative(Polynomial.coerce(f), p) / factorial(p)


def derived_class(p: int, cls):
    """Slotwise ``(1/p!) d^p/dy^p`` on a GradedClass or HomologyVector."""
    return cls.map_coeffs(lambda c: derived_genus(p, c))


def taylor_coefficients(f: Polynomial, alpha) -> TaylorExpansion:
    """``a_p = f^{(p)}(alpha) / p!``, cross-checked against the matrix and shift routes."""
    f = Polynomial.coerce(f)
    alpha = to_rational(alpha)
    coeffs = [evaluate(derived_genus(p, f), alpha) for p in range(len(f.coeffs))]
    if f.coeffs:
        by_matrix = taylor_matrix(alpha, f.degree) @ list(f.coeffs)
        if by_matrix != coeffs or taylor_shift(f, alpha) != coeffs:
            raise ArithmeticError("Taylor coefficient routes disagree")
    return TaylorExpansion(alpha, tuple(coeffs))


def _number(numbers, parts) -> Fraction:
    """Chern number of ``prod c_i`` over ``parts``; ``c_0 = 1`` is dropped."""
    key = normalize_partition(p for p in parts if p)
    if isinstance(numbers, ChernNumbers):
        return numbers[key]
    if key not in numbers:
        raise MissingDataError(f"Chern number {list(key)} is required")
    return to_rational(numbers[key])


def libgober_wood(p: int, n: int, numbers, chi) -> Fraction:
    """The closed forms for the Taylor coefficients ``a_p`` of ``chi_y`` at ``y = -1``.

    ``numbers`` is a :class:`ChernNumbers` (absent keys count as zero) or a
    plain mapping ``partition -> value`` (absent keys raise MissingDataError).
    """
    chi = to_rational(chi)
    if p not in (1, 2, 3, 4):
        raise ValueError("closed forms exist for p = 1..4")
    if p == 1:
        return -Fraction(n, 2) * chi
    if numbers is None:
        raise MissingDataError(f"a_{p} needs Chern numbers")
    if isinstance(numbers, ChernNumbers) and numbers.dim != n:
        raise DimensionError(f"Chern numbers of dimension {numbers.dim} used with n = {n}")
    if p == 4 and n < 4:
        raise DimensionError("the a_4 closed form needs n >= 4")
    c1cn1 = _number(numbers, (1, n - 1))
    if p == 2:
        return Fraction(1, 12) * (Fraction(n * (3 * n - 5), 2) * chi + c1cn1)
    if p == 3:
        return -Fraction(1, 24) * (Fraction(n * (n - 2) * (n - 3), 2) * chi + (n - 2) * c1cn1)
    # (c1^2 + 3 c2) c_{n-2}  and  (c1^3 - 3 c1 c2 + 3 c3) c_{n-3}
    quad = _number(numbers, (1, 1, n - 2)) + 3 * _number(numbers, (2, n - 2))
    cubic = _number(numbers, (1, 1, 1, n - 3)) - 3 * _number(numbers, (1, 2, n - 3)) + 3 * _number(numbers, (3, n - 3))
    bracket = (
        n * (15 * n**3 - 150 * n**2 + 485 * n - 502) * chi
        + 4 * (15 * n**2 - 85 * n + 108) * c1cn1
        + 8 * quad
        - 8 * cubic
    )
    return -Fraction(1, 5760) * bracket


def euler_characteristic(H: HodgeDiamond) -> Fraction:
    return Fraction(sum((-1) ** i * b for i, b in enumerate(H.betti())))


def higher_euler(H: HodgeDiamond) -> list:
    """``[chi, chi^(1), chi^(2), ...]``: Taylor coefficients of the Poincare polynomial at ``t = -1``."""
    return taylor_shift(poincare_polynomial(H), -1)


def _raw_derivative(x, k: int):
    if isinstance(x, Polynomial):
        return derivative(x, k)
    return x.map_coeffs(lambda c: derivative(c, k))


def _times(a, b):
    if isinstance(a, HomologyVector):
        return a.cross(b)
    return a * b


def _raw_leibniz(p: int, fs: Sequence):
    head = fs[0]
    if len(fs) == 1:
        return _raw_derivative(head, p)
    total = None
    for i in range(p + 1):
        term = _times(_raw_derivative(head, i), _raw_leibniz(p - i, fs[1:])) * comb(p, i)
        total = term if total is None else total + term
    return total


def leibniz_product(p: int, fs: Sequence):
    """``(1/p!) d^p/dy^p`` of a product, expanded by the Leibniz rule.

    ``fs`` holds polynomials (multiplied) or homology vectors (cross product).
    The binomial expansion is taken on plain derivatives and normalized once,
    so the result equals ``derived_genus(p, product)`` exactly.
    """
    fs = [Polynomial.coerce(f) if isinstance(f, (int, Fraction)) else f for f in fs]
    if not fs:
        return Polynomial([1]) if p == 0 else Polynomial()
    return _raw_leibniz(p, fs) * Fraction(1, factorial(p))


def orbit_counts_from_chi_y(f: Polynomial, n: int) -> list:
    """``(-1)^p chi_y^{(p)}(-1)`` for ``p = 0..n``; the torus-orbit f-vector for toric varieties."""
    return [(-1) ** p * evaluate(derived_genus(p, f), -1) for p in range(n + 1)]
