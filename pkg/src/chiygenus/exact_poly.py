"""Exact rational polynomials in ``y``, interpolation and small exact linear algebra.

Scalars are :class:`fractions.Fraction`.  Everything here is immutable and
free of floating point, so Vandermonde systems are solved bit-exactly.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import ArityError, DimensionError, DistinctNodesError, SingularMatrixError

Rational = Fraction

__all__ = [
    "Rational",
    "to_rational",
    "format_rational",
    "Polynomial",
    "ExactMatrix",
    "evaluate",
    "derivative",
    "taylor_shift",
    "taylor_matrix",
    "lagrange_interpolate",
    "vandermonde_matrix",
    "vandermonde_det",
    "solve_linear",
]


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/4"`` to a Fraction.

    Floats are rejected: they would silently smuggle rounding into an exact
    computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value) -> str:
    """Render as ``"p"`` or ``"p/q"`` in lowest terms."""
    return str(to_rational(value))


class Polynomial:
    """Univariate polynomial with rational coefficients, ascending order.

    ``coeffs[k]`` is the coefficient of ``y**k``.  Trailing zeros are stripped
    on construction, so the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def coerce(cls, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return cls([other])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def padded(self, length: int) -> list:
        """Coefficient list padded with zeros to ``length`` entries."""
        if length < len(self._coeffs):
            raise DimensionError(f"degree {self.degree} does not fit in {length} slots")
        return list(self._coeffs) + [Fraction(0)] * (length - len(self._coeffs))

    def __call__(self, a) -> Fraction:
        return evaluate(self, a)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        other = Polynomial.coerce(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other):
        return Polynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Polynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reversed(self, length: int | None = None) -> "Polynomial":
        """Coefficients reversed within ``length`` slots (default: degree + 1)."""
        length = len(self._coeffs) if length is None else length
        return Polynomial(reversed(self.padded(length)))

    def to_strings(self) -> list:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Sequence) -> "Polynomial":
        return cls(to_rational(x) for x in items)

    def __repr__(self):
        return f"Polynomial({self.to_strings()})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("y" if k == 1 else f"y^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


class ExactMatrix:
    """Rectangular matrix of Fractions (row-major, immutable)."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if rs and any(len(r) != len(rs[0]) for r in rs):
            raise DimensionError("ragged matrix rows")
        self._rows = rs

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def shape(self) -> tuple:
        return (len(self._rows), len(self._rows[0]) if self._rows else 0)

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            n, m = self.shape
            m2, p = other.shape
            if m != m2:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other._rows)) if other._rows else [()] * p
            return ExactMatrix(
                [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._rows]
            )
        vec = list(other)
        if len(vec) != self.shape[1]:
            raise DimensionError("vector length does not match matrix width")
        return [_linear_combination(row, vec) for row in self._rows]

    def det(self) -> Fraction:
        """Determinant by exact Gaussian elimination."""
        n, m = self.shape
        if n != m:
            raise DimensionError("determinant of a non-square matrix")
        a = [list(r) for r in self._rows]
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det *= a[col][col]
            for r in range(col + 1, n):
                f = a[r][col] / a[col][col]
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def __repr__(self):
        return f"ExactMatrix({[[format_rational(x) for x in r] for r in self._rows]})"


def _linear_combination(scalars, items):
    """``sum(s * x)`` that works for Fractions, Polynomials and class data."""
    total = None
    for s, x in zip(scalars, items):
        if s == 0:
            continue
        term = x * s
        total = term if total is None else total + term
    if total is None:
        return items[0] * 0 if items else Fraction(0)
    return total


def evaluate(p: Polynomial, a) -> Fraction:
    """Horner evaluation of ``p`` at the rational ``a``."""
    a = to_rational(a)
    acc = Fraction(0)
    for c in reversed(Polynomial.coerce(p).coeffs):
        acc = acc * a + c
    return acc


def derivative(p: Polynomial, k: int = 1) -> Polynomial:
    """k-fold formal derivative."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = Polynomial.coerce(p).coeffs
    if k == 0:
        return Polynomial(cs)
    # d^k y^j = j!/(j-k)! y^(j-k)
    return Polynomial(cs[j] * (factorial(j) // factorial(j - k)) for j in range(k, len(cs)))


def taylor_shift(p: Polynomial, alpha) -> list:
    """Coefficients ``[a_0, ..., a_n]`` with ``p(y) = sum a_k (y - alpha)^k``.

    Computed by repeated synthetic division by ``(y - alpha)``; this shares
    no code with :func:`taylor_matrix` or :func:`derivative`.
    """
    alpha = to_rational(alpha)
    work = list(Polynomial.coerce(p).coeffs)
    out = []
    while work:
        # one Horner pass: quotient of work / (y - alpha) and the remainder
        acc = Fraction(0)
        quotient = []
        for c in reversed(work):
            acc = acc * alpha + c
            quotient.append(acc)
        out.append(quotient.pop())
        work = quotient[::-1]
    return out


def taylor_matrix(alpha, n: int) -> ExactMatrix:
    """Upper-triangular ``M`` with ``M[p][k] = C(k, p) alpha^(k-p)``.

    ``M @ b`` maps the monomial coefficients ``b`` of a degree-``n``
    polynomial to its Taylor coefficients at ``alpha``.
    """
    alpha = to_rational(alpha)
    return ExactMatrix(
        [[comb(k, p) * alpha ** (k - p) if k >= p else 0 for k in range(n + 1)] for p in range(n + 1)]
    )


def _check_nodes(nodes: Sequence) -> list:
    nodes = [to_rational(a) for a in nodes]
    seen = {}
    for i, a in enumerate(nodes):
        if a in seen:
            raise DistinctNodesError(f"node {a} repeated at positions {seen[a]} and {i}")
        seen[a] = i
    return nodes


def lagrange_interpolate(nodes: Sequence, values: Sequence) -> Polynomial:
    """Unique polynomial of degree < len(nodes) through ``(node, value)`` pairs."""
    if len(nodes) != len(values):
        raise ArityError(f"{len(nodes)} nodes but {len(values)} values")
    if not nodes:
        raise ArityError("interpolation needs at least one node")
    nodes = _check_nodes(nodes)
    values = [to_rational(v) for v in values]
    result = Polynomial()
    for i, (ai, fi) in enumerate(zip(nodes, values)):
        if fi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, aj in enumerate(nodes):
            if j != i:
                basis = basis * Polynomial([-aj, 1])
                denom *= ai - aj
        result = result + basis * (fi / denom)
    return result


def vandermonde_matrix(nodes: Sequence) -> ExactMatrix:
    nodes = [to_rational(a) for a in nodes]
    n = len(nodes)
    return ExactMatrix([[a**k for k in range(n)] for a in nodes])


def vandermonde_det(nodes: Sequence) -> Fraction:
    """``prod_{i<j} (a_j - a_i)``."""
    nodes = [to_rational(a) for a in nodes]
    det = Fraction(1)
    for j in range(len(nodes)):
        for i in range(j):
            det *= nodes[j] - nodes[i]
    return det


def solve_linear(M: ExactMatrix, rhs: Sequence) -> list:
    """Solve ``M x = rhs`` exactly by Gauss-Jordan elimination with partial pivoting.

    ``rhs`` entries may be Fractions or any value supporting ``+``, ``-`` and
    multiplication by a Fraction (Polynomials, graded classes, homology
    vectors); the row operations are applied to them verbatim.
    """
    n, m = M.shape
    if n != m:
        raise DimensionError(f"solve_linear needs a square matrix, got {M.shape}")
    if len(rhs) != n:
        raise ArityError(f"matrix has {n} rows but right-hand side has {len(rhs)} entries")
    a = [list(r) for r in M.rows]
    b = [to_rational(x) if isinstance(x, (int, str)) else x for x in rhs]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[piv][col] == 0:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] = b[col] * inv
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = b[r] - b[col] * f
    return b
