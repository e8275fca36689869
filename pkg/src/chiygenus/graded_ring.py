"""Truncated graded ring in Chern generators and multiplicative sequences.

A :class:`GradedClass` is a polynomial in generators ``c_1, c_2, ...``
(``c_i`` has weight ``i``) whose coefficients are polynomials in ``y``.
Monomials are keyed by partitions: ``(2, 1, 1)`` stands for ``c_2 c_1^2``
and ``()`` is the unit.  Terms heavier than ``dim_bound`` are discarded.

The same type is reused for the cohomology of a projective variety by
letting the single weight-one generator play the role of the hyperplane
class ``h``; ``h^k`` is then the partition ``(1,) * k``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Mapping

from .errors import DimensionError, SeriesDomainError
from .exact_poly import Polynomial, to_rational

__all__ = [
    "partitions",
    "normalize_partition",
    "GradedClass",
    "TruncSeries",
    "graded_mul",
    "series_log",
    "series_exp",
    "power_sum",
    "genus_class",
    "twisted_chern_character",
    "substitute",
    "total_chern_class",
]

ONE = Polynomial([1])


def normalize_partition(parts: Iterable[int]) -> tuple:
    parts = tuple(sorted((int(p) for p in parts if p), reverse=True))
    if any(p < 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n`` as non-increasing tuples, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _as_poly(c) -> Polynomial:
    return c if isinstance(c, Polynomial) else Polynomial([to_rational(c)])


class GradedClass:
    """Element of the truncated ring ``Q[y][c_1, ..., c_n] / (weight > n)``."""

    __slots__ = ("_n", "_terms")

    def __init__(self, dim_bound: int, terms: Mapping | None = None):
        if dim_bound < 0:
            raise DimensionError("dim_bound must be nonnegative")
        self._n = int(dim_bound)
        clean = {}
        for key, coeff in (terms or {}).items():
            part = normalize_partition(key)
            if sum(part) > self._n:
                raise DimensionError(f"term {part} exceeds weight bound {self._n}")
            coeff = _as_poly(coeff)
            total = clean.get(part, Polynomial()) + coeff
            if total.is_zero():
                clean.pop(part, None)
            else:
                clean[part] = total
        self._terms = clean

    # constructors -----------------------------------------------------
    @classmethod
    def one(cls, n: int) -> "GradedClass":
        return cls(n, {(): ONE})

    @classmethod
    def zero(cls, n: int) -> "GradedClass":
        return cls(n)

    @classmethod
    def generator(cls, i: int, n: int, coeff=1) -> "GradedClass":
        """The generator ``c_i`` (zero if ``i > n``)."""
        if i == 0:
            return cls(n, {(): coeff})
        if i > n:
            return cls(n)
        return cls(n, {(i,): coeff})

    @classmethod
    def from_h_powers(cls, n: int, coeffs: Iterable) -> "GradedClass":
        """``sum coeffs[k] h^k`` with ``h`` the weight-one generator; truncated at ``n``."""
        return cls(n, {(1,) * k: c for k, c in enumerate(coeffs) if k <= n})

    # accessors --------------------------------------------------------
    @property
    def dim_bound(self) -> int:
        return self._n

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, partition) -> Polynomial:
        return self._terms.get(normalize_partition(partition), Polynomial())

    def weight_part(self, w: int) -> "GradedClass":
        return GradedClass(self._n, {k: v for k, v in self._terms.items() if sum(k) == w})

    def constant_term(self) -> Polynomial:
        return self._terms.get((), Polynomial())

    def is_zero(self) -> bool:
        return not self._terms

    def y_degree(self) -> int:
        return max((c.degree for c in self._terms.values()), default=-1)

    def map_coeffs(self, fn: Callable[[Polynomial], Polynomial]) -> "GradedClass":
        return GradedClass(self._n, {k: fn(v) for k, v in self._terms.items()})

    def h_coefficients(self) -> list:
        """Coefficients of ``h^0..h^n`` when only the weight-one generator occurs."""
        out = [Polynomial()] * (self._n + 1)
        for key, c in self._terms.items():
            if any(p != 1 for p in key):
                raise DimensionError(f"term {key} is not a power of the weight-one generator")
            out[len(key)] = c
        return out

    def with_dim_bound(self, n: int) -> "GradedClass":
        """Re-truncate (or embed) into the ring with weight bound ``n``."""
        return GradedClass(n, {k: v for k, v in self._terms.items() if sum(k) <= n})

    # arithmetic -------------------------------------------------------
    def _check(self, other: "GradedClass"):
        if other._n != self._n:
            raise DimensionError(f"dim_bound mismatch: {self._n} vs {other._n}")

    def __eq__(self, other):
        if isinstance(other, GradedClass):
            return self._n == other._n and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self._n, frozenset(self._terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = GradedClass(self._n, {(): other})
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check(other)
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, Polynomial()) + v
        return GradedClass(self._n, merged)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = GradedClass(self._n, {(): other})
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            scalar = _as_poly(other)
            return self.map_coeffs(lambda c: c * scalar)
        if isinstance(other, GradedClass):
            return graded_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        result = GradedClass.one(self._n)
        for _ in range(k):
            result = result * self
        return result

    def to_json(self) -> dict:
        """``{"[2,1]": ["1", "-1/2"], ...}`` sorted by weight then partition."""
        keys = sorted(self._terms, key=lambda p: (sum(p), p))
        return {_partition_label(k): self._terms[k].to_strings() for k in keys}

    @classmethod
    def from_json(cls, n: int, doc: Mapping) -> "GradedClass":
        terms = {}
        for label, coeffs in doc.items():
            inner = label.strip()[1:-1].strip()
            key = tuple(int(x) for x in inner.split(",")) if inner else ()
            terms[key] = Polynomial.from_strings(coeffs if isinstance(coeffs, list) else [coeffs])
        return cls(n, terms)

    def __repr__(self):
        return f"GradedClass({self._n}, {self.to_json()})"


def _partition_label(part: tuple) -> str:
    return "[" + ",".join(str(p) for p in part) + "]"


def graded_mul(a: GradedClass, b: GradedClass) -> GradedClass:
    """Product in the truncated ring; weight above ``dim_bound`` is dropped."""
    a._check(b)
    n = a.dim_bound
    out: dict = {}
    for ka, va in a._terms.items():
        wa = sum(ka)
        for kb, vb in b._terms.items():
            if wa + sum(kb) > n:
                continue
            key = normalize_partition(ka + kb)
            out[key] = out.get(key, Polynomial()) + va * vb
    return GradedClass(n, out)


def substitute(cls: GradedClass, images: Mapping[int, GradedClass], n: int | None = None) -> GradedClass:
    """Replace each generator ``c_i`` by ``images[i]`` (missing images are zero)."""
    if n is None:
        n = next(iter(images.values())).dim_bound if images else cls.dim_bound
    powers: dict = {}

    def image_power(i: int, e: int) -> GradedClass:
        if (i, e) not in powers:
            base = images.get(i, GradedClass.zero(n))
            powers[(i, e)] = GradedClass.one(n) if e == 0 else image_power(i, e - 1) * base
        return powers[(i, e)]

    total = GradedClass.zero(n)
    for key, coeff in cls.terms.items():
        term = GradedClass(n, {(): coeff})
        for i in set(key):
            term = term * image_power(i, key.count(i))
            if term.is_zero():
                break
        total = total + term
    return total


def total_chern_class(n: int) -> GradedClass:
    """Universal ``1 + c_1 + ... + c_n``."""
    return GradedClass(n, {(i,) if i else (): 1 for i in range(n + 1)})


class TruncSeries:
    """Power series in ``alpha`` with ``Q[y]`` coefficients, kept to ``order``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_as_poly(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Polynomial()] * (order + 1))[: order + 1]
        if not cs:
            cs = [Polynomial()]
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, k: int) -> Polynomial:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Polynomial()

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        order = min(self.order, other.order)
        return TruncSeries([self[k] + other[k] for k in range(order + 1)])

    def __sub__(self, other):
        order = min(self.order, other.order)
        return TruncSeries([self[k] - other[k] for k in range(order + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return TruncSeries([c * other for c in self._coeffs])
        order = min(self.order, other.order)
        return TruncSeries(
            [sum((self[j] * other[k - j] for j in range(k + 1)), Polynomial()) for k in range(order + 1)]
        )

    def map_coeffs(self, fn) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self._coeffs])

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise DimensionError(f"series only known to order {self.order}")
        return TruncSeries(self._coeffs[: order + 1])

    def __repr__(self):
        return f"TruncSeries({[c.to_strings() for c in self._coeffs]})"


def series_log(s: TruncSeries) -> TruncSeries:
    """Truncated ``log s`` for ``s`` with constant term 1."""
    if s[0] != ONE:
        raise SeriesDomainError("log needs constant coefficient 1")
    n = s.order
    out = [Polynomial()] * (n + 1)
    # from s * (log s)' = s'
    for k in range(1, n + 1):
        acc = s[k] * k
        for j in range(1, k):
            acc = acc - out[j] * s[k - j] * j
        out[k] = acc / k
    return TruncSeries(out)


def series_exp(s: TruncSeries) -> TruncSeries:
    """Truncated ``exp s`` for ``s`` with constant term 0."""
    if not s[0].is_zero():
        raise SeriesDomainError("exp needs constant coefficient 0")
    n = s.order
    out = [ONE] + [Polynomial()] * n
    # from (exp s)' = s' exp s
    for k in range(1, n + 1):
        acc = Polynomial()
        for j in range(1, k + 1):
            acc = acc + s[j] * out[k - j] * j
        out[k] = acc / k
    return TruncSeries(out)


@lru_cache(maxsize=None)
def power_sum(k: int, n: int) -> GradedClass:
    """Power sum ``sum alpha_i^k`` of the Chern roots in terms of ``c_1..c_k``.

    Newton: ``p_k = sum_{i<k} (-1)^(i-1) c_i p_(k-i) + (-1)^(k-1) k c_k``.
    """
    if k < 1:
        raise ValueError("power sums start at k = 1")
    if k > n:
        raise DimensionError(f"power sum p_{k} has weight above bound {n}")
    acc = GradedClass.generator(k, n, (-1) ** (k - 1) * k)
    for i in range(1, k):
        acc = acc + GradedClass.generator(i, n, (-1) ** (i - 1)) * power_sum(k - i, n)
    return acc


def _exp_nilpotent(x: GradedClass) -> GradedClass:
    """``exp`` of a class with no weight-0 part; terminates by truncation."""
    if not x.constant_term().is_zero():
        raise SeriesDomainError("exp of a graded class needs zero weight-0 part")
    n = x.dim_bound
    total = GradedClass.one(n)
    term = GradedClass.one(n)
    for m in range(1, n + 1):
        term = term * x / m
        if term.is_zero():
            break
        total = total + term
    return total


def genus_class(Q: TruncSeries, n: int) -> GradedClass:
    """Multiplicative class ``prod_i Q(alpha_i)`` written in ``c_1..c_n``.

    With ``log Q = sum s_k alpha^k`` this is ``exp(sum_k s_k p_k)``.
    """
    if Q[0] != ONE:
        raise SeriesDomainError("genus series must have constant coefficient 1")
    if Q.order < n:
        raise DimensionError(f"series of order {Q.order} cannot build a weight-{n} class")
    logq = series_log(Q.truncate(n))
    exponent = GradedClass.zero(n)
    for k in range(1, n + 1):
        if not logq[k].is_zero():
            exponent = exponent + power_sum(k, n) * logq[k]
    return _exp_nilpotent(exponent)


def twisted_chern_character(rank: int, bundle_classes: GradedClass, n: int, lam=ONE) -> GradedClass:
    """``sum_j exp(lam * beta_j)`` for a bundle with total Chern class ``bundle_classes``.

    ``bundle_classes`` lives in whatever generators the caller uses (universal
    ``c_i``, or powers of ``h``); its weight-``i`` part is taken as ``c_i(E)``.
    ``lam = 1 + y`` gives the twisted character, ``lam = 1`` the ordinary one.
    """
    if bundle_classes.constant_term() != ONE:
        raise SeriesDomainError("bundle total Chern class must start with 1")
    lam = _as_poly(lam)
    bundle_classes = bundle_classes.with_dim_bound(n)
    images = {i: bundle_classes.weight_part(i) for i in range(1, n + 1)}
    total = GradedClass(n, {(): rank})
    lam_k = ONE
    for k in range(1, n + 1):
        lam_k = lam_k * lam
        pk = substitute(power_sum(k, n), images, n)
        total = total + pk * (lam_k / factorial(k))
    return total
