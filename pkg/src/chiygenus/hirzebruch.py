"""Hirzebruch's ``Q_y`` series, the class ``T_y`` and the generalized HRR integral."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping, Sequence

from .errors import DimensionError, UnsupportedModelError
from .exact_poly import Polynomial, evaluate, to_rational
from .graded_ring import (
    GradedClass,
    TruncSeries,
    genus_class,
    normalize_partition,
    substitute,
    total_chern_class,
    twisted_chern_character,
)

__all__ = [
    "bernoulli",
    "q_series",
    "chern_series",
    "todd_series",
    "l_series",
    "ChernNumbers",
    "ChernModel",
    "Bundle",
    "HomologyVector",
    "t_y_class",
    "universal_t_y",
    "t_p_component",
    "specialize",
    "even_odd_parts",
    "integrate",
    "chi_y_gHRR",
    "t_y_star",
]

Y = Polynomial([0, 1])
ONE_PLUS_Y = Polynomial([1, 1])


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number ``B_m`` with the convention ``B_1 = -1/2``."""
    if m == 0:
        return Fraction(1)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0
    return -sum((comb(m + 1, j) * bernoulli(j) for j in range(m)), Fraction(0)) / (m + 1)


def _u_over_one_minus_exp(order: int) -> list:
    """Coefficients of ``u / (1 - e^{-u})`` = ``sum (-1)^k B_k u^k / k!``."""
    return [(-1) ** k * bernoulli(k) / factorial(k) for k in range(order + 1)]


@lru_cache(maxsize=None)
def q_series(order: int) -> TruncSeries:
    """``Q_y(a) = a(1+y) / (1 - e^{-a(1+y)}) - a y`` through ``a^order``."""
    coeffs = []
    power = Polynomial([1])
    for k, b in enumerate(_u_over_one_minus_exp(order)):
        coeffs.append(power * b)
        power = power * ONE_PLUS_Y
    if order >= 1:
        coeffs[1] = coeffs[1] - Y
    return TruncSeries(coeffs)


# The three classical series, built without reference to q_series.
def chern_series(order: int) -> TruncSeries:
    return TruncSeries([1, 1], order)


def todd_series(order: int) -> TruncSeries:
    """``a / (1 - e^{-a})``."""
    return TruncSeries(_u_over_one_minus_exp(order))


def l_series(order: int) -> TruncSeries:
    """``a / tanh a = sum 2^{2k} B_{2k} a^{2k} / (2k)!``."""
    return TruncSeries(
        [Fraction(2**k) * bernoulli(k) / factorial(k) if k % 2 == 0 else 0 for k in range(order + 1)]
    )


@dataclass(frozen=True)
class ChernNumbers:
    """Degree-``dim`` integration functional on monomials in Chern classes."""

    dim: int
    numbers: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, val in dict(self.numbers).items():
            part = normalize_partition(key)
            if sum(part) != self.dim:
                raise DimensionError(f"Chern number key {part} does not have weight {self.dim}")
            clean[part] = to_rational(val)
        object.__setattr__(self, "numbers", clean)

    def __getitem__(self, partition) -> Fraction:
        return self.numbers.get(normalize_partition(partition), Fraction(0))

    def __hash__(self):
        return hash((self.dim, frozenset(self.numbers.items())))

    @classmethod
    def fundamental(cls, n: int, degree) -> "ChernNumbers":
        """Functional sending ``h^n`` to ``degree`` (for classes written in ``h``)."""
        return cls(n, {(1,) * n: degree})


@dataclass(frozen=True)
class Bundle:
    """Vector bundle given by its rank and total Chern class ``1 + c_1 h + c_2 h^2 + ...``."""

    rank: int
    chern: tuple = ()

    def total_class(self, n: int) -> GradedClass:
        return GradedClass.from_h_powers(n, [1, *self.chern])

    @classmethod
    def line(cls, k) -> "Bundle":
        return cls(1, (k,))

    @classmethod
    def trivial(cls, r: int) -> "Bundle":
        return cls(r, ())


@dataclass(frozen=True)
class ChernModel:
    """A smooth projective variety with cohomology generated (for our purposes) by ``h``.

    ``tangent`` is the total Chern class of ``TX`` in powers of ``h``;
    ``degree`` is ``int h^n``; ``numbers`` are the Chern numbers.
    """

    dim: int
    tangent: GradedClass
    numbers: ChernNumbers
    degree: Fraction = Fraction(1)
    name: str = ""


@lru_cache(maxsize=None)
def universal_t_y(n: int) -> GradedClass:
    """``T_y`` in the universal generators ``c_1..c_n``."""
    return genus_class(q_series(n), n)


def t_y_class(tangent_classes: GradedClass, n: int | None = None) -> GradedClass:
    """``T_y(TX) = prod Q_y(alpha_i)`` evaluated on the given total Chern class."""
    n = tangent_classes.dim_bound if n is None else n
    if tangent_classes.constant_term() != Polynomial([1]):
        raise DimensionError("tangent total Chern class must have weight-0 part 1")
    universal = universal_t_y(n)
    tangent_classes = tangent_classes.with_dim_bound(n)
    if tangent_classes == total_chern_class(n):
        return universal
    images = {i: tangent_classes.weight_part(i) for i in range(1, n + 1)}
    return substitute(universal, images, n)


def t_p_component(cls: GradedClass, p: int) -> GradedClass:
    """The ``y``-free class multiplying ``y^p``."""
    return cls.map_coeffs(lambda c: Polynomial([c.coeff(p)]))


def specialize(cls, y0):
    """Substitute ``y = y0`` in every coefficient (classes, homology vectors, polynomials)."""
    y0 = to_rational(y0)
    if isinstance(cls, Polynomial):
        return Polynomial([evaluate(cls, y0)])
    return cls.map_coeffs(lambda c: Polynomial([evaluate(c, y0)]))


def even_odd_parts(cls):
    """``(sum T^{2k}, sum T^{2k+1})`` as ``((L + c)/2, (L - c)/2)``."""
    at_one = specialize(cls, 1)
    at_minus_one = specialize(cls, -1)
    half = Fraction(1, 2)
    return (at_one + at_minus_one) * half, (at_one - at_minus_one) * half


def integrate(numbers: ChernNumbers, cls: GradedClass) -> Polynomial:
    """Pair the weight-``n`` part of ``cls`` with the Chern numbers."""
    if cls.dim_bound != numbers.dim:
        raise DimensionError(f"class of weight bound {cls.dim_bound} integrated over dimension {numbers.dim}")
    total = Polynomial()
    for key, coeff in cls.terms.items():
        if sum(key) == numbers.dim:
            value = numbers[key]
            if value:
                total = total + coeff * value
    return total


def chi_y_gHRR(model: ChernModel, bundle: Bundle | None = None) -> Polynomial:
    """``chi_y(X, E) = int_X T_y(TX) ch_{(1+y)}(E)``.

    Without a bundle the universal class is paired with the Chern numbers.
    With a bundle everything is written in powers of ``h`` and integrated
    against ``h^n -> degree``.
    """
    n = model.dim
    if bundle is None:
        return integrate(model.numbers, universal_t_y(n))
    if model.tangent is None:
        raise UnsupportedModelError("bundle twisting needs a tangent class in powers of h")
    ty = t_y_class(model.tangent, n)
    ch = twisted_chern_character(bundle.rank, bundle.total_class(n), n, ONE_PLUS_Y)
    return integrate(ChernNumbers.fundamental(n, model.degree), ty * ch)


class HomologyVector:
    """Homology class of a product ``X_1 x ... x X_m`` with ``Q[y]`` coefficients.

    Keys are tuples ``(k_1, ..., k_m)``; the key stands for the cross product
    of ``h^{n_i - k_i} cap [X_i]``, a cycle of complex dimension ``sum k_i``.
    ``dims`` holds ``(n_1, ..., n_m)``.  A point is ``dims == ()``.
    """

    __slots__ = ("_dims", "_terms")

    def __init__(self, dims: Sequence[int], terms: Mapping | None = None):
        self._dims = tuple(int(d) for d in dims)
        clean = {}
        for key, coeff in (terms or {}).items():
            key = tuple(int(k) for k in key)
            if len(key) != len(self._dims) or any(not 0 <= k <= d for k, d in zip(key, self._dims)):
                raise DimensionError(f"cycle {key} does not fit in dims {self._dims}")
            coeff = coeff if isinstance(coeff, Polynomial) else Polynomial([coeff])
            total = clean.get(key, Polynomial()) + coeff
            if total.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = total
        self._terms = clean

    @property
    def dims(self) -> tuple:
        return self._dims

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, key) -> Polynomial:
        return self._terms.get(tuple(key), Polynomial())

    def is_zero(self) -> bool:
        return not self._terms

    def y_degree(self) -> int:
        return max((c.degree for c in self._terms.values()), default=-1)

    def map_coeffs(self, fn) -> "HomologyVector":
        return HomologyVector(self._dims, {k: fn(v) for k, v in self._terms.items()})

    def by_dimension(self) -> dict:
        """Collect coefficients by total cycle dimension."""
        out: dict = {}
        for key, c in self._terms.items():
            out[sum(key)] = out.get(sum(key), Polynomial()) + c
        return out

    def _check(self, other):
        if not isinstance(other, HomologyVector) or other._dims != self._dims:
            raise DimensionError("homology vectors live in different spaces")

    def __eq__(self, other):
        if isinstance(other, HomologyVector):
            return self._dims == other._dims and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self._dims, frozenset(self._terms.items())))

    def __add__(self, other):
        self._check(other)
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, Polynomial()) + v
        return HomologyVector(self._dims, merged)

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.map_coeffs(lambda c: c * other)
        return NotImplemented

    __rmul__ = __mul__

    def cross(self, other: "HomologyVector") -> "HomologyVector":
        """Cross product; coefficients multiply as polynomials in ``y``."""
        terms: dict = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                key = ka + kb
                terms[key] = terms.get(key, Polynomial()) + va * vb
        return HomologyVector(self._dims + other._dims, terms)

    def to_json(self) -> dict:
        keys = sorted(self._terms, key=lambda k: (-sum(k), k))
        return {"[" + ",".join(map(str, k)) + "]": self._terms[k].to_strings() for k in keys}

    def __repr__(self):
        return f"HomologyVector({self._dims}, {self.to_json()})"


def _single_t_y_star(model: ChernModel) -> HomologyVector:
    n = model.dim
    if model.tangent is None:
        raise UnsupportedModelError(f"{model.name or 'model'} has no cohomology model in h")
    coeffs = t_y_class(model.tangent, n).h_coefficients()
    return HomologyVector((n,), {(n - i,): c for i, c in enumerate(coeffs)})


def t_y_star(models) -> HomologyVector:
    """``T_{y*}(X) = T_y(TX) cap [X]`` indexed by cycle dimension.

    ``models`` is one :class:`ChernModel` or a sequence of them (a product).
    """
    if isinstance(models, ChernModel):
        return _single_t_y_star(models)
    if not isinstance(models, (list, tuple)) or not all(isinstance(m, ChernModel) for m in models):
        raise UnsupportedModelError(f"cannot build a homology class for {models!r}")
    out = HomologyVector((), {(): 1})
    for m in models:
        out = out.cross(_single_t_y_star(m))
    return out
