"""Recover ``chi_y`` and ``T_{y*}`` from their values at finitely many ``y``.

A polynomial of degree at most ``n`` is pinned down by ``n + 1`` samples.
The nodes start with ``0, 1, -1`` (arithmetic genus, signature, Euler
characteristic) and continue with whatever distinct values the caller likes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ArityError, DimensionError, DistinctNodesError, ParityError
from .exact_poly import (
    ExactMatrix,
    Polynomial,
    lagrange_interpolate,
    solve_linear,
    to_rational,
    vandermonde_matrix,
)
from .graded_ring import GradedClass
from .hirzebruch import HomologyVector

__all__ = [
    "SamplePlan",
    "default_nodes",
    "inverse_vandermonde",
    "reconstruct_genus",
    "reconstruct_class",
    "reciprocal_nodes",
    "reciprocal_node_plan",
]


@dataclass(frozen=True)
class SamplePlan:
    dim: int
    nodes: tuple

    def __post_init__(self):
        nodes = tuple(to_rational(a) for a in self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if len(nodes) != self.dim + 1:
            raise ArityError(f"dimension {self.dim} needs {self.dim + 1} nodes, got {len(nodes)}")
        _check_distinct(nodes)
        prefix = (Fraction(0), Fraction(1), Fraction(-1))[: min(3, self.dim + 1)]
        if nodes[: len(prefix)] != prefix:
            raise ValueError(f"nodes must start with {list(map(str, prefix))}")

    def __iter__(self):
        return iter(self.nodes)

    def __len__(self):
        return len(self.nodes)


def _check_distinct(nodes):
    seen = set()
    for a in nodes:
        if a in seen:
            raise DistinctNodesError(f"node {a} appears more than once")
        seen.add(a)


def default_nodes(n: int) -> SamplePlan:
    """``0, 1, -1, 2, -2, 3, -3, ...`` truncated to ``n + 1`` nodes."""
    nodes = [0]
    j = 1
    while len(nodes) < n + 1:
        nodes.append(j)
        if len(nodes) < n + 1:
            nodes.append(-j)
        j += 1
    return SamplePlan(n, tuple(nodes))


def inverse_vandermonde(nodes: Sequence) -> ExactMatrix:
    """Exact inverse of ``V(a_0, ..., a_n)``; row ``p`` maps samples to the ``y^p`` coefficient."""
    V = vandermonde_matrix(nodes)
    n = len(nodes)
    cols = [solve_linear(V, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return ExactMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def _pairs(samples) -> list:
    items = samples.items() if isinstance(samples, Mapping) else samples
    return [(to_rational(a), v) for a, v in items]


def reconstruct_genus(n: int, samples) -> Polynomial:
    """Coefficients of the degree-``<= n`` polynomial through ``samples``.

    ``samples`` maps node -> value (a mapping or a sequence of pairs).  The
    Vandermonde solve is checked against Lagrange interpolation.
    """
    pairs = _pairs(samples)
    nodes = [a for a, _ in pairs]
    _check_distinct(nodes)
    if len(pairs) != n + 1:
        raise ArityError(f"degree {n} needs {n + 1} samples, got {len(pairs)}")
    values = [to_rational(v) for _, v in pairs]
    coeffs = solve_linear(vandermonde_matrix(nodes), values)
    poly = Polynomial(coeffs)
    if poly != lagrange_interpolate(nodes, values):
        raise ArithmeticError("Vandermonde and Lagrange routes disagree")
    return poly


def reconstruct_class(n: int, samples):
    """Slotwise reconstruction of a class-valued polynomial in ``y``.

    Each sample is a ``y``-free :class:`GradedClass` or :class:`HomologyVector`
    (the class specialized at that node).  The result has the same shape with
    a polynomial in ``y`` in every slot, so ``t_p_component(result, p)`` is
    ``T^p``.
    """
    pairs = _pairs(samples)
    if not pairs:
        raise ArityError("no samples")
    first = pairs[0][1]
    kind = type(first)
    if kind not in (GradedClass, HomologyVector):
        raise TypeError(f"class samples must be GradedClass or HomologyVector, not {kind.__name__}")
    space = first.dim_bound if kind is GradedClass else first.dims
    for a, v in pairs:
        if type(v) is not kind or (v.dim_bound if kind is GradedClass else v.dims) != space:
            raise DimensionError(f"sample at node {a} lives in a different graded space")
        if v.y_degree() > 0:
            raise ValueError(f"sample at node {a} still depends on y")
    keys = set()
    for _, v in pairs:
        keys.update(v.terms)
    slots = {}
    for key in keys:
        slots[key] = reconstruct_genus(n, [(a, v.coeff(key).coeff(0)) for a, v in pairs])
    return kind(space, slots)


def reciprocal_nodes(n: int) -> list:
    """``0, 1, -1, 2, ..., k, 1/2, ..., 1/k`` for ``n = 2k``."""
    if n % 2:
        raise ParityError(f"the reciprocal-node plan needs even dimension, got {n}")
    k = n // 2
    if k == 0:
        return [Fraction(0)]
    return [Fraction(0), Fraction(1), Fraction(-1)] + [Fraction(j) for j in range(2, k + 1)] + [
        Fraction(1, j) for j in range(2, k + 1)
    ]


def reciprocal_node_plan(n: int, integer_samples) -> Polynomial:
    """Reconstruct an even-dimensional ``chi_y`` from samples at ``0, 1, -1, 2..k``.

    The values at ``1/j`` are supplied by the inversion formula
    ``chi_{1/j} = j^{-2k} chi_j`` valid for compact nonsingular varieties.
    """
    nodes = reciprocal_nodes(n)
    k = n // 2
    given = dict(_pairs(integer_samples))
    needed = nodes[: len(nodes) - max(k - 1, 0)]
    if len(given) != len(needed) or set(given) != set(needed):
        raise ArityError(f"expected samples at {[str(a) for a in needed]}, got {[str(a) for a in given]}")
    pairs = [(a, given[a]) for a in needed]
    pairs += [(Fraction(1, j), Fraction(1, j ** (2 * k)) * to_rational(given[Fraction(j)])) for j in range(2, k + 1)]
    return reconstruct_genus(n, pairs)
