"""Variety descriptors, the built-in catalog, and every route to ``chi_y``.

Descriptors are small frozen dataclasses.  Smooth projective models
(projective spaces and complete intersections) carry Chern data and go
through the Hirzebruch-Riemann-Roch integral; the other kinds reach
``chi_y`` through Hodge numbers, low-dimensional invariants, torus-orbit
counts, products, or a user-supplied polynomial.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Mapping, Sequence, Union

from .errors import ModelConstraintError, ParseError, SchemaError, UnsupportedModelError
from .exact_poly import Polynomial, evaluate, format_rational, to_rational
from .graded_ring import GradedClass, partitions
from .hirzebruch import Bundle, ChernModel, ChernNumbers, HomologyVector, chi_y_gHRR, t_y_star

__all__ = [
    "ProjectiveSpace",
    "CompleteIntersection",
    "HodgeDiamond",
    "Invariants",
    "ToricOrbits",
    "Product",
    "RawChiY",
    "VarietyDescriptor",
    "ChernNumbers",
    "chern_data",
    "chern_model",
    "chi_y",
    "chi_y_routes",
    "chi_y_from_hodge",
    "hodge_deligne",
    "HodgeDeligne",
    "chi_y_toric",
    "chi_y_invariants",
    "chi_y_curve_surface_product",
    "poincare_polynomial",
    "homology_class",
    "parse_descriptor",
    "descriptor_to_json",
    "dimension",
    "catalog",
    "CATALOG_DIAMONDS",
]


@dataclass(frozen=True)
class ProjectiveSpace:
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ModelConstraintError("projective space dimension must be nonnegative")


@dataclass(frozen=True)
class CompleteIntersection:
    """Smooth complete intersection of hypersurfaces of ``degrees`` in ``P^ambient_dim``."""

    ambient_dim: int
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 1 for d in self.degrees):
            raise ModelConstraintError(f"hypersurface degrees must be >= 1, got {self.degrees}")
        if self.ambient_dim - len(self.degrees) < 0:
            raise ModelConstraintError("more hypersurfaces than the ambient dimension")

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.degrees)


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers ``h[p][q]`` of a smooth compact variety of dimension ``dim``."""

    dim: int
    h: tuple

    def __post_init__(self):
        n = self.dim
        rows = tuple(tuple(int(x) for x in row) for row in self.h)
        object.__setattr__(self, "h", rows)
        if n < 0 or len(rows) != n + 1 or any(len(r) != n + 1 for r in rows):
            raise ModelConstraintError(f"Hodge table must be {n + 1}x{n + 1}")
        for p in range(n + 1):
            for q in range(n + 1):
                if rows[p][q] < 0:
                    raise ModelConstraintError(f"negative Hodge number h[{p}][{q}]")
                if rows[p][q] != rows[q][p]:
                    raise ModelConstraintError(f"Hodge symmetry fails at ({p},{q})")
                if rows[p][q] != rows[n - p][n - q]:
                    raise ModelConstraintError(f"Serre duality fails at ({p},{q})")
        if rows[0][0] < 1:
            raise ModelConstraintError("h[0][0] must be at least 1")

    @classmethod
    def point(cls) -> "HodgeDiamond":
        return cls(0, ((1,),))

    @classmethod
    def projective_space(cls, n: int) -> "HodgeDiamond":
        return cls(n, tuple(tuple(int(p == q) for q in range(n + 1)) for p in range(n + 1)))

    @classmethod
    def curve(cls, genus: int) -> "HodgeDiamond":
        return cls(1, ((1, genus), (genus, 1)))

    def __mul__(self, other: "HodgeDiamond") -> "HodgeDiamond":
        """Kunneth: Hodge numbers of the product."""
        n = self.dim + other.dim
        table = [[0] * (n + 1) for _ in range(n + 1)]
        for a in range(self.dim + 1):
            for b in range(self.dim + 1):
                for c in range(other.dim + 1):
                    for d in range(other.dim + 1):
                        table[a + c][b + d] += self.h[a][b] * other.h[c][d]
        return HodgeDiamond(n, tuple(map(tuple, table)))

    def betti(self) -> list:
        return [sum(self.h[p][i - p] for p in range(self.dim + 1) if 0 <= i - p <= self.dim) for i in range(2 * self.dim + 1)]


@dataclass(frozen=True)
class Invariants:
    """Curve or surface described by arithmetic genus, Euler characteristic and signature."""

    dim: int
    chi_a: Fraction
    euler: Fraction
    signature: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("chi_a", "euler", "signature"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.dim not in (1, 2):
            raise ModelConstraintError(f"invariant models exist for dim 1 and 2, not {self.dim}")
        if self.dim == 1:
            if self.signature != 0:
                raise ModelConstraintError("a curve has signature 0")
            if self.chi_a != self.euler / 2:
                raise ModelConstraintError(
                    f"a curve needs chi_a = euler/2, got chi_a={self.chi_a}, euler={self.euler}"
                )


@dataclass(frozen=True)
class ToricOrbits:
    """Toric variety given by its f-vector: ``orbit_counts[k]`` = number of k-dimensional orbits."""

    orbit_counts: tuple

    def __post_init__(self):
        counts = tuple(int(f) for f in self.orbit_counts)
        object.__setattr__(self, "orbit_counts", counts)
        if not counts:
            raise ModelConstraintError("orbit counts may not be empty")
        if any(f < 0 for f in counts):
            raise ModelConstraintError("orbit counts must be nonnegative")
        if counts[-1] < 1:
            raise ModelConstraintError("the open orbit count must be at least 1")

    @property
    def dim(self) -> int:
        return len(self.orbit_counts) - 1


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def dim(self) -> int:
        return sum(dimension(f) for f in self.factors)


@dataclass(frozen=True)
class RawChiY:
    """A user-supplied ``chi_y`` polynomial (e.g. for a singular variety)."""

    poly: Polynomial
    dim_hint: int | None = None

    @property
    def dim(self) -> int:
        return self.dim_hint if self.dim_hint is not None else max(self.poly.degree, 0)


VarietyDescriptor = Union[
    ProjectiveSpace, CompleteIntersection, HodgeDiamond, Invariants, ToricOrbits, Product, RawChiY
]


def dimension(d: VarietyDescriptor) -> int:
    return d.dim


# -- Chern data ---------------------------------------------------------------


def _tangent_h_coeffs(ambient: int, degrees: Sequence[int], n: int) -> list:
    """Coefficients of ``(1+h)^(N+1) / prod(1 + d h)`` through ``h^n``."""
    coeffs = [Fraction(comb(ambient + 1, k)) for k in range(n + 1)]
    for d in degrees:
        # multiply by 1/(1 + d h) = sum (-d h)^k, valid because the constant term is 1
        inv = [Fraction((-d) ** k) for k in range(n + 1)]
        coeffs = [sum((coeffs[j] * inv[k - j] for j in range(k + 1)), Fraction(0)) for k in range(n + 1)]
    return coeffs


def chern_data(d: VarietyDescriptor) -> tuple:
    """``(total Chern class of TX in powers of h, Chern numbers)``."""
    if isinstance(d, ProjectiveSpace):
        ambient, degrees = d.dim, ()
    elif isinstance(d, CompleteIntersection):
        ambient, degrees = d.ambient_dim, d.degrees
    else:
        raise UnsupportedModelError(f"no Chern data for {type(d).__name__}")
    n = ambient - len(degrees)
    coeffs = _tangent_h_coeffs(ambient, degrees, n)
    deg = prod(degrees) if degrees else 1
    numbers = {}
    for lam in partitions(n):
        value = deg * prod((coeffs[i] for i in lam), start=Fraction(1))
        if value:
            numbers[lam] = value
    return GradedClass.from_h_powers(n, coeffs), ChernNumbers(n, numbers)


def chern_model(d: VarietyDescriptor) -> ChernModel:
    tangent, numbers = chern_data(d)
    degree = prod(d.degrees) if isinstance(d, CompleteIntersection) and d.degrees else 1
    return ChernModel(numbers.dim, tangent, numbers, Fraction(degree), name=_short_name(d))


def _short_name(d) -> str:
    if isinstance(d, ProjectiveSpace):
        return f"P{d.dim}"
    if isinstance(d, CompleteIntersection):
        return f"X{list(d.degrees)} in P{d.ambient_dim}"
    return type(d).__name__


def homology_class(d: VarietyDescriptor) -> HomologyVector:
    """``T_{y*}`` for projective spaces, complete intersections and their products."""
    if isinstance(d, (ProjectiveSpace, CompleteIntersection)):
        return t_y_star(chern_model(d))
    if isinstance(d, Product):
        models = []
        for f in d.factors:
            if not isinstance(f, (ProjectiveSpace, CompleteIntersection)):
                raise UnsupportedModelError(f"no cohomology model for factor {type(f).__name__}")
            models.append(chern_model(f))
        return t_y_star(models)
    raise UnsupportedModelError(f"no cohomology model for {type(d).__name__}")


# -- chi_y routes ---------------------------------------------------------------


def chi_y_from_hodge(H: HodgeDiamond) -> Polynomial:
    """``sum_p (sum_q (-1)^q h^{p,q}) y^p``."""
    return Polynomial(sum((-1) ** q * H.h[p][q] for q in range(H.dim + 1)) for p in range(H.dim + 1))


class HodgeDeligne:
    """Two-variable polynomial ``sum h^{p,q} u^p v^q``."""

    def __init__(self, terms: Mapping):
        self.terms = {k: Fraction(v) for k, v in terms.items() if v}

    def __eq__(self, other):
        return isinstance(other, HodgeDeligne) and self.terms == other.terms

    def __mul__(self, other: "HodgeDeligne") -> "HodgeDeligne":
        out: dict = {}
        for (p, q), a in self.terms.items():
            for (r, s), b in other.terms.items():
                out[(p + r, q + s)] = out.get((p + r, q + s), 0) + a * b
        return HodgeDeligne(out)

    def __call__(self, u, v):
        """Substitute rationals or polynomials in ``y`` for ``u`` and ``v``."""
        u = Polynomial.coerce(u if isinstance(u, Polynomial) else to_rational(u))
        v = Polynomial.coerce(v if isinstance(v, Polynomial) else to_rational(v))
        total = Polynomial()
        for (p, q), c in self.terms.items():
            total = total + (u**p) * (v**q) * c
        return total

    def __repr__(self):
        return f"HodgeDeligne({ {k: str(v) for k, v in sorted(self.terms.items())} })"


def hodge_deligne(H: HodgeDiamond) -> HodgeDeligne:
    # pure weight: the (-1)^i and (-1)^(p+q) signs cancel, so every coefficient is h^{p,q}
    return HodgeDeligne({(p, q): H.h[p][q] for p in range(H.dim + 1) for q in range(H.dim + 1)})


def poincare_polynomial(H: HodgeDiamond) -> Polynomial:
    """``sum b_i t^i`` with ``b_i = sum_{p+q=i} h^{p,q}`` (returned as a Polynomial in ``t``)."""
    return Polynomial(H.betti())


def chi_y_toric(f: Sequence[int]) -> Polynomial:
    """``sum_k f_k (-1)^k (1+y)^k``: each k-dimensional orbit is a copy of ``(C*)^k``."""
    if not len(f):
        raise ModelConstraintError("orbit counts may not be empty")
    torus = Polynomial([-1, -1])
    total = Polynomial()
    for k, count in enumerate(f):
        if count < 0:
            raise ModelConstraintError("orbit counts must be nonnegative")
        total = total + (torus**k) * count
    return total


def _curve_factor(chi_a, euler) -> Polynomial:
    return Polynomial([to_rational(chi_a), -to_rational(euler) / 2])


def _surface_factor(chi_a, euler, signature) -> Polynomial:
    chi_a, euler, signature = map(to_rational, (chi_a, euler, signature))
    return Polynomial([chi_a, (signature - euler) / 2, (signature + euler - 2 * chi_a) / 2])


def chi_y_invariants(inv: Invariants) -> Polynomial:
    if inv.dim == 1:
        return _curve_factor(inv.chi_a, inv.euler)
    return _surface_factor(inv.chi_a, inv.euler, inv.signature)


def chi_y_curve_surface_product(curves: Sequence = (), surfaces: Sequence = ()) -> Polynomial:
    """Closed form for ``C_1 x ... x C_s x S_1 x ... x S_t``.

    ``curves`` holds ``(chi_a, euler)`` pairs, ``surfaces`` holds
    ``(chi_a, euler, signature)`` triples.
    """
    total = Polynomial([1])
    for chi_a, euler in curves:
        total = total * _curve_factor(chi_a, euler)
    for chi_a, euler, signature in surfaces:
        total = total * _surface_factor(chi_a, euler, signature)
    return total


def chi_y(d: VarietyDescriptor, bundle: Bundle | None = None) -> Polynomial:
    """``chi_y`` by the natural route for each descriptor kind."""
    if bundle is not None:
        if not isinstance(d, (ProjectiveSpace, CompleteIntersection)):
            raise UnsupportedModelError(f"bundle twisting needs Chern data; {type(d).__name__} has none")
        return chi_y_gHRR(chern_model(d), bundle)
    if isinstance(d, (ProjectiveSpace, CompleteIntersection)):
        return chi_y_gHRR(chern_model(d))
    if isinstance(d, HodgeDiamond):
        return chi_y_from_hodge(d)
    if isinstance(d, Invariants):
        return chi_y_invariants(d)
    if isinstance(d, ToricOrbits):
        return chi_y_toric(d.orbit_counts)
    if isinstance(d, Product):
        total = Polynomial([1])
        for f in d.factors:
            total = total * chi_y(f)
        return total
    if isinstance(d, RawChiY):
        return d.poly
    raise UnsupportedModelError(f"unknown descriptor {d!r}")


def chi_y_routes(d: VarietyDescriptor) -> dict:
    """Every independent route available for ``d``, keyed by route name."""
    routes = {"direct": chi_y(d)}
    if isinstance(d, (ProjectiveSpace, CompleteIntersection)):
        model = chern_model(d)
        routes["ghrr_chern_numbers"] = chi_y_gHRR(model)
        routes["ghrr_hyperplane"] = chi_y_gHRR(model, Bundle.trivial(1))
    if isinstance(d, ProjectiveSpace):
        n = d.dim
        routes["hodge"] = chi_y_from_hodge(HodgeDiamond.projective_space(n))
        routes["toric"] = chi_y_toric([comb(n + 1, k + 1) for k in range(n + 1)])
    if isinstance(d, Product) and all(isinstance(f, (ProjectiveSpace, CompleteIntersection)) for f in d.factors):
        routes["homology_pushforward"] = _pushforward_point(d)
    return routes


def _pushforward_point(d: Product) -> Polynomial:
    """Degree of the zero-cycle part of ``T_{y*}``."""
    vec = homology_class(d)
    degree = prod((chern_model(f).degree for f in d.factors), start=Fraction(1))
    return vec.coeff((0,) * len(d.factors)) * degree


# -- JSON descriptors ---------------------------------------------------------


def _require(doc: Mapping, key: str, kind: str):
    if key not in doc:
        raise SchemaError(f"{kind!r} descriptor is missing field {key!r}")
    return doc[key]


def _int_field(doc, key, kind) -> int:
    value = _require(doc, key, kind)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"field {key!r} of {kind!r} must be an integer")
    return value


def _rational_field(doc, key, kind, default=None):
    if key not in doc and default is not None:
        return Fraction(default)
    value = _require(doc, key, kind)
    try:
        return to_rational(value)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"field {key!r} of {kind!r} must be an exact rational: {exc}") from None


def _from_doc(doc) -> VarietyDescriptor:
    if not isinstance(doc, Mapping):
        raise SchemaError("descriptor must be a JSON object")
    kind = doc.get("kind")
    if kind == "projective_space":
        return ProjectiveSpace(_int_field(doc, "dim", kind))
    if kind == "complete_intersection":
        degrees = _require(doc, "degrees", kind)
        if not isinstance(degrees, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in degrees):
            raise SchemaError("'degrees' must be a list of integers")
        return CompleteIntersection(_int_field(doc, "ambient_dim", kind), tuple(degrees))
    if kind == "hodge_diamond":
        table = _require(doc, "h", kind)
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise SchemaError("'h' must be a list of lists")
        return HodgeDiamond(_int_field(doc, "dim", kind), tuple(tuple(r) for r in table))
    if kind == "invariants":
        return Invariants(
            _int_field(doc, "dim", kind),
            _rational_field(doc, "chi_a", kind),
            _rational_field(doc, "euler", kind),
            _rational_field(doc, "signature", kind, default=0),
        )
    if kind == "toric":
        counts = _require(doc, "orbit_counts", kind)
        if not isinstance(counts, list):
            raise SchemaError("'orbit_counts' must be a list")
        return ToricOrbits(tuple(counts))
    if kind == "product":
        factors = _require(doc, "factors", kind)
        if not isinstance(factors, list):
            raise SchemaError("'factors' must be a list of descriptors")
        return Product(tuple(_from_doc(f) for f in factors))
    if kind == "chi_y":
        coeffs = _require(doc, "coeffs", kind)
        if not isinstance(coeffs, list):
            raise SchemaError("'coeffs' must be a list")
        try:
            poly = Polynomial(to_rational(c) for c in coeffs)
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"bad chi_y coefficient: {exc}") from None
        dim = doc.get("dim")
        if dim is not None and poly.degree > dim:
            raise ModelConstraintError(f"chi_y of degree {poly.degree} exceeds dimension {dim}")
        return RawChiY(poly, dim)
    raise SchemaError(f"unknown descriptor kind {kind!r}")


def parse_descriptor(text: str | bytes | Mapping) -> VarietyDescriptor:
    """Parse and validate a descriptor JSON document."""
    if isinstance(text, Mapping):
        return _from_doc(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed descriptor JSON: {exc}") from None
    return _from_doc(doc)


def descriptor_to_json(d: VarietyDescriptor) -> dict:
    if isinstance(d, ProjectiveSpace):
        return {"kind": "projective_space", "dim": d.dim}
    if isinstance(d, CompleteIntersection):
        return {"kind": "complete_intersection", "ambient_dim": d.ambient_dim, "degrees": list(d.degrees)}
    if isinstance(d, HodgeDiamond):
        return {"kind": "hodge_diamond", "dim": d.dim, "h": [list(r) for r in d.h]}
    if isinstance(d, Invariants):
        return {
            "kind": "invariants",
            "dim": d.dim,
            "chi_a": format_rational(d.chi_a),
            "euler": format_rational(d.euler),
            "signature": format_rational(d.signature),
        }
    if isinstance(d, ToricOrbits):
        return {"kind": "toric", "orbit_counts": list(d.orbit_counts)}
    if isinstance(d, Product):
        return {"kind": "product", "factors": [descriptor_to_json(f) for f in d.factors]}
    if isinstance(d, RawChiY):
        doc = {"kind": "chi_y", "coeffs": d.poly.to_strings()}
        if d.dim_hint is not None:
            doc["dim"] = d.dim_hint
        return doc
    raise UnsupportedModelError(f"unknown descriptor {d!r}")


# -- catalog -------------------------------------------------------------------

K3_DIAMOND = HodgeDiamond(2, ((1, 0, 1), (0, 20, 0), (1, 0, 1)))
QUINTIC_DIAMOND = HodgeDiamond(3, ((1, 0, 0, 1), (0, 1, 101, 0), (0, 101, 1, 0), (1, 0, 0, 1)))

CATALOG_DIAMONDS = {
    "pt_hodge": HodgeDiamond.point(),
    **{f"p{n}_hodge": HodgeDiamond.projective_space(n) for n in range(1, 5)},
    "elliptic_curve_hodge": HodgeDiamond.curve(1),
    "genus2_curve_hodge": HodgeDiamond.curve(2),
    "k3_hodge": K3_DIAMOND,
    "quintic_hodge": QUINTIC_DIAMOND,
}


def catalog() -> dict:
    """Built-in smooth compact varieties, keyed by short name."""
    entries: dict = {"pt": ProjectiveSpace(0)}
    for n in range(1, 9):
        entries[f"p{n}"] = ProjectiveSpace(n)
    entries["quartic_surface"] = CompleteIntersection(3, (4,))
    entries["quintic_threefold"] = CompleteIntersection(4, (5,))
    entries["cubic_surface"] = CompleteIntersection(3, (3,))
    entries["quadric_surface"] = CompleteIntersection(3, (2,))
    entries["k3_invariants"] = Invariants(2, 2, 24, -16)
    entries["genus2_curve"] = Invariants(1, -1, -2)
    entries.update(CATALOG_DIAMONDS)
    for n in range(1, 7):
        entries[f"toric_p{n}"] = ToricOrbits(tuple(comb(n + 1, k + 1) for k in range(n + 1)))
    p1, p2 = ProjectiveSpace(1), ProjectiveSpace(2)
    entries["p1xp1"] = Product((p1, p1))
    entries["p1xp2"] = Product((p1, p2))
    entries["p2xp2"] = Product((p2, p2))
    entries["p1xquartic"] = Product((p1, entries["quartic_surface"]))
    entries["genus2xk3"] = Product((entries["genus2_curve"], entries["k3_invariants"]))
    entries["k3xk3_hodge"] = K3_DIAMOND * K3_DIAMOND
    return entries


def evaluate_chi_y(d: VarietyDescriptor, y0) -> Fraction:
    return evaluate(chi_y(d), y0)
