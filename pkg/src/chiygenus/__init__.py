"""Exact Hirzebruch chi_y genera, Hirzebruch classes, Vandermonde reconstruction
and derived (Taylor) genera."""
from .errors import *  # noqa: F401,F403
from .exact_poly import (
    ExactMatrix,
    Polynomial,
    Rational,
    derivative,
    evaluate,
    lagrange_interpolate,
    solve_linear,
    taylor_matrix,
    taylor_shift,
    vandermonde_det,
    vandermonde_matrix,
)
from .graded_ring import GradedClass, TruncSeries, genus_class, power_sum, series_exp, series_log, twisted_chern_character
from .hirzebruch import (
    Bundle,
    ChernModel,
    ChernNumbers,
    HomologyVector,
    chi_y_gHRR,
    even_odd_parts,
    integrate,
    q_series,
    specialize,
    t_p_component,
    t_y_class,
    t_y_star,
)
from .varieties import (
    CompleteIntersection,
    HodgeDiamond,
    Invariants,
    Product,
    ProjectiveSpace,
    RawChiY,
    ToricOrbits,
    catalog,
    chern_data,
    chi_y,
    chi_y_curve_surface_product,
    chi_y_from_hodge,
    chi_y_toric,
    hodge_deligne,
    parse_descriptor,
    poincare_polynomial,
)
from .reconstruction import default_nodes, reciprocal_node_plan, reconstruct_class, reconstruct_genus
from .derived import derived_class, derived_genus, higher_euler, leibniz_product, libgober_wood, taylor_coefficients

__version__ = "0.1.0"
