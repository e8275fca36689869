from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from chiygenus.errors import DimensionError, MissingDataError
from chiygenus.exact_poly import Polynomial, derivative, taylor_shift
from chiygenus.hirzebruch import specialize, t_y_star
from chiygenus.derived import (
    TaylorExpansion,
    derived_class,
    derived_genus,
    euler_characteristic,
    higher_euler,
    leibniz_product,
    libgober_wood,
    orbit_counts_from_chi_y,
    taylor_coefficients,
)
from chiygenus.varieties import (
    K3_DIAMOND,
    CompleteIntersection,
    HodgeDiamond,
    ProjectiveSpace,
    catalog,
    chern_data,
    chern_model,
    chi_y,
)

from conftest import polynomials, small_fractions

F = Fraction
P = Polynomial


class TestDerivedGenus:
    def test_examples(self):
        f = P([1, -1, 1, -1, 1])
        assert derived_genus(0, f) == f
        assert derived_genus(2, f) == P([1, -3, 6])
        assert derived_genus(5, f) == P()

    @given(polynomials(), st.integers(0, 6), st.integers(0, 6))
    def test_composition(self, f, p, q):
        lhs = derived_genus(p, derived_genus(q, f))
        assert lhs == derived_genus(p + q, f) * comb(p + q, p)

    def test_class_level(self):
        vec = t_y_star(chern_model(ProjectiveSpace(2)))
        d1 = derived_class(1, vec)
        for key in vec.terms:
            assert d1.coeff(key) == derivative(vec.coeff(key))


class TestTaylor:
    def test_expansion_at_minus_one(self):
        t = taylor_coefficients(P([1, -1, 1, -1, 1]), -1)
        assert t.center == -1
        assert list(t.coeffs) == [5, -10, 10, -5, 1]

    @given(polynomials(max_degree=10), small_fractions)
    def test_expand_round_trip(self, f, alpha):
        t = taylor_coefficients(f, alpha)
        assert t.expand() == f
        assert list(t.coeffs) == taylor_shift(f, alpha)

    def test_expansion_object(self):
        t = TaylorExpansion(F(1), (F(2), F(3)))
        assert t.expand() == P([-1, 3]) and len(t) == 2 and t[1] == 3


def derivative_route(f, p):
    return taylor_shift(f, -1)[p] if p < len(taylor_shift(f, -1)) else 0


class TestLibgoberWood:
    def test_p4_values(self):
        _, numbers = chern_data(ProjectiveSpace(4))
        f = chi_y(ProjectiveSpace(4))
        assert [libgober_wood(p, 4, numbers, 5) for p in (1, 2, 3)] == [-10, 10, -5]
        assert [derivative_route(f, p) for p in (1, 2, 3, 4)] == [-10, 10, -5, 1]
        # the a_4 closed form as usually printed has the opposite sign on P^4
        assert libgober_wood(4, 4, numbers, 5) == -1

    @pytest.mark.parametrize(
        "d",
        [ProjectiveSpace(n) for n in range(2, 7)] + [CompleteIntersection(3, (4,)), CompleteIntersection(4, (5,))],
        ids=str,
    )
    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_low_forms_match_derivatives(self, d, p):
        _, numbers = chern_data(d)
        f = chi_y(d)
        assert libgober_wood(p, d.dim, numbers, f(-1)) == derivative_route(f, p)

    def test_missing_numbers(self):
        with pytest.raises(MissingDataError):
            libgober_wood(2, 2, {(2,): 24}, 24)
        assert libgober_wood(2, 2, {(2,): 24, (1, 1): 0}, 24) == F(1, 12) * 24

    def test_dimension_guards(self):
        _, numbers = chern_data(ProjectiveSpace(3))
        with pytest.raises(DimensionError):
            libgober_wood(4, 3, numbers, 4)
        with pytest.raises(DimensionError):
            libgober_wood(2, 4, numbers, 4)
        with pytest.raises(ValueError):
            libgober_wood(5, 3, numbers, 4)

    def test_a1_needs_only_euler(self):
        assert libgober_wood(1, 2, None, 24) == -24


class TestEuler:
    def test_k3(self):
        assert higher_euler(K3_DIAMOND) == [24, -48, 28, -4, 1]
        assert euler_characteristic(K3_DIAMOND) == 24

    def test_small(self):
        assert higher_euler(HodgeDiamond.projective_space(1)) == [2, -2, 1]
        assert higher_euler(HodgeDiamond.point()) == [1]

    @pytest.mark.parametrize("n", range(0, 5))
    def test_first_entry_is_euler(self, n):
        H = HodgeDiamond.projective_space(n)
        assert higher_euler(H)[0] == n + 1 == chi_y(H)(-1)


class TestOrbitCounts:
    @pytest.mark.parametrize("n", range(0, 7))
    def test_projective_space(self, n):
        got = orbit_counts_from_chi_y(chi_y(ProjectiveSpace(n)), n)
        assert got == [comb(n + 1, p + 1) for p in range(n + 1)]

    def test_toric_round_trip(self):
        for name, d in catalog().items():
            if name.startswith("toric_"):
                assert orbit_counts_from_chi_y(chi_y(d), d.dim) == list(d.orbit_counts)


class TestLeibniz:
    @given(polynomials(max_degree=6), polynomials(max_degree=6), st.integers(0, 12))
    def test_pairs(self, f, g, p):
        assert leibniz_product(p, [f, g]) == derived_genus(p, f * g)

    @given(st.lists(polynomials(max_degree=3), min_size=1, max_size=4), st.integers(0, 8))
    def test_many_factors(self, fs, p):
        total = P([1])
        for f in fs:
            total = total * f
        assert leibniz_product(p, fs) == derived_genus(p, total)

    def test_p1xp1(self):
        f = chi_y(ProjectiveSpace(1))
        assert leibniz_product(2, [f, f]) == P([1])
        assert leibniz_product(1, [f, f]) == P([-2, 2])
        assert leibniz_product(0, []) == P([1])

    @pytest.mark.parametrize("a, b", [(1, 1), (1, 2), (2, 2)])
    @pytest.mark.parametrize("p", range(0, 5))
    def test_homology_vectors(self, a, b, p):
        va = t_y_star(chern_model(ProjectiveSpace(a)))
        vb = t_y_star(chern_model(ProjectiveSpace(b)))
        assert leibniz_product(p, [va, vb]) == derived_class(p, va.cross(vb))

    def test_y_free_factor(self):
        vec = t_y_star(chern_model(ProjectiveSpace(1)))
        flat = specialize(vec, 0)
        assert leibniz_product(1, [flat, vec]) == flat.cross(derived_class(1, vec))
