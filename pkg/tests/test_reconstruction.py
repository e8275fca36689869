from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chiygenus.errors import ArityError, DimensionError, DistinctNodesError, ParityError
from chiygenus.exact_poly import ExactMatrix, Polynomial, vandermonde_matrix
from chiygenus.graded_ring import GradedClass
from chiygenus.hirzebruch import specialize, t_p_component, t_y_class, t_y_star
from chiygenus.reconstruction import (
    SamplePlan,
    default_nodes,
    inverse_vandermonde,
    reciprocal_node_plan,
    reciprocal_nodes,
    reconstruct_class,
    reconstruct_genus,
)
from chiygenus.varieties import ProjectiveSpace, catalog, chern_model, chi_y

from conftest import distinct_nodes, polynomials

F = Fraction
P = Polynomial


def sample(f, nodes):
    return [(a, f(a)) for a in nodes]


class TestPlans:
    def test_default_nodes(self):
        assert list(default_nodes(4)) == [0, 1, -1, 2, -2]
        assert list(default_nodes(0)) == [0]
        assert list(default_nodes(1)) == [0, 1]

    def test_plan_validation(self):
        with pytest.raises(ArityError):
            SamplePlan(2, (0, 1))
        with pytest.raises(DistinctNodesError):
            SamplePlan(3, (0, 1, -1, 1))
        with pytest.raises(ValueError):
            SamplePlan(2, (1, 0, -1))

    def test_reciprocal_nodes(self):
        assert reciprocal_nodes(4) == [0, 1, -1, 2, F(1, 2)]
        assert reciprocal_nodes(0) == [0]
        with pytest.raises(ParityError):
            reciprocal_nodes(3)


class TestGenus:
    def test_p2(self):
        assert reconstruct_genus(2, {0: 1, 1: 1, -1: 3}) == P([1, -1, 1])

    def test_k3(self):
        assert reconstruct_genus(2, [(0, 2), (1, -16), (-1, 24)]) == P([2, -20, 2])

    def test_errors(self):
        with pytest.raises(ArityError):
            reconstruct_genus(2, {0: 1, 1: 1})
        with pytest.raises(DistinctNodesError):
            reconstruct_genus(1, [(0, 1), (0, 2)])

    @pytest.mark.parametrize("name", [k for k, d in sorted(catalog().items()) if d.dim <= 6])
    def test_catalog_round_trip(self, name):
        d = catalog()[name]
        f = chi_y(d)
        assert reconstruct_genus(d.dim, sample(f, default_nodes(d.dim))) == f

    @given(polynomials(max_degree=7), st.randoms(use_true_random=False))
    def test_permutation_invariant(self, f, rnd):
        n = max(f.degree, 0)
        pairs = sample(f, default_nodes(n))
        shuffled = pairs[:]
        rnd.shuffle(shuffled)
        assert reconstruct_genus(n, shuffled) == reconstruct_genus(n, pairs) == f

    @given(st.data())
    def test_arbitrary_nodes(self, data):
        nodes = data.draw(distinct_nodes(min_size=1, max_size=8))
        f = data.draw(polynomials(max_degree=len(nodes) - 1))
        assert reconstruct_genus(len(nodes) - 1, sample(f, nodes)) == f

    @given(distinct_nodes(min_size=1, max_size=7))
    def test_inverse_vandermonde(self, nodes):
        n = len(nodes)
        assert inverse_vandermonde(nodes) @ vandermonde_matrix(nodes) == ExactMatrix.identity(n)


class TestReciprocalPlan:
    @pytest.mark.parametrize("name", [k for k, d in sorted(catalog().items()) if d.dim % 2 == 0 and d.dim <= 8])
    def test_catalog(self, name):
        d = catalog()[name]
        f = chi_y(d)
        k = d.dim // 2
        integer_nodes = [0] if k == 0 else [0, 1, -1, *range(2, k + 1)]
        assert reciprocal_node_plan(d.dim, sample(f, integer_nodes)) == f

    def test_wrong_samples(self):
        with pytest.raises(ArityError):
            reciprocal_node_plan(4, {0: 1, 1: 1, -1: 5})


class TestClass:
    def test_p1(self):
        ty = t_y_class(chern_model(ProjectiveSpace(1)).tangent)
        got = reconstruct_class(1, [(a, specialize(ty, a)) for a in (0, 1)])
        assert got == ty

    def test_p1_extra_node_gives_zero_top_component(self):
        ty = t_y_class(chern_model(ProjectiveSpace(1)).tangent)
        got = reconstruct_class(2, [(a, specialize(ty, a)) for a in (0, 1, -1)])
        assert got == ty
        assert t_p_component(got, 2) == GradedClass.zero(1)

    def test_p2_components(self):
        ty = t_y_class(chern_model(ProjectiveSpace(2)).tangent)
        got = reconstruct_class(2, [(a, specialize(ty, a)) for a in default_nodes(2)])
        assert got == ty
        assert t_p_component(got, 2).h_coefficients() == [P(), P(), P([1])]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_homology_vector(self, n):
        vec = t_y_star(chern_model(ProjectiveSpace(n)))
        assert reconstruct_class(n, [(a, specialize(vec, a)) for a in default_nodes(n)]) == vec

    def test_slot_projection_commutes(self):
        vec = t_y_star([chern_model(ProjectiveSpace(1)), chern_model(ProjectiveSpace(2))])
        got = reconstruct_class(3, [(a, specialize(vec, a)) for a in default_nodes(3)])
        for key in vec.terms:
            direct = reconstruct_genus(3, [(a, vec.coeff(key)(a)) for a in default_nodes(3)])
            assert got.coeff(key) == direct

    def test_mismatched_spaces(self):
        a = specialize(t_y_class(chern_model(ProjectiveSpace(1)).tangent), 0)
        b = specialize(t_y_class(chern_model(ProjectiveSpace(2)).tangent), 1)
        with pytest.raises(DimensionError):
            reconstruct_class(1, [(0, a), (1, b)])

    def test_rejects_y_dependent_samples(self):
        ty = t_y_class(chern_model(ProjectiveSpace(1)).tangent)
        with pytest.raises(ValueError):
            reconstruct_class(1, [(0, ty), (1, ty)])
