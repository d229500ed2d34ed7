import random

import pytest

from corings.algebras import (
    CYCLIC_2,
    dual_numbers,
    ground_algebra,
    group_algebra,
    tensor_algebra,
)
from corings.bimodules import (
    Bimodule,
    InterchangeFixtures,
    check_interchange_naturality,
    induced_map_on_tensor,
    interchange_iso,
    left_unit_collapse,
    left_unit_embed,
    middle_swap,
    module_hom_space,
    random_module_hom,
    regular_bimodule,
    right_unit_collapse,
    right_unit_embed,
    scalar_bimodule,
    tensor_over_alg,
    tensor_over_k,
)
from corings.errors import AlgebraMismatch, DescentFailure
from corings.linalg import Field, Mat

Q = Field.rationals()
F5 = Field.prime(5)


@pytest.fixture
def dual_regular():
    return regular_bimodule(dual_numbers(Q))


class TestBimodule:
    def test_regular_passes(self, dual_regular):
        assert dual_regular.check().ok

    def test_scalar_passes(self):
        assert scalar_bimodule(F5, 3).check().ok

    def test_broken_unit_action(self):
        a = dual_numbers(Q)
        bad = Bimodule(a, a, 2, [Mat.zero(Q, 2, 2), Mat.zero(Q, 2, 2)],
                       regular_bimodule(a).right_act)
        v = bad.check()
        assert not v.ok and v.law == "left-module"

    def test_non_commuting_actions(self):
        a = dual_numbers(Q)
        x_mat = Mat.from_rows(Q, [[0, 1], [0, 0]])
        other = Mat.from_rows(Q, [[0, 0], [1, 0]])
        bad = Bimodule(a, a, 2, [Mat.identity(Q, 2), x_mat],
                       [Mat.identity(Q, 2), other])
        v = bad.check()
        assert not v.ok and v.law == "commuting-actions"


class TestTensorOverK:
    def test_dims_and_scalar_actions(self):
        m = scalar_bimodule(Q, 2)
        n = scalar_bimodule(Q, 3)
        t = tensor_over_k(m, n)
        assert t.dim == 6
        assert t.left_act[0].is_identity() and t.right_act[0].is_identity()

    def test_regular_tensor_regular_is_tensor_algebra_regular(self, dual_regular):
        t = tensor_over_k(dual_regular, dual_regular)
        reg = regular_bimodule(tensor_algebra(dual_numbers(Q), dual_numbers(Q)))
        assert t == reg

    def test_unit_collapse(self):
        m = regular_bimodule(group_algebra(F5, CYCLIC_2))
        k = scalar_bimodule(F5, 1)
        assert tensor_over_k(k, m) == m
        assert tensor_over_k(m, k) == m


class TestTensorOverAlg:
    def test_regular_square_dual_numbers(self, dual_regular):
        t = tensor_over_alg(dual_regular, dual_regular)
        assert t.quot.ambient_dim == 4
        assert t.relations.dim == 2
        assert t.dim == 2
        assert t.result.check().ok

    def test_dimension_bookkeeping(self, dual_regular):
        t = tensor_over_alg(dual_regular, dual_regular)
        assert t.quot.ambient_dim == t.dim + t.relations.dim

    def test_trivial_middle_reduces_to_plain_tensor(self):
        t = tensor_over_alg(scalar_bimodule(Q, 2), scalar_bimodule(Q, 3))
        assert t.relations.dim == 0
        assert t.project.is_identity()

    def test_middle_mismatch(self, dual_regular):
        with pytest.raises(AlgebraMismatch):
            tensor_over_alg(dual_regular, scalar_bimodule(Q, 2))

    def test_unit_isomorphisms(self, dual_regular):
        t = tensor_over_alg(regular_bimodule(dual_numbers(Q)), dual_regular)
        assert t.dim == dual_regular.dim
        assert (left_unit_embed(t) @ left_unit_collapse(t)).is_identity()
        t2 = tensor_over_alg(dual_regular, regular_bimodule(dual_numbers(Q)))
        assert t2.dim == dual_regular.dim
        assert (right_unit_embed(t2) @ right_unit_collapse(t2)).is_identity()

    def test_ambient_carries_pairwise_actions(self, dual_regular):
        t = tensor_over_alg(dual_regular, dual_regular)
        amb = t.ambient
        assert amb.dim == 4
        assert amb.check().ok


class TestInducedMap:
    def test_identity_descends_to_identity(self, dual_regular):
        t = tensor_over_alg(dual_regular, dual_regular)
        ident = Mat.identity(Q, 2)
        assert induced_map_on_tensor(ident, ident, t, t).map.is_identity()

    def test_functoriality_in_each_argument(self, dual_regular):
        t = tensor_over_alg(dual_regular, dual_regular)
        homs = module_hom_space(dual_regular, dual_regular, "right")
        homs_left = module_hom_space(dual_regular, dual_regular, "left")
        rng = random.Random(11)
        for _ in range(5):
            f1 = random_module_hom(rng, homs, Q, (2, 2))
            f2 = random_module_hom(rng, homs, Q, (2, 2))
            g1 = random_module_hom(rng, homs_left, Q, (2, 2))
            g2 = random_module_hom(rng, homs_left, Q, (2, 2))
            composite = induced_map_on_tensor(f1 @ f2, g1 @ g2, t, t).map
            stepwise = (
                induced_map_on_tensor(f1, g1, t, t).map
                @ induced_map_on_tensor(f2, g2, t, t).map
            )
            assert composite == stepwise

    def test_non_linear_map_raises(self, dual_regular):
        t = tensor_over_alg(dual_regular, dual_regular)
        f = Mat.from_rows(Q, [[0, 0], [1, 0]])
        with pytest.raises(DescentFailure):
            induced_map_on_tensor(f, Mat.identity(Q, 2), t, t)


class TestMiddleSwap:
    def test_permutation_inverse(self):
        s = middle_swap(Q, 2, 3, 2, 2)
        s_back = middle_swap(Q, 2, 2, 3, 2)
        assert (s @ s_back).is_identity()


class TestInterchangeIso:
    def test_regular_modules_pure_tensor_formula(self, dual_regular):
        t = tensor_over_alg(dual_regular, dual_regular)
        iso = interchange_iso(t, t)
        tgt = iso.target_tensor
        for c in range(2):
            for c2 in range(2):
                v1, v2 = t.pure_class(0, c), t.pure_class(0, c2)
                src = {}
                for i, a in v1.items():
                    for j, b in v2.items():
                        src[i * t.dim + j] = a * b
                expected = tgt.quot.project_vec({c * 2 + c2: Q.one})
                assert iso.map.apply(src) == expected

    def test_ground_field_right_factors_give_identity(self):
        m = scalar_bimodule(Q, 3)
        k_reg = regular_bimodule(ground_algebra(Q))
        t = tensor_over_alg(m, k_reg)
        iso = interchange_iso(t, t)
        assert iso.map.is_identity()

    def test_invertible_on_dual_numbers(self, dual_regular):
        t = tensor_over_alg(dual_regular, dual_regular)
        iso = interchange_iso(t, t)
        assert iso.map.nrows == iso.map.ncols == 4
        assert (iso.map @ iso.inverse_map).is_identity()
        assert (iso.inverse_map @ iso.map).is_identity()


class TestNaturality:
    @pytest.fixture
    def square(self, dual_regular):
        m = dual_regular.forget_left()
        return InterchangeFixtures(m, m, m, m, dual_regular, dual_regular)

    def test_identity_square(self, square):
        ident = Mat.identity(Q, 2)
        assert check_interchange_naturality(ident, ident, square).ok

    def test_random_right_linear_maps(self, square, dual_regular):
        m = dual_regular.forget_left()
        homs = module_hom_space(m, m, "right")
        assert len(homs) == 2
        rng = random.Random(23)
        for _ in range(10):
            f = random_module_hom(rng, homs, Q, (2, 2))
            g = random_module_hom(rng, homs, Q, (2, 2))
            assert check_interchange_naturality(f, g, square).ok

    def test_non_linear_rejected_at_precondition(self, square):
        bad = Mat.from_rows(Q, [[0, 0], [1, 0]])
        with pytest.raises(ValueError):
            check_interchange_naturality(bad, Mat.identity(Q, 2), square)

    def test_inverse_also_natural(self, square):
        # The inverse matrices satisfy the reversed square for random maps.
        m_homs = module_hom_space(square.m, square.m, "right")
        rng = random.Random(5)
        f = random_module_hom(rng, m_homs, Q, (2, 2))
        g = random_module_hom(rng, m_homs, Q, (2, 2))
        ident_c = Mat.identity(Q, 2)
        f_tens = induced_map_on_tensor(f, ident_c, square.t_mc, square.t_m2c).map
        g_tens = induced_map_on_tensor(g, ident_c, square.t_nc, square.t_n2c).map
        fg = induced_map_on_tensor(
            f.kron(g), Mat.identity(Q, 4), square.iso.target_tensor,
            square.iso2.target_tensor,
        ).map
        assert square.iso.inverse_map @ f_tens.kron(g_tens) == fg @ square.iso2.inverse_map
