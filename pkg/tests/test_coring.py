import pytest

from corings.algebras import CYCLIC_2, dual_numbers, ground_algebra, group_algebra
from corings.bimodules import scalar_bimodule, tensor_over_alg
from corings.constructions import (
    grouplike_coalgebra,
    matrix_coalgebra,
    trivial_coring,
    unit_coring,
)
from corings.coring import (
    LEFT,
    RIGHT,
    Bicomodule,
    Comodule,
    Coring,
    check_bicomodule,
    check_comodule,
    check_coring,
    check_left_colinear,
    cotensor,
)
from corings.linalg import Field, Mat, _vadd

Q = Field.rationals()
F5 = Field.prime(5)


def left_coaction_on_tensor(coring, t):
    """Lift of the left coaction on C (x)_A M induced by the comultiplication."""
    field = coring.field
    dim_c = coring.dim
    rows = []
    for s in range(t.dim):
        out = {}
        for idx, val in t.quot.lift.rows[s].items():
            c, x = divmod(idx, t.right_factor.dim)
            for pair, dv in coring.comul_lift.rows[c].items():
                c1, c2 = divmod(pair, dim_c)
                cls = t.quot.project_vec({c2 * t.right_factor.dim + x: field.one})
                _vadd(field, out,
                      {c1 * t.dim + q: v for q, v in cls.items()},
                      field.mul(val, dv))
        rows.append(out)
    return Mat(field, t.dim, dim_c * t.dim, rows)


class TestCheckCoring:
    @pytest.mark.parametrize("make_alg", [ground_algebra, dual_numbers,
                                          lambda f: group_algebra(f, CYCLIC_2)])
    @pytest.mark.parametrize("field", [Q, F5], ids=["Q", "F5"])
    def test_trivial_coring_over_fixture_algebras(self, make_alg, field):
        assert check_coring(trivial_coring(make_alg(field))).ok

    def test_matrix_coalgebra(self):
        assert check_coring(matrix_coalgebra(2, F5)).ok
        assert check_coring(matrix_coalgebra(3, F5)).ok

    def test_grouplike(self):
        assert check_coring(grouplike_coalgebra(CYCLIC_2, Q)).ok

    def test_corrupted_counit_detected_on_the_right(self):
        mc = matrix_coalgebra(2, F5)
        bad_counit = Mat(F5, 4, 1, [{0: 1}, {0: 1}, {}, {0: 1}])
        v = check_coring(Coring(mc.base, mc.carrier, mc.comul_lift, bad_counit))
        assert not v.ok
        assert v.law == "right-counit"
        assert v.witness.startswith("e_12")
        assert "e_11 + e_12" in v.witness

    def test_corrupted_comultiplication(self):
        mc = matrix_coalgebra(2, F5)
        rows = [dict(r) for r in mc.comul_lift.rows]
        del rows[0][6]  # drop the e_12 (x) e_21 leg of comul(e_11)
        bad = Coring(mc.base, mc.carrier, Mat(F5, 4, 16, rows), mc.counit_mat)
        v = check_coring(bad)
        assert not v.ok and v.law == "coassociativity"
        assert v.laws_passed == ("bilinearity",)

    def test_non_bilinear_comultiplication(self):
        c = trivial_coring(dual_numbers(Q))
        rows = [dict(r) for r in c.comul_lift.rows]
        rows[1][0] = Q.one
        bad = Coring(c.base, c.carrier, Mat(Q, 2, 4, rows), c.counit_mat)
        v = check_coring(bad)
        assert not v.ok and v.law == "bilinearity"


class TestComodule:
    def test_regular_right_comodule(self):
        mc = matrix_coalgebra(2, F5)
        assert check_comodule(Comodule.regular(mc, RIGHT)).ok

    def test_regular_left_comodule(self):
        mc = matrix_coalgebra(2, F5)
        assert check_comodule(Comodule.regular(mc, LEFT)).ok

    @pytest.mark.parametrize("field", [Q, F5], ids=["Q", "F5"])
    def test_regular_comodules_over_nontrivial_base(self, field):
        c = trivial_coring(dual_numbers(field))
        assert check_comodule(Comodule.regular(c, RIGHT)).ok
        assert check_comodule(Comodule.regular(c, LEFT)).ok

    def test_zero_dimensional(self):
        mc = matrix_coalgebra(2, F5)
        z = Comodule(mc, RIGHT, scalar_bimodule(F5, 0), Mat(F5, 0, 0, []))
        assert check_comodule(z).ok

    def test_zero_coaction_fails_counit(self):
        mc = matrix_coalgebra(2, F5)
        z = Comodule(mc, RIGHT, mc.carrier.forget_left(),
                     Mat(F5, 4, 16, [{} for _ in range(4)]))
        v = check_comodule(z)
        assert not v.ok and v.law == "coaction-counit"

    def test_carrier_is_bicomodule_over_itself(self):
        mc = matrix_coalgebra(2, F5)
        b = Bicomodule(mc, mc, mc.carrier, mc.comul_lift, mc.comul_lift)
        assert check_bicomodule(b).ok


class TestLeftColinear:
    def test_comultiplication_is_colinear(self):
        mc = matrix_coalgebra(2, F5)
        m = Comodule.regular(mc, LEFT)
        carrier = mc.tens.result.forget_right()
        n = Comodule(mc, LEFT, carrier, left_coaction_on_tensor(mc, mc.tens))
        assert check_comodule(n).ok
        v = check_left_colinear(mc.comul, m, n)
        assert v.ok

    def test_counit_leg_collapse_is_identity_and_colinear(self):
        from corings.bimodules import induced_map_on_tensor, left_unit_collapse

        mc = matrix_coalgebra(2, F5)
        leg = induced_map_on_tensor(
            mc.counit_mat, Mat.identity(F5, 4), mc.tens, mc.unit_tensor_left
        ).map @ left_unit_collapse(mc.unit_tensor_left)
        f = mc.comul @ leg
        assert f.is_identity()
        m = Comodule.regular(mc, LEFT)
        assert check_left_colinear(f, m, m).ok

    def test_perturbed_map_gets_a_witness(self):
        mc = matrix_coalgebra(2, F5)
        m = Comodule.regular(mc, LEFT)
        f = Mat.identity(F5, 4)
        f.rows[0][1] = F5.one
        v = check_left_colinear(f, m, m)
        assert not v.ok and v.law == "colinearity"
        assert v.witness is not None


class TestCotensor:
    def test_matrix_coalgebra_cotensor_square(self):
        mc = matrix_coalgebra(2, F5)
        ct = cotensor(Comodule.regular(mc, RIGHT), Comodule.regular(mc, LEFT))
        assert ct.dim == mc.dim

    def test_regular_comodule_embeds_bijectively(self):
        for c in [matrix_coalgebra(2, F5), grouplike_coalgebra(CYCLIC_2, Q),
                  trivial_coring(dual_numbers(Q))]:
            cm = Comodule.regular(c, RIGHT)
            ct = cotensor(cm, Comodule.regular(c, LEFT))
            rho = cm.coaction
            coords = [ct.subspace.coords_of(r) for r in rho.rows]
            assert all(x is not None for x in coords)
            emb = Mat(c.field, c.dim, ct.dim, coords)
            emb.inverse()

    def test_trivial_coring_defect_vanishes(self):
        c = trivial_coring(dual_numbers(Q))
        cm = Comodule.regular(c, RIGHT)
        cl = Comodule.regular(c, LEFT)
        ct = cotensor(cm, cl)
        assert ct.dim == ct.tensor.dim

    def test_cotensor_includes_back(self):
        mc = matrix_coalgebra(2, F5)
        ct = cotensor(Comodule.regular(mc, RIGHT), Comodule.regular(mc, LEFT))
        assert ct.include.nrows == ct.dim
        for r in ct.include.rows:
            assert ct.subspace.contains(r)
