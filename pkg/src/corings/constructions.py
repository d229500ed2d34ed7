"""Construction of new corings and right coring extensions from old ones.

The tensor product of a coring over A and a coring over A' is a coring over
A (x) A' whose comultiplication regroups the two comultiplications through the
canonical interchange isomorphism; a right extension of a coring by another is
a validated bicomodule structure; and a corings morphism gives rise to the
base ring extension B (x)_A C (x)_A B.  Constructors here validate their
output instead of trusting the underlying theorems, so building an object is
already a desk-scale re-proof of the corresponding statement.

Fixture generators for the standard small examples live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebras import ground_algebra, tensor_algebra
from .bimodules import (
    Bimodule,
    interchange_iso,
    middle_swap,
    regular_bimodule,
    scalar_bimodule,
    tensor_over_alg,
    tensor_over_k,
)
from .coring import (
    Coring,
    coaction_compatibility,
    right_coaction_verdict,
)
from .errors import (
    DeltaNotRightLinear,
    FieldMismatch,
    IllDefinedAction,
    InvalidMorphism,
    NotABimodule,
    NotACoaction,
    NotColinear,
    NotInjective,
)
from .linalg import Mat, map_kernel
from .verdict import Verdict

EXTENSION_LAWS = ("bimodule", "delta-right-linear", "coaction", "colinearity")


def tensor_coring(c, c2):
    """The coring C (x)_k C' over A (x)_k A'.

    The comultiplication lift sends c (x) c' to the middle-swap of the two
    lifts, whose projection equals the regrouping iso applied after
    comul (x) comul'; the counit is exactly counit (x) counit'.
    """
    if c.field != c2.field:
        raise FieldMismatch("tensor corings over different fields")
    base = tensor_algebra(c.base, c2.base)
    carrier = tensor_over_k(c.carrier, c2.carrier)
    swap = middle_swap(c.field, c.dim, c.dim, c2.dim, c2.dim)
    comul_lift = c.comul_lift.kron(c2.comul_lift) @ swap
    counit = c.counit_mat.kron(c2.counit_mat)
    return Coring(base, carrier, comul_lift, counit)


class RightExtension:
    """A validated right extension: D (over B) extends C (over A).

    Stores the (A,B)-bimodule structure on the carrier of C and the lift of
    the right D-coaction into the ambient C (x)_k D.
    """

    def __init__(self, c, d, bimodule, coact_lift, t_cd):
        self.c = c
        self.d = d
        self.bimodule = bimodule
        self.coact_lift = coact_lift
        self.t_cd = t_cd

    @property
    def right_b_action(self):
        return self.bimodule.right_act

    @cached_property
    def coaction(self):
        return self.coact_lift @ self.t_cd.project


def _delta_right_linearity(c, bimodule):
    """Right-action matrices induced on C (x)_A C, plus the linearity check."""
    field = c.field
    b_alg = bimodule.right_alg
    nd = c.dim
    induced = []
    for j in range(b_alg.dim):
        rows_b = bimodule.right_act[j].rows

        def img(vec, rows_b=rows_b):
            out = {}
            for idx, val in vec.items():
                i, t = divmod(idx, nd)
                for w, v in rows_b[t].items():
                    coeff = field.mul(val, v)
                    if coeff:
                        k = i * nd + w
                        s = field.add(out.get(k, field.zero), coeff)
                        if s:
                            out[k] = s
                        else:
                            out.pop(k, None)
            return out

        for r in c.tens.relations.basis.rows:
            if not c.tens.relations.contains(img(r)):
                return None, Verdict.failed(
                    "delta-right-linear",
                    f"the right action of {b_alg.label(j)} on the second tensor leg "
                    f"is not defined on C (x)_A C",
                )
        mat_rows = [
            c.tens.quot.project_vec(img(c.tens.quot.lift.rows[s]))
            for s in range(c.tens.dim)
        ]
        induced.append(Mat(field, c.tens.dim, c.tens.dim, mat_rows))
    for j in range(b_alg.dim):
        if bimodule.right_act[j] @ c.comul != c.comul @ induced[j]:
            return None, Verdict.failed(
                "delta-right-linear",
                f"comultiplication does not commute with the right action of "
                f"{b_alg.label(j)}",
            )
    return induced, Verdict.passed(("delta-right-linear",))


def right_extension_verdict(c, d, right_action_mats, coact_lift):
    """All four extension conditions in order, stopping at the first failure."""
    passed = []
    if c.field != d.field:
        raise FieldMismatch("extension data over mixed fields")
    try:
        bimodule = Bimodule(
            c.base, d.base, c.dim, c.carrier.left_act, right_action_mats,
            c.carrier.labels,
        )
    except Exception as e:
        return Verdict.failed("bimodule", str(e), passed)
    v = bimodule.check()
    if not v.ok:
        return Verdict.failed("bimodule", v.witness, passed)
    passed.append("bimodule")

    induced_b, v = _delta_right_linearity(c, bimodule)
    if not v.ok:
        return Verdict.failed(v.law, v.witness, passed)
    passed.append("delta-right-linear")

    try:
        t_cd = tensor_over_alg(bimodule, d.carrier)
    except IllDefinedAction as e:
        return Verdict.failed("coaction", str(e), passed)
    if coact_lift.nrows != c.dim or coact_lift.ncols != c.dim * d.dim:
        return Verdict.failed("coaction", "coaction lift has the wrong ambient shape", passed)
    v = right_coaction_verdict(bimodule, d, coact_lift, t_cd)
    if not v.ok:
        return Verdict.failed("coaction", f"{v.law}: {v.witness}", passed)
    passed.append("coaction")

    v = coaction_compatibility(c, d, bimodule, c.comul_lift, coact_lift, t_md=t_cd)
    if not v.ok:
        return Verdict.failed("colinearity", v.witness, passed)
    passed.append("colinearity")
    return Verdict.passed(passed)


_EXTENSION_ERRORS = {
    "bimodule": NotABimodule,
    "delta-right-linear": DeltaNotRightLinear,
    "coaction": NotACoaction,
    "colinearity": NotColinear,
}


def make_right_extension(c, d, right_action_mats, coact_lift):
    """Validate and build a right extension; raises the named condition error."""
    v = right_extension_verdict(c, d, right_action_mats, coact_lift)
    if not v.ok:
        raise _EXTENSION_ERRORS[v.law](v.witness)
    bimodule = Bimodule(
        c.base, d.base, c.dim, c.carrier.left_act, right_action_mats, c.carrier.labels
    )
    t_cd = tensor_over_alg(bimodule, d.carrier)
    return RightExtension(c, d, bimodule, coact_lift, t_cd)


def tensor_extension(e, e2):
    """Tensor of two right extensions, validated on construction.

    The new coaction lift is the middle swap of the two coaction lifts, whose
    projection is the regrouping iso applied after coaction (x) coaction'.
    """
    if e.c.field != e2.c.field:
        raise FieldMismatch("tensor extensions over different fields")
    cc = tensor_coring(e.c, e2.c)
    dd = tensor_coring(e.d, e2.d)
    right_mats = [
        r.kron(r2) for r in e.bimodule.right_act for r2 in e2.bimodule.right_act
    ]
    swap = middle_swap(e.c.field, e.c.dim, e.d.dim, e2.c.dim, e2.d.dim)
    coact_lift = e.coact_lift.kron(e2.coact_lift) @ swap
    return make_right_extension(cc, dd, right_mats, coact_lift)


def regular_extension(c):
    """C as a right extension of itself, with the comultiplication as coaction."""
    return make_right_extension(c, c, c.carrier.right_act, c.comul_lift)


def unit_extension(c):
    """The trivial coring over the ground field as a right extension of C."""
    field = c.field
    return make_right_extension(
        c,
        unit_coring(field),
        [Mat.identity(field, c.dim)],
        Mat.identity(field, c.dim),
    )


def trivial_extension(c):
    """The trivial coring over the base algebra as a right extension of C."""
    field = c.field
    rows = []
    for i in range(c.dim):
        rows.append({i * c.base.dim + j: v for j, v in enumerate(c.base.unit) if v})
    coact_lift = Mat(field, c.dim, c.dim * c.base.dim, rows)
    return make_right_extension(c, trivial_coring(c.base), c.carrier.right_act, coact_lift)


@dataclass
class BaseRingExtension:
    """The coring B (x)_A C (x)_A B with its extension by D and both comparison maps."""

    coring: Coring
    extension: RightExtension
    collapse: Mat
    embed: Mat
    t_bc: object
    t_bcb: object


def base_ring_extension(m):
    """Base ring extension of a corings morphism (phi, varphi): (C:A) -> (D:B).

    Builds the B-coring X = B (x)_A C (x)_A B with the standard
    comultiplication and counit, the right D-coaction
    b (x) c (x) b' -> (b (x) c_(1) (x) 1) (x)_B phi(c_(2)) b', and validates
    the pair as a right extension.  `collapse` sends b (x) c (x) b' to
    b phi(c) b' in D and `embed` sends c to the class of 1 (x) c (x) 1.
    """
    from .category import check_corings_morphism

    v = check_corings_morphism(m)
    if not v.ok:
        raise InvalidMorphism(f"{v.law}: {v.witness}")
    c, d = m.source, m.target
    a_alg, b_alg = c.base, d.base
    field = c.field
    phi, varphi = m.phi, m.varphi.map

    # B as a (B, A)-bimodule and as an (A, B)-bimodule, the A-side through varphi.
    a_on_b_left = []
    a_on_b_right = []
    for i in range(a_alg.dim):
        img = varphi.rows[i]
        left = Mat.zero(field, b_alg.dim, b_alg.dim)
        right = Mat.zero(field, b_alg.dim, b_alg.dim)
        for t, v in img.items():
            left = left + b_alg.left_regular_mat(t).scale(v)
            right = right + b_alg.right_regular_mat(t).scale(v)
        a_on_b_left.append(left)
        a_on_b_right.append(right)
    b_left = Bimodule(
        b_alg, a_alg, b_alg.dim,
        [b_alg.left_regular_mat(i) for i in range(b_alg.dim)],
        a_on_b_right, b_alg.labels,
    )
    b_right = Bimodule(
        a_alg, b_alg, b_alg.dim,
        a_on_b_left,
        [b_alg.right_regular_mat(j) for j in range(b_alg.dim)],
        b_alg.labels,
    )

    t_bc = tensor_over_alg(b_left, c.carrier)
    t_bcb = tensor_over_alg(t_bc.result, b_right)
    carrier = t_bcb.result
    dim_b, dim_c = b_alg.dim, c.dim
    x_dim = carrier.dim

    def cls_bc(b_vec, c_idx):
        """Class in t_bc of (sum b_vec) (x) c_idx."""
        return t_bc.quot.project_vec(
            {i * dim_c + c_idx: v for i, v in b_vec.items() if v}
        )

    def cls_x(bc_vec, b_vec):
        """Class in the carrier of (element of t_bc) (x) (sum b_vec)."""
        amb = {}
        for u, uv in bc_vec.items():
            for l, lv in b_vec.items():
                w = field.mul(uv, lv)
                if w:
                    amb[u * dim_b + l] = field.add(
                        amb.get(u * dim_b + l, field.zero), w
                    )
        return t_bcb.quot.project_vec(amb)

    unit_b = {i: v for i, v in enumerate(b_alg.unit) if v}

    # Comultiplication: (b (x) c_(1) (x) 1) (x)_X (1 (x) c_(2) (x) b').
    comul_rows = []
    counit_rows = []
    coact_rows = []
    eps_phi = c.counit_mat @ varphi
    for s in range(x_dim):
        comul_row = {}
        counit_row = {}
        coact_row = {}
        outer = t_bcb.quot.lift.rows[s]
        for idx, val in outer.items():
            u, l = divmod(idx, dim_b)
            for bc_idx, bc_val in t_bc.quot.lift.rows[u].items():
                b_i, c_j = divmod(bc_idx, dim_c)
                coeff = field.mul(val, bc_val)
                if not coeff:
                    continue
                # counit: b * varphi(counit(c)) * b'
                mid = eps_phi.rows[c_j]
                acc = {}
                for t, v in mid.items():
                    prod = b_alg.mul_vec(
                        b_alg.table[b_i][t], b_alg.basis_vec(l)
                    )
                    for w, pv in enumerate(prod):
                        if pv:
                            k = field.add(
                                acc.get(w, field.zero), field.mul(v, pv)
                            )
                            if k:
                                acc[w] = k
                            else:
                                acc.pop(w, None)
                for w, v in acc.items():
                    k = field.add(counit_row.get(w, field.zero), field.mul(coeff, v))
                    if k:
                        counit_row[w] = k
                    else:
                        counit_row.pop(w, None)
                # comultiplication and coaction share the expansion of comul(c).
                for pair, dv in c.comul_lift.rows[c_j].items():
                    c1, c2 = divmod(pair, dim_c)
                    w = field.mul(coeff, dv)
                    if not w:
                        continue
                    z1 = cls_x(cls_bc({b_i: field.one}, c1), unit_b)
                    z2 = cls_x(cls_bc(unit_b, c2), {l: field.one})
                    for p1, v1 in z1.items():
                        for p2, v2 in z2.items():
                            k = p1 * x_dim + p2
                            s2 = field.add(
                                comul_row.get(k, field.zero),
                                field.mul(w, field.mul(v1, v2)),
                            )
                            if s2:
                                comul_row[k] = s2
                            else:
                                comul_row.pop(k, None)
                    # coaction: (b (x) c1 (x) 1) (x)_k phi(c2) . b', the product
                    # taken in the right B-module structure of D
                    d_vec = {}
                    for t, pv in phi.rows[c2].items():
                        for q, qv in d.carrier.right_act[l].rows[t].items():
                            k = field.add(
                                d_vec.get(q, field.zero), field.mul(pv, qv)
                            )
                            if k:
                                d_vec[q] = k
                            else:
                                d_vec.pop(q, None)
                    for p1, v1 in z1.items():
                        for q, qv in d_vec.items():
                            k = p1 * d.dim + q
                            s2 = field.add(
                                coact_row.get(k, field.zero),
                                field.mul(w, field.mul(v1, qv)),
                            )
                            if s2:
                                coact_row[k] = s2
                            else:
                                coact_row.pop(k, None)
        comul_rows.append(comul_row)
        counit_rows.append(counit_row)
        coact_rows.append(coact_row)

    coring = Coring(
        b_alg,
        carrier,
        Mat(field, x_dim, x_dim * x_dim, comul_rows),
        Mat(field, x_dim, b_alg.dim, counit_rows),
    )
    extension = make_right_extension(
        coring, d, carrier.right_act, Mat(field, x_dim, x_dim * d.dim, coact_rows)
    )

    collapse_rows = []
    for s in range(x_dim):
        row = {}
        for idx, val in t_bcb.quot.lift.rows[s].items():
            u, l = divmod(idx, dim_b)
            for bc_idx, bc_val in t_bc.quot.lift.rows[u].items():
                b_i, c_j = divmod(bc_idx, dim_c)
                coeff = field.mul(val, bc_val)
                if not coeff:
                    continue
                # b_i . phi(c_j) . b_l through the bimodule structure of D
                for t, v in phi.rows[c_j].items():
                    for u2, uv in d.carrier.left_act[b_i].rows[t].items():
                        for w, wv in d.carrier.right_act[l].rows[u2].items():
                            k = field.add(
                                row.get(w, field.zero),
                                field.mul(coeff, field.mul(v, field.mul(uv, wv))),
                            )
                            if k:
                                row[w] = k
                            else:
                                row.pop(w, None)
        collapse_rows.append(row)
    collapse = Mat(field, x_dim, d.dim, collapse_rows)

    embed_rows = [cls_x(cls_bc(unit_b, j), unit_b) for j in range(dim_c)]
    embed = Mat(field, dim_c, x_dim, embed_rows)

    return BaseRingExtension(coring, extension, collapse, embed, t_bc, t_bcb)


def unit_coring(field):
    """The trivial coring over the ground field: the monoidal unit."""
    return trivial_coring(ground_algebra(field))


def trivial_coring(a):
    """The algebra A as an A-coring: comul the canonical iso, counit the identity."""
    field = a.field
    carrier = regular_bimodule(a)
    rows = []
    for i in range(a.dim):
        rows.append({i * a.dim + j: v for j, v in enumerate(a.unit) if v})
    comul_lift = Mat(field, a.dim, a.dim * a.dim, rows)
    return Coring(a, carrier, comul_lift, Mat.identity(field, a.dim))


def matrix_coalgebra(n, field):
    """The n x n matrix coalgebra over k: comul(e_ij) = sum_t e_it (x) e_tj."""
    dim = n * n
    labels = [f"e_{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    carrier = scalar_bimodule(field, dim, labels)
    one = field.one
    rows = []
    for i in range(n):
        for j in range(n):
            rows.append({(i * n + t) * dim + (t * n + j): one for t in range(n)})
    comul_lift = Mat(field, dim, dim * dim, rows)
    counit = Mat(
        field, dim, 1,
        [{0: one} if i == j else {} for i in range(n) for j in range(n)],
    )
    return Coring(ground_algebra(field), carrier, comul_lift, counit)


def grouplike_coalgebra(table, field, labels=None):
    """The coalgebra on a group's elements: every basis vector is grouplike."""
    from .algebras import check_group_table

    check_group_table(table)
    n = len(table)
    if labels is None:
        labels = [f"g_{i}" for i in range(n)]
    carrier = scalar_bimodule(field, n, labels)
    one = field.one
    comul_lift = Mat(field, n, n * n, [{i * n + i: one} for i in range(n)])
    counit = Mat(field, n, 1, [{0: one} for _ in range(n)])
    return Coring(ground_algebra(field), carrier, comul_lift, counit)


def sweedler_coring(inclusion):
    """The canonical coring A (x)_B A attached to an algebra inclusion B -> A."""
    if map_kernel(inclusion.map).dim != 0:
        raise NotInjective("the algebra map has a nonzero kernel")
    b_alg, a_alg = inclusion.source, inclusion.target
    field = a_alg.field
    # A as an (A,B)-bimodule and as a (B,A)-bimodule, B acting through the inclusion.
    b_right = []
    b_left = []
    for j in range(b_alg.dim):
        img = inclusion.map.rows[j]
        right = Mat.zero(field, a_alg.dim, a_alg.dim)
        left = Mat.zero(field, a_alg.dim, a_alg.dim)
        for t, v in img.items():
            right = right + a_alg.right_regular_mat(t).scale(v)
            left = left + a_alg.left_regular_mat(t).scale(v)
        b_right.append(right)
        b_left.append(left)
    regular = regular_bimodule(a_alg)
    left_factor = Bimodule(a_alg, b_alg, a_alg.dim, regular.left_act, b_right, a_alg.labels)
    right_factor = Bimodule(b_alg, a_alg, a_alg.dim, b_left, regular.right_act, a_alg.labels)
    t = tensor_over_alg(left_factor, right_factor)
    carrier = t.result
    dim_a = a_alg.dim
    unit_a = {i: v for i, v in enumerate(a_alg.unit) if v}

    cls = t.quot.project_vec
    comul_rows = []
    counit_rows = []
    for s in range(carrier.dim):
        comul_row = {}
        counit_row = {}
        for idx, val in t.quot.lift.rows[s].items():
            i, j = divmod(idx, dim_a)
            # comul(a (x) a') = (a (x) 1) (x)_A (1 (x) a')
            z1 = cls({i * dim_a + u: v for u, v in unit_a.items()})
            z2 = cls({u * dim_a + j: v for u, v in unit_a.items()})
            for p1, v1 in z1.items():
                for p2, v2 in z2.items():
                    k = p1 * carrier.dim + p2
                    s2 = field.add(
                        comul_row.get(k, field.zero),
                        field.mul(val, field.mul(v1, v2)),
                    )
                    if s2:
                        comul_row[k] = s2
                    else:
                        comul_row.pop(k, None)
            for w, pv in enumerate(a_alg.table[i][j]):
                if pv:
                    k = field.add(counit_row.get(w, field.zero), field.mul(val, pv))
                    if k:
                        counit_row[w] = k
                    else:
                        counit_row.pop(w, None)
        comul_rows.append(comul_row)
        counit_rows.append(counit_row)
    return Coring(
        a_alg,
        carrier,
        Mat(field, carrier.dim, carrier.dim**2, comul_rows),
        Mat(field, carrier.dim, dim_a, counit_rows),
    )
