"""Bimodules, presented tensor products, and the canonical regrouping maps.

A Bimodule stores one action matrix per basis element of each acting algebra,
in the row-vector convention of `linalg`: the image of a_i . m is m_coords @
left_act[i], so the left module law reads L[a_i a_j] = L_j @ L_i (apply j,
then i) while the right law reads R[b_i b_j] = R_i @ R_j.

M (x)_B N is realized as an explicit quotient of M (x)_k N by the span of
(m_i . b_t) (x) n_j  -  m_i (x) (b_t . n_j) over all basis triples; bilinearity
makes these span all relations.  Maps into such a tensor are supplied as lifts
into the ambient (x)_k space, which keeps user input independent of pivot
choices.
"""

from __future__ import annotations

from functools import cached_property

from .algebras import FinDimAlgebra, ground_algebra, tensor_algebra
from .errors import (
    AlgebraMismatch,
    DescentFailure,
    DimensionMismatch,
    FieldMismatch,
    IllDefinedAction,
    IsoFailure,
)
from .linalg import Mat, Subspace, _vadd, kernel, quotient
from .verdict import Verdict

BIMODULE_LAWS = ("left-module", "right-module", "commuting-actions")
BIMODULE_MORPHISM_LAWS = ("left-linear", "right-linear")


class Bimodule:
    __slots__ = ("left_alg", "right_alg", "dim", "left_act", "right_act", "labels")

    def __init__(self, left_alg, right_alg, dim, left_act, right_act, labels=None):
        if left_alg.field != right_alg.field:
            raise FieldMismatch("acting algebras live over different fields")
        if len(left_act) != left_alg.dim or len(right_act) != right_alg.dim:
            raise DimensionMismatch("need one action matrix per algebra basis element")
        for m in list(left_act) + list(right_act):
            if m.nrows != dim or m.ncols != dim or m.field != left_alg.field:
                raise DimensionMismatch("action matrices must be dim x dim over the field")
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.dim = dim
        self.left_act = list(left_act)
        self.right_act = list(right_act)
        self.labels = list(labels) if labels is not None else None

    @property
    def field(self):
        return self.left_alg.field

    def label(self, i):
        if self.labels is not None:
            return self.labels[i]
        return f"e_{i}"

    def act_left(self, coeffs, mat_or_vec):
        """Action matrix of the algebra element with coordinates `coeffs`."""
        out = Mat.zero(self.field, self.dim, self.dim)
        for i, c in enumerate(coeffs):
            if c:
                out = out + self.left_act[i].scale(c)
        return out

    def with_right_action(self, alg, mats, labels=None):
        return Bimodule(self.left_alg, alg, self.dim, self.left_act, mats,
                        labels if labels is not None else self.labels)

    def forget_left(self):
        k = ground_algebra(self.field)
        return Bimodule(k, self.right_alg, self.dim,
                        [Mat.identity(self.field, self.dim)], self.right_act, self.labels)

    def forget_right(self):
        k = ground_algebra(self.field)
        return Bimodule(self.left_alg, k, self.dim,
                        self.left_act, [Mat.identity(self.field, self.dim)], self.labels)

    def check(self):
        """Module laws on both sides and commutation of the two actions."""
        field = self.field
        ident = Mat.identity(field, self.dim)
        passed = []

        def law_mats(alg, acts, compose_ij):
            u = Mat.zero(field, self.dim, self.dim)
            for i, c in enumerate(alg.unit):
                if c:
                    u = u + acts[i].scale(c)
            if u != ident:
                return "unit acts as a non-identity matrix"
            for i in range(alg.dim):
                for j in range(alg.dim):
                    combo = Mat.zero(field, self.dim, self.dim)
                    for t, c in enumerate(alg.table[i][j]):
                        if c:
                            combo = combo + acts[t].scale(c)
                    if combo != compose_ij(acts, i, j):
                        return (
                            f"action of {alg.label(i)}*{alg.label(j)} differs from the "
                            f"composite of the actions of {alg.label(i)} and {alg.label(j)}"
                        )
            return None

        w = law_mats(self.left_alg, self.left_act, lambda acts, i, j: acts[j] @ acts[i])
        if w is not None:
            return Verdict.failed("left-module", w, passed)
        passed.append("left-module")
        w = law_mats(self.right_alg, self.right_act, lambda acts, i, j: acts[i] @ acts[j])
        if w is not None:
            return Verdict.failed("right-module", w, passed)
        passed.append("right-module")
        for i, L in enumerate(self.left_act):
            for j, R in enumerate(self.right_act):
                if L @ R != R @ L:
                    return Verdict.failed(
                        "commuting-actions",
                        f"left action of {self.left_alg.label(i)} does not commute with "
                        f"right action of {self.right_alg.label(j)}",
                        passed,
                    )
        passed.append("commuting-actions")
        return Verdict.passed(passed)

    def __eq__(self, other):
        return (
            isinstance(other, Bimodule)
            and self.left_alg == other.left_alg
            and self.right_alg == other.right_alg
            and self.dim == other.dim
            and self.left_act == other.left_act
            and self.right_act == other.right_act
        )

    __hash__ = None

    def __repr__(self):
        return f"Bimodule(dim {self.dim} over {self.field!r})"


def regular_bimodule(a):
    """The algebra as a bimodule over itself by left/right multiplication."""
    left = [a.left_regular_mat(i) for i in range(a.dim)]
    right = [a.right_regular_mat(j) for j in range(a.dim)]
    return Bimodule(a, a, a.dim, left, right, a.labels)


def scalar_bimodule(field, dim, labels=None):
    """A plain vector space seen as a (k, k)-bimodule."""
    k = ground_algebra(field)
    ident = Mat.identity(field, dim)
    return Bimodule(k, k, dim, [ident], [ident], labels)


class BimoduleMorphism:
    def __init__(self, source, target, map):
        if source.field != target.field or map.field != source.field:
            raise FieldMismatch("morphism data over mixed fields")
        if map.nrows != source.dim or map.ncols != target.dim:
            raise DimensionMismatch(
                f"map must be {source.dim}x{target.dim}, got {map.nrows}x{map.ncols}"
            )
        self.source = source
        self.target = target
        self.map = map

    def check(self):
        """Equivariance for both actions on all algebra basis elements."""
        passed = []
        src, tgt, f = self.source, self.target, self.map
        if src.left_alg != tgt.left_alg or src.right_alg != tgt.right_alg:
            return Verdict.failed("left-linear", "source and target algebras differ", passed)
        for i in range(src.left_alg.dim):
            if src.left_act[i] @ f != f @ tgt.left_act[i]:
                return Verdict.failed(
                    "left-linear",
                    f"map does not commute with the left action of {src.left_alg.label(i)}",
                    passed,
                )
        passed.append("left-linear")
        for j in range(src.right_alg.dim):
            if src.right_act[j] @ f != f @ tgt.right_act[j]:
                return Verdict.failed(
                    "right-linear",
                    f"map does not commute with the right action of {src.right_alg.label(j)}",
                    passed,
                )
        passed.append("right-linear")
        return Verdict.passed(passed)

    def then(self, other):
        return BimoduleMorphism(self.source, other.target, self.map @ other.map)

    def __eq__(self, other):
        return (
            isinstance(other, BimoduleMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.map == other.map
        )

    __hash__ = None


def tensor_over_k(m, n):
    """M (x)_k N with the pairwise bi-action (a(x)a')(m(x)n)(b(x)b') = amb (x) a'nb'."""
    if m.field != n.field:
        raise FieldMismatch("tensor factors over different fields")
    left = [lm.kron(ln) for lm in m.left_act for ln in n.left_act]
    right = [rm.kron(rn) for rm in m.right_act for rn in n.right_act]
    labels = None
    if m.labels is not None and n.labels is not None:
        labels = [f"{x}(x){y}" for x in m.labels for y in n.labels]
    return Bimodule(
        tensor_algebra(m.left_alg, n.left_alg),
        tensor_algebra(m.right_alg, n.right_alg),
        m.dim * n.dim,
        left,
        right,
        labels,
    )


class PresentedTensor:
    """M (x)_B N as a quotient of M (x)_k N with explicit project and lift."""

    def __init__(self, left_factor, right_factor, over, quot, result):
        self.left_factor = left_factor
        self.right_factor = right_factor
        self.over = over
        self.quot = quot
        self.result = result

    @property
    def dim(self):
        return self.quot.dim

    @property
    def project(self):
        return self.quot.project

    @property
    def lift(self):
        return self.quot.lift

    @property
    def relations(self):
        return self.quot.relations

    @property
    def field(self):
        return self.left_factor.field

    @cached_property
    def ambient(self):
        return tensor_over_k(self.left_factor, self.right_factor)

    def pure_class(self, i, j):
        """Quotient coordinates of the class of m_i (x) n_j."""
        return self.quot.project_vec({i * self.right_factor.dim + j: self.field.one})

    def __repr__(self):
        return (
            f"PresentedTensor({self.left_factor.dim}(x){self.right_factor.dim}"
            f" over middle dim {self.over.dim}: quotient dim {self.dim})"
        )


def tensor_over_alg(m, n):
    """M (x)_B N for an (A,B)-bimodule M and a (B,C)-bimodule N.

    The induced outer actions are verified to preserve the relation subspace;
    IllDefinedAction cannot fire for inputs satisfying the bimodule laws and is
    kept as an internal consistency guard.
    """
    if m.field != n.field:
        raise FieldMismatch("tensor factors over different fields")
    if m.right_alg != n.left_alg:
        raise AlgebraMismatch("middle algebras differ")
    field = m.field
    over = m.right_alg
    nd = n.dim
    ambient_dim = m.dim * nd

    gens = []
    for t in range(over.dim):
        right_rows = m.right_act[t].rows
        left_rows = n.left_act[t].rows
        for i in range(m.dim):
            ri = right_rows[i]
            for j in range(nd):
                g = {}
                for u, v in ri.items():
                    g[u * nd + j] = v
                _vadd(field, g, {i * nd + w: v for w, v in left_rows[j].items()},
                      field.neg(field.one))
                if g:
                    gens.append(g)
    relations = Subspace.from_generators(field, ambient_dim, gens)
    quot = quotient(ambient_dim, relations)

    def induce(amb_row_image):
        rows = []
        for s in range(quot.dim):
            img = amb_row_image(quot.lift.rows[s])
            rows.append(quot.project_vec(img))
        return Mat(field, quot.dim, quot.dim, rows)

    def check_preserved(amb_row_image, what):
        for r in relations.basis.rows:
            if not relations.contains(amb_row_image(r)):
                raise IllDefinedAction(f"{what} does not preserve the relations")

    def left_image(p):
        lp = m.left_act[p].rows

        def img(vec):
            out = {}
            for idx, val in vec.items():
                i, j = divmod(idx, nd)
                _vadd(field, out, {u * nd + j: v for u, v in lp[i].items()}, val)
            return out

        return img

    def right_image(q):
        rq = n.right_act[q].rows

        def img(vec):
            out = {}
            for idx, val in vec.items():
                i, j = divmod(idx, nd)
                _vadd(field, out, {i * nd + w: v for w, v in rq[j].items()}, val)
            return out

        return img

    left_mats = []
    for p in range(m.left_alg.dim):
        img = left_image(p)
        check_preserved(img, f"left action of {m.left_alg.label(p)}")
        left_mats.append(induce(img))
    right_mats = []
    for q in range(n.right_alg.dim):
        img = right_image(q)
        check_preserved(img, f"right action of {n.right_alg.label(q)}")
        right_mats.append(induce(img))

    result = Bimodule(m.left_alg, n.right_alg, quot.dim, left_mats, right_mats)
    return PresentedTensor(m, n, over, quot, result)


def _as_mat(f):
    return f.map if isinstance(f, BimoduleMorphism) else f


def _kron_apply(field, f, g, ncols_g_src, ncols_g_tgt, vec):
    """Image of a sparse ambient vector under f (x) g without materializing it."""
    out = {}
    p = field.p
    for idx, val in vec.items():
        i, j = divmod(idx, ncols_g_src)
        gi = g.rows[j]
        for u, fv in f.rows[i].items():
            base = u * ncols_g_tgt
            coeff = val * fv if p is None else (val * fv) % p
            if coeff:
                _vadd(field, out, {base + w: v for w, v in gi.items()}, coeff)
    return out


def induced_map_on_tensor(f, g, t_src, t_tgt):
    """The map f (x)_B g between two presented tensors over the same middle algebra.

    The ambient map must send source relations into target relations
    (DescentFailure otherwise, which signals a non-bilinear input pair); the
    returned morphism is project_tgt after (f (x) g) after lift_src.
    """
    fm, gm = _as_mat(f), _as_mat(g)
    if t_src.over != t_tgt.over:
        raise AlgebraMismatch("presented tensors have different middle algebras")
    if fm.nrows != t_src.left_factor.dim or fm.ncols != t_tgt.left_factor.dim:
        raise DimensionMismatch("left map incompatible with the tensor factors")
    if gm.nrows != t_src.right_factor.dim or gm.ncols != t_tgt.right_factor.dim:
        raise DimensionMismatch("right map incompatible with the tensor factors")
    field = t_src.field
    nd_src = t_src.right_factor.dim
    nd_tgt = t_tgt.right_factor.dim

    for r in t_src.relations.basis.rows:
        img = _kron_apply(field, fm, gm, nd_src, nd_tgt, r)
        if not t_tgt.relations.contains(img):
            raise DescentFailure(
                "ambient map does not send source relations into target relations"
            )

    rows = []
    for s in range(t_src.dim):
        img = _kron_apply(field, fm, gm, nd_src, nd_tgt, t_src.quot.lift.rows[s])
        rows.append(t_tgt.quot.project_vec(img))
    return BimoduleMorphism(
        t_src.result, t_tgt.result, Mat(field, t_src.dim, t_tgt.dim, rows)
    )


def middle_swap(field, a, b, c, d):
    """Permutation (X1 (x) X2) (x) (Y1 (x) Y2) -> (X1 (x) Y1) (x) (X2 (x) Y2).

    Index ((x,y),(z,w)) is sent to ((x,z),(y,w)) in row-major coordinates.
    """
    one = field.one
    total = a * b * c * d
    rows = []
    for x in range(a):
        for y in range(b):
            for z in range(c):
                for w in range(d):
                    rows.append({((x * c + z) * b + y) * d + w: one})
    return Mat(field, total, total, rows)


def interchange_target(t1, t2):
    """Presentation of (M (x) N) (x)_{A(x)A'} (C (x) C') for the regrouping map."""
    mn = tensor_over_k(t1.left_factor, t2.left_factor)
    cc = tensor_over_k(t1.right_factor, t2.right_factor)
    return tensor_over_alg(mn, cc)


def interchange_iso(t1, t2, target=None):
    """Canonical regrouping isomorphism

        (M (x)_A C) (x)_k (N (x)_A' C')  ->  (M (x)_k N) (x)_{A(x)A'} (C (x)_k C')

    defined on pure tensors by shuffling coordinates.  Well-definedness on both
    quotient presentations is verified, as is invertibility.  The returned
    morphism carries the target presentation as `.target_tensor` and the
    inverse matrix as `.inverse_map`.
    """
    if t1.field != t2.field:
        raise FieldMismatch("factors over different fields")
    for t in (t1, t2):
        if t.right_factor.left_alg != t.over or t.right_factor.right_alg != t.over:
            raise AlgebraMismatch(
                "right factor must be a bimodule over the middle algebra on both sides"
            )
    field = t1.field
    d_m, d_c = t1.left_factor.dim, t1.right_factor.dim
    d_n, d_c2 = t2.left_factor.dim, t2.right_factor.dim
    if target is None:
        target = interchange_target(t1, t2)
    if target.quot.ambient_dim != d_m * d_c * d_n * d_c2:
        raise DimensionMismatch("target presentation has the wrong ambient dimension")

    def shuffle(idx1, idx2):
        i, c = divmod(idx1, d_c)
        j, c2 = divmod(idx2, d_c2)
        return (i * d_n + j) * (d_c * d_c2) + c * d_c2 + c2

    # Well-definedness: relations of either factor, tensored with any ambient
    # basis vector of the other, must die in the target quotient.
    one = field.one
    for r in t1.relations.basis.rows:
        for idx2 in range(d_n * d_c2):
            vec = {shuffle(idx1, idx2): v for idx1, v in r.items()}
            if not target.relations.contains(vec):
                raise DescentFailure("regrouping map is not well defined (left factor)")
    for r in t2.relations.basis.rows:
        for idx1 in range(d_m * d_c):
            vec = {shuffle(idx1, idx2): v for idx2, v in r.items()}
            if not target.relations.contains(vec):
                raise DescentFailure("regrouping map is not well defined (right factor)")

    source = tensor_over_k(t1.result, t2.result)
    rows = []
    p = field.p
    for s in range(t1.dim):
        w1 = t1.quot.lift.rows[s]
        for t in range(t2.dim):
            w2 = t2.quot.lift.rows[t]
            amb = {}
            for idx1, v1 in w1.items():
                for idx2, v2 in w2.items():
                    coeff = v1 * v2 if p is None else (v1 * v2) % p
                    if coeff:
                        amb[shuffle(idx1, idx2)] = coeff
            rows.append(target.quot.project_vec(amb))
    mat = Mat(field, t1.dim * t2.dim, target.dim, rows)
    if mat.nrows != mat.ncols:
        raise IsoFailure(
            f"regrouping map is {mat.nrows}x{mat.ncols}, hence not invertible"
        )
    inverse = mat.inverse()
    morphism = BimoduleMorphism(source, target.result, mat)
    morphism.target_tensor = target
    morphism.inverse_map = inverse
    return morphism


class InterchangeFixtures:
    """Prebuilt presentations for naturality checks of the regrouping map.

    Holds modules m -> m2 over A, n -> n2 over A', the two carriers cc, cc2,
    the four presented tensors, and the regrouping isos at both corners.
    """

    def __init__(self, m, m2, n, n2, cc, cc2):
        self.m, self.m2, self.n, self.n2 = m, m2, n, n2
        self.cc, self.cc2 = cc, cc2
        self.t_mc = tensor_over_alg(m, cc)
        self.t_m2c = tensor_over_alg(m2, cc)
        self.t_nc = tensor_over_alg(n, cc2)
        self.t_n2c = tensor_over_alg(n2, cc2)
        self.iso = interchange_iso(self.t_mc, self.t_nc)
        self.iso2 = interchange_iso(self.t_m2c, self.t_n2c)


def check_interchange_naturality(f, g, fixtures):
    """Naturality square of the regrouping iso for right-linear maps f, g.

    f: M -> M2 must be right-A-linear and g: N -> N2 right-A'-linear; violating
    maps are rejected with ValueError before any square is formed.
    """
    fx = fixtures
    fm, gm = _as_mat(f), _as_mat(g)
    for j in range(fx.m.right_alg.dim):
        if fx.m.right_act[j] @ fm != fm @ fx.m2.right_act[j]:
            raise ValueError("f is not right-linear over the first base algebra")
    for j in range(fx.n.right_alg.dim):
        if fx.n.right_act[j] @ gm != gm @ fx.n2.right_act[j]:
            raise ValueError("g is not right-linear over the second base algebra")

    ident_c = Mat.identity(fx.cc.field, fx.cc.dim)
    ident_c2 = Mat.identity(fx.cc2.field, fx.cc2.dim)
    f_tens = induced_map_on_tensor(fm, ident_c, fx.t_mc, fx.t_m2c)
    g_tens = induced_map_on_tensor(gm, ident_c2, fx.t_nc, fx.t_n2c)
    lhs = f_tens.map.kron(g_tens.map) @ fx.iso2.map

    fg = fm.kron(gm)
    ident_cc = Mat.identity(fx.cc.field, fx.cc.dim * fx.cc2.dim)
    fg_tens = induced_map_on_tensor(
        fg, ident_cc, fx.iso.target_tensor, fx.iso2.target_tensor
    )
    rhs = fx.iso.map @ fg_tens.map
    if lhs != rhs:
        return Verdict.failed(
            "naturality",
            "the two composites through the regrouping square differ",
        )
    return Verdict.passed(("naturality",))


def left_unit_collapse(t):
    """Inverse of a (x) m -> class(a (x) m) for t = A (x)_A M: sends it to a.m."""
    field = t.field
    m = t.right_factor
    nd = m.dim
    rows = []
    for s in range(t.dim):
        out = {}
        for idx, val in t.quot.lift.rows[s].items():
            i, j = divmod(idx, nd)
            _vadd(field, out, m.left_act[i].rows[j], val)
        rows.append(out)
    mat = Mat(field, t.dim, nd, rows)
    if t.dim != nd:
        raise IsoFailure("left unit collapse is not square")
    mat.inverse()
    return mat


def right_unit_collapse(t):
    """m (x) a -> m.a for t = M (x)_A A, verified invertible."""
    field = t.field
    m = t.left_factor
    nd = t.right_factor.dim
    rows = []
    for s in range(t.dim):
        out = {}
        for idx, val in t.quot.lift.rows[s].items():
            i, j = divmod(idx, nd)
            _vadd(field, out, m.right_act[j].rows[i], val)
        rows.append(out)
    mat = Mat(field, t.dim, m.dim, rows)
    if t.dim != m.dim:
        raise IsoFailure("right unit collapse is not square")
    mat.inverse()
    return mat


def left_unit_embed(t):
    """m -> class(1 (x) m) for t = A (x)_A M."""
    field = t.field
    a = t.left_factor.left_alg
    nd = t.right_factor.dim
    rows = []
    for j in range(nd):
        vec = {i * nd + j: c for i, c in enumerate(a.unit) if c}
        rows.append(t.quot.project_vec(vec))
    return Mat(field, nd, t.dim, rows)


def right_unit_embed(t):
    """m -> class(m (x) 1) for t = M (x)_A A."""
    field = t.field
    a = t.right_factor.right_alg
    nd = t.right_factor.dim
    rows = []
    for i in range(t.left_factor.dim):
        vec = {i * nd + j: c for j, c in enumerate(a.unit) if c}
        rows.append(t.quot.project_vec(vec))
    return Mat(field, t.left_factor.dim, t.dim, rows)


def associator(t_mn, t_left, t_np, t_right):
    """Canonical isomorphisms between (M (x) N) (x) P and M (x) (N (x) P).

    Returns (alpha, alpha_inv) with alpha: right-associated -> left-associated.
    Both directions are verified against the flat triple-tensor projections
    pi_L and pi_R (alpha maps the class of v to the class of v), which raises
    IsoFailure if the two presentations do not present the same quotient.
    """
    field = t_mn.field
    d_m = t_mn.left_factor.dim
    d_n = t_mn.right_factor.dim
    d_p = t_np.right_factor.dim
    if t_np.left_factor.dim != d_n:
        raise DimensionMismatch("middle factors of the two groupings differ")
    ident_p = Mat.identity(field, d_p)
    ident_m = Mat.identity(field, d_m)
    pi_left = t_mn.quot.project.kron(ident_p) @ t_left.quot.project
    pi_right = ident_m.kron(t_np.quot.project) @ t_right.quot.project

    q_np = t_np.dim
    rows = []
    for s in range(t_right.dim):
        flat = {}
        for idx, val in t_right.quot.lift.rows[s].items():
            i, u = divmod(idx, q_np)
            _vadd(
                field,
                flat,
                {i * (d_n * d_p) + jl: v for jl, v in t_np.quot.lift.rows[u].items()},
                val,
            )
        rows.append(pi_left.apply(flat))
    alpha = Mat(field, t_right.dim, t_left.dim, rows)

    q_mn = t_mn.dim
    rows = []
    for s in range(t_left.dim):
        flat = {}
        for idx, val in t_left.quot.lift.rows[s].items():
            u, l = divmod(idx, d_p)
            _vadd(
                field,
                flat,
                {ij * d_p + l: v for ij, v in t_mn.quot.lift.rows[u].items()},
                val,
            )
        rows.append(pi_right.apply(flat))
    alpha_inv = Mat(field, t_left.dim, t_right.dim, rows)

    if pi_right @ alpha != pi_left or pi_left @ alpha_inv != pi_right:
        raise IsoFailure("the two associativity presentations do not agree")
    return alpha, alpha_inv


def module_hom_space(m, n, side="right"):
    """Basis of the space of one-sided module maps m -> n (as matrices).

    `side` picks which action must be respected; the other side is ignored,
    matching how morphisms of right modules are quantified.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    acts_m = m.right_act if side == "right" else m.left_act
    acts_n = n.right_act if side == "right" else n.left_act
    alg = m.right_alg if side == "right" else m.left_alg
    alg_n = n.right_alg if side == "right" else n.left_alg
    if alg != alg_n:
        raise AlgebraMismatch("modules are not over the same algebra")
    field = m.field
    unknowns = m.dim * n.dim
    rows = []
    for t in range(alg.dim):
        R, S = acts_m[t], acts_n[t]
        for i in range(m.dim):
            for tp in range(n.dim):
                row = {}
                for u, v in R.rows[i].items():
                    row[u * n.dim + tp] = v
                _vadd(
                    field,
                    row,
                    {i * n.dim + w: S.rows[w].get(tp, field.zero) for w in range(n.dim)
                     if S.rows[w].get(tp)},
                    field.neg(field.one),
                )
                if row:
                    rows.append(row)
    constraint = Mat(field, len(rows), unknowns, rows)
    sol = kernel(constraint)
    mats = []
    for r in sol.basis.rows:
        mat_rows = [{} for _ in range(m.dim)]
        for idx, v in r.items():
            i, j = divmod(idx, n.dim)
            mat_rows[i][j] = v
        mats.append(Mat(field, m.dim, n.dim, mat_rows))
    return mats


def random_module_hom(rng, basis, field, shape):
    """Deterministic random combination of a module-hom basis."""
    out = Mat.zero(field, shape[0], shape[1])
    for b in basis:
        c = field.from_int(rng.randint(-3, 3))
        if c:
            out = out + b.scale(c)
    return out
