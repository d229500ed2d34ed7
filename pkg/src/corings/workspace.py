"""Declarative JSON workspaces: parse, validate on load, and dump.

A workspace file has top-level keys `field`, `algebras`, `modules`, `corings`,
`extensions`, `morphisms`.  Matrices are arrays of arrays of scalar strings
("3/4" over the rationals, "2" over a prime field; plain ints are accepted).
Comultiplications and coactions are given as lifts into the ambient (x)_k
space with row-major pair indexing, so files never depend on internal pivot
choices.  Loading validates every object; the first violation aborts with the
object name and a witness.
"""

from __future__ import annotations

import json

from .algebras import (
    ALGEBRA_LAWS,
    AlgebraMorphism,
    FinDimAlgebra,
    check_algebra,
    dual_numbers,
    ground_algebra,
    group_algebra,
)
from .bimodules import BIMODULE_LAWS, Bimodule
from .category import (
    CORINGS_MORPHISM_LAWS,
    EXT_MORPHISM_LAWS,
    CoringsMorphism,
    ExtMorphism,
    check_corings_morphism,
    check_ext_morphism,
    corings_identity,
    counit_corings_morphism,
    ext_identity,
    ext_to_trivial,
    ext_to_unit,
    grouplike_corings_morphism,
    trivial_corings_morphism,
)
from .constructions import (
    EXTENSION_LAWS,
    grouplike_coalgebra,
    make_right_extension,
    matrix_coalgebra,
    regular_extension,
    sweedler_coring,
    trivial_coring,
    trivial_extension,
    unit_coring,
    unit_extension,
)
from .coring import CORING_LAWS, check_coring
from .errors import (
    CoringsError,
    ExtensionError,
    UnknownReference,
    ValidationFailure,
    WorkspaceSyntaxError,
)
from .linalg import Field, Mat

LAWS_BY_KIND = {
    "algebra": ALGEBRA_LAWS,
    "module": BIMODULE_LAWS,
    "coring": CORING_LAWS,
    "extension": EXTENSION_LAWS,
    "ext-morphism": EXT_MORPHISM_LAWS,
    "corings-morphism": CORINGS_MORPHISM_LAWS,
}


class Workspace:
    def __init__(self, field):
        self.field = field
        self.algebras = {}
        self.modules = {}
        self.corings = {}
        self.extensions = {}
        self.morphisms = {}

    def find(self, name):
        """Resolve a name to (kind, object) across all sections."""
        if name in self.corings:
            return "coring", self.corings[name]
        if name in self.algebras:
            return "algebra", self.algebras[name]
        if name in self.modules:
            return "module", self.modules[name]
        if name in self.extensions:
            return "extension", self.extensions[name]
        if name in self.morphisms:
            kind, obj = self.morphisms[name]
            return f"{kind}-morphism", obj
        raise UnknownReference(f'no object named "{name}"')


def _mat(field, data, nrows=None, ncols=None, what="matrix"):
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise WorkspaceSyntaxError(f"{what} must be an array of arrays of scalars")
    try:
        if data:
            m = Mat.from_rows(field, data)
        else:
            m = Mat(field, 0, ncols or 0, [])
    except CoringsError as e:
        raise WorkspaceSyntaxError(f"{what}: {e}")
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise WorkspaceSyntaxError(f"{what}: {e}")
    if nrows is not None and m.nrows != nrows:
        raise WorkspaceSyntaxError(f"{what}: expected {nrows} rows, got {m.nrows}")
    if ncols is not None and m.ncols != ncols:
        raise WorkspaceSyntaxError(f"{what}: expected {ncols} columns, got {m.ncols}")
    return m


def _require(spec, key, what):
    if key not in spec:
        raise WorkspaceSyntaxError(f"{what}: missing key {key!r}")
    return spec[key]


def _parse_field(spec):
    if not isinstance(spec, dict) or "kind" not in spec:
        raise WorkspaceSyntaxError('field: expected {"kind": "rationals" | "prime"}')
    kind = spec["kind"]
    if kind == "rationals":
        return Field.rationals()
    if kind == "prime":
        try:
            return Field.prime(_require(spec, "p", "field"))
        except (ValueError, TypeError) as e:
            raise WorkspaceSyntaxError(f"field: {e}")
    raise WorkspaceSyntaxError(f"field: unknown kind {kind!r}")


def _parse_algebra(ws, name, spec):
    what = f"algebra {name}"
    if "fixture" in spec:
        fx = spec["fixture"]
        kind = _require(fx, "kind", what)
        if kind == "ground":
            return ground_algebra(ws.field)
        if kind == "dual_numbers":
            return dual_numbers(ws.field)
        if kind == "group_algebra":
            try:
                return group_algebra(ws.field, _require(fx, "table", what))
            except ValueError as e:
                raise WorkspaceSyntaxError(f"{what}: {e}")
        raise WorkspaceSyntaxError(f"{what}: unknown fixture kind {kind!r}")
    dim = _require(spec, "dim", what)
    table = _require(spec, "table", what)
    try:
        coerced = [
            [[ws.field.coerce(x) for x in vec] for vec in row] for row in table
        ]
        return FinDimAlgebra(
            ws.field, dim, coerced,
            [ws.field.coerce(x) for x in _require(spec, "unit", what)],
            spec.get("labels"),
        )
    except CoringsError as e:
        raise WorkspaceSyntaxError(f"{what}: {e}")
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise WorkspaceSyntaxError(f"{what}: {e}")


def _get_algebra(ws, ref, what):
    if not isinstance(ref, str):
        raise WorkspaceSyntaxError(f"{what}: algebra reference must be a name")
    if ref not in ws.algebras:
        raise UnknownReference(f'no object named "{ref}"')
    return ws.algebras[ref]


def _parse_module(ws, name, spec):
    what = f"module {name}"
    left = _get_algebra(ws, _require(spec, "left", what), what)
    right = _get_algebra(ws, _require(spec, "right", what), what)
    dim = _require(spec, "dim", what)
    left_action = _require(spec, "left_action", what)
    right_action = _require(spec, "right_action", what)
    try:
        return Bimodule(
            left, right, dim,
            [_mat(ws.field, m, dim, dim, what) for m in left_action],
            [_mat(ws.field, m, dim, dim, what) for m in right_action],
            spec.get("labels"),
        )
    except CoringsError as e:
        if isinstance(e, WorkspaceSyntaxError):
            raise
        raise WorkspaceSyntaxError(f"{what}: {e}")


def _get_coring(ws, ref, what):
    if not isinstance(ref, str):
        raise WorkspaceSyntaxError(f"{what}: coring reference must be a name")
    if ref not in ws.corings:
        raise UnknownReference(f'no object named "{ref}"')
    return ws.corings[ref]


def _parse_coring(ws, name, spec):
    from .coring import Coring

    what = f"coring {name}"
    if "fixture" in spec:
        fx = spec["fixture"]
        kind = _require(fx, "kind", what)
        try:
            if kind == "trivial":
                return trivial_coring(_get_algebra(ws, _require(fx, "algebra", what), what))
            if kind == "unit":
                return unit_coring(ws.field)
            if kind == "matrix_coalgebra":
                return matrix_coalgebra(_require(fx, "n", what), ws.field)
            if kind == "grouplike":
                return grouplike_coalgebra(_require(fx, "table", what), ws.field)
            if kind == "sweedler":
                src = _get_algebra(ws, _require(fx, "source", what), what)
                tgt = _get_algebra(ws, _require(fx, "target", what), what)
                inc = AlgebraMorphism(
                    src, tgt, _mat(ws.field, _require(fx, "map", what), src.dim, tgt.dim, what)
                )
                return sweedler_coring(inc)
        except CoringsError as e:
            if isinstance(e, (WorkspaceSyntaxError, UnknownReference)):
                raise
            raise WorkspaceSyntaxError(f"{what}: {e}")
        except ValueError as e:
            raise WorkspaceSyntaxError(f"{what}: {e}")
        raise WorkspaceSyntaxError(f"{what}: unknown fixture kind {kind!r}")
    base = _get_algebra(ws, _require(spec, "base", what), what)
    carrier_spec = _require(spec, "carrier", what)
    if isinstance(carrier_spec, str):
        if carrier_spec not in ws.modules:
            raise UnknownReference(f'no object named "{carrier_spec}"')
        carrier = ws.modules[carrier_spec]
    else:
        carrier = _parse_module(ws, f"{name}.carrier", carrier_spec)
    try:
        return Coring(
            base,
            carrier,
            _mat(ws.field, _require(spec, "comul_lift", what),
                 carrier.dim, carrier.dim**2, what),
            _mat(ws.field, _require(spec, "counit", what), carrier.dim, base.dim, what),
        )
    except CoringsError as e:
        if isinstance(e, (WorkspaceSyntaxError, UnknownReference)):
            raise
        raise WorkspaceSyntaxError(f"{what}: {e}")


def _parse_extension(ws, name, spec):
    what = f"extension {name}"
    if "fixture" in spec:
        fx = spec["fixture"]
        kind = _require(fx, "kind", what)
        c = _get_coring(ws, _require(fx, "coring", what), what)
        builders = {
            "regular": regular_extension,
            "unit": unit_extension,
            "trivial": trivial_extension,
        }
        if kind not in builders:
            raise WorkspaceSyntaxError(f"{what}: unknown fixture kind {kind!r}")
        try:
            return builders[kind](c)
        except ExtensionError as e:
            raise ValidationFailure(name, e.law, e.witness)
    c = _get_coring(ws, _require(spec, "coring", what), what)
    d = _get_coring(ws, _require(spec, "by", what), what)
    mats = [
        _mat(ws.field, m, c.dim, c.dim, what)
        for m in _require(spec, "right_action", what)
    ]
    if len(mats) != d.base.dim:
        raise WorkspaceSyntaxError(
            f"{what}: need one right-action matrix per basis element of the new base"
        )
    lift = _mat(ws.field, _require(spec, "coaction_lift", what), c.dim, c.dim * d.dim, what)
    try:
        return make_right_extension(c, d, mats, lift)
    except ExtensionError as e:
        raise ValidationFailure(name, e.law, e.witness)


def _parse_morphism(ws, name, spec):
    what = f"morphism {name}"
    kind = _require(spec, "kind", what)
    if kind not in ("ext", "corings"):
        raise WorkspaceSyntaxError(f"{what}: kind must be 'ext' or 'corings'")
    if "fixture" in spec:
        fx = spec["fixture"]
        fkind = _require(fx, "kind", what)
        if kind == "ext":
            builders = {
                "identity": ext_identity,
                "to-unit": ext_to_unit,
                "to-trivial": ext_to_trivial,
            }
            if fkind not in builders:
                raise WorkspaceSyntaxError(f"{what}: unknown fixture kind {fkind!r}")
            return kind, builders[fkind](_get_coring(ws, _require(fx, "coring", what), what))
        if fkind == "identity":
            return kind, corings_identity(_get_coring(ws, _require(fx, "coring", what), what))
        if fkind == "counit":
            return kind, counit_corings_morphism(
                _get_coring(ws, _require(fx, "coring", what), what)
            )
        if fkind == "trivial":
            src = _get_algebra(ws, _require(fx, "source", what), what)
            tgt = _get_algebra(ws, _require(fx, "target", what), what)
            f = AlgebraMorphism(
                src, tgt, _mat(ws.field, _require(fx, "map", what), src.dim, tgt.dim, what)
            )
            return kind, trivial_corings_morphism(f)
        if fkind == "grouplike":
            src = _get_coring(ws, _require(fx, "source", what), what)
            tgt = _get_coring(ws, _require(fx, "target", what), what)
            return kind, grouplike_corings_morphism(
                src, tgt, _require(fx, "mapping", what)
            )
        raise WorkspaceSyntaxError(f"{what}: unknown fixture kind {fkind!r}")
    src = _get_coring(ws, _require(spec, "source", what), what)
    tgt = _get_coring(ws, _require(spec, "target", what), what)
    try:
        if kind == "ext":
            return kind, ExtMorphism(
                src, tgt,
                _mat(ws.field, _require(spec, "action", what),
                     src.dim * tgt.base.dim, src.dim, what),
                _mat(ws.field, _require(spec, "coaction_lift", what),
                     src.dim, src.dim * tgt.dim, what),
            )
        varphi = AlgebraMorphism(
            src.base, tgt.base,
            _mat(ws.field, _require(spec, "alg_map", what),
                 src.base.dim, tgt.base.dim, what),
        )
        return kind, CoringsMorphism(
            src, tgt,
            _mat(ws.field, _require(spec, "phi", what), src.dim, tgt.dim, what),
            varphi,
        )
    except CoringsError as e:
        if isinstance(e, (WorkspaceSyntaxError, UnknownReference)):
            raise
        raise WorkspaceSyntaxError(f"{what}: {e}")


def _validate(name, kind, verdict):
    if not verdict.ok:
        raise ValidationFailure(name, verdict.law, verdict.witness)


def parse_workspace(text, source="<workspace>"):
    """Parse and validate a workspace document; load means validate."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkspaceSyntaxError(f"{source}:{e.lineno}: {e.msg}")
    if not isinstance(doc, dict):
        raise WorkspaceSyntaxError(f"{source}: top level must be an object")
    for key in doc:
        if key not in ("field", "algebras", "modules", "corings", "extensions", "morphisms"):
            raise WorkspaceSyntaxError(f"{source}: unknown top-level key {key!r}")
    if "field" not in doc:
        raise WorkspaceSyntaxError(f"{source}: missing top-level key 'field'")
    ws = Workspace(_parse_field(doc["field"]))

    for name, spec in doc.get("algebras", {}).items():
        a = _parse_algebra(ws, name, spec)
        _validate(name, "algebra", check_algebra(a))
        ws.algebras[name] = a
    for name, spec in doc.get("modules", {}).items():
        m = _parse_module(ws, name, spec)
        _validate(name, "module", m.check())
        ws.modules[name] = m
    for name, spec in doc.get("corings", {}).items():
        c = _parse_coring(ws, name, spec)
        _validate(name, "coring", check_coring(c))
        ws.corings[name] = c
    for name, spec in doc.get("extensions", {}).items():
        ws.extensions[name] = _parse_extension(ws, name, spec)
    for name, spec in doc.get("morphisms", {}).items():
        kind, m = _parse_morphism(ws, name, spec)
        if kind == "ext":
            _validate(name, kind, check_ext_morphism(m))
        else:
            _validate(name, kind, check_corings_morphism(m))
        ws.morphisms[name] = (kind, m)
    return ws


def load_workspace(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_workspace(text, source=str(path))


def field_to_json(field):
    if field.is_prime_field:
        return {"kind": "prime", "p": field.p}
    return {"kind": "rationals"}


def mat_to_json(m):
    fmt = m.field.fmt
    return [[fmt(x) for x in row] for row in m.to_lists()]


def algebra_to_json(a):
    fmt = a.field.fmt
    out = {
        "dim": a.dim,
        "table": [[[fmt(x) for x in vec] for vec in row] for row in a.table],
        "unit": [fmt(x) for x in a.unit],
    }
    if a.labels is not None:
        out["labels"] = list(a.labels)
    return out


class Dumper:
    """Collects a self-contained workspace fragment for constructed objects.

    Objects structurally equal to a workspace entry are written back under
    their existing name; anything else gets a deterministic generated name.
    """

    def __init__(self, ws):
        self.ws = ws
        self.doc = {
            "field": field_to_json(ws.field),
            "algebras": {},
            "modules": {},
            "corings": {},
            "extensions": {},
            "morphisms": {},
        }
        self._anon = 0

    def _fresh(self, prefix):
        self._anon += 1
        return f"{prefix}_{self._anon}"

    def algebra(self, a):
        for name, known in self.ws.algebras.items():
            if known == a:
                self.doc["algebras"].setdefault(name, algebra_to_json(a))
                return name
        for name, entry in self.doc["algebras"].items():
            if name not in self.ws.algebras and entry == algebra_to_json(a):
                return name
        name = self._fresh("algebra")
        self.doc["algebras"][name] = algebra_to_json(a)
        return name

    def module_json(self, m):
        out = {
            "left": self.algebra(m.left_alg),
            "right": self.algebra(m.right_alg),
            "dim": m.dim,
            "left_action": [mat_to_json(x) for x in m.left_act],
            "right_action": [mat_to_json(x) for x in m.right_act],
        }
        if m.labels is not None:
            out["labels"] = list(m.labels)
        return out

    def coring_json(self, c):
        return {
            "base": self.algebra(c.base),
            "carrier": self.module_json(c.carrier),
            "comul_lift": mat_to_json(c.comul_lift),
            "counit": mat_to_json(c.counit_mat),
        }

    def coring(self, c, name=None):
        if name is None:
            for known_name, known in self.ws.corings.items():
                if known == c:
                    self.doc["corings"].setdefault(known_name, self.coring_json(c))
                    return known_name
            name = self._fresh("coring")
        self.doc["corings"][name] = self.coring_json(c)
        return name

    def extension(self, e, name=None):
        entry = {
            "coring": self.coring(e.c),
            "by": self.coring(e.d),
            "right_action": [mat_to_json(x) for x in e.bimodule.right_act],
            "coaction_lift": mat_to_json(e.coact_lift),
        }
        if name is None:
            name = self._fresh("extension")
        self.doc["extensions"][name] = entry
        return name

    def morphism(self, kind, m, name=None):
        if kind == "ext":
            entry = {
                "kind": "ext",
                "source": self.coring(m.source),
                "target": self.coring(m.target),
                "action": mat_to_json(m.rho_action),
                "coaction_lift": mat_to_json(m.coact_lift),
            }
        else:
            entry = {
                "kind": "corings",
                "source": self.coring(m.source),
                "target": self.coring(m.target),
                "phi": mat_to_json(m.phi),
                "alg_map": mat_to_json(m.varphi.map),
            }
        if name is None:
            name = self._fresh("morphism")
        self.doc["morphisms"][name] = entry
        return name

    def text(self):
        doc = {k: v for k, v in self.doc.items() if k == "field" or v}
        return json.dumps(doc, indent=2) + "\n"
