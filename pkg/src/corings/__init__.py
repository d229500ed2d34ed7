"""Exact computational algebra for corings over finite-dimensional algebras.

Everything is computed over the rationals or a prime field with exact
arithmetic: algebras by structure constants, bimodules by action matrices,
tensor products over an algebra as explicit quotients, corings and their
comodules, right coring extensions, and the two monoidal categories built on
them.  Every construction is paired with a machine checker that verifies the
defining axioms as exact matrix identities.
"""

from .algebras import (
    AlgebraMorphism,
    FinDimAlgebra,
    check_algebra,
    check_algebra_morphism,
    dual_numbers,
    ground_algebra,
    group_algebra,
    identity_morphism,
    tensor_algebra,
    tensor_algebra_morphism,
)
from .bimodules import (
    Bimodule,
    BimoduleMorphism,
    InterchangeFixtures,
    PresentedTensor,
    check_interchange_naturality,
    induced_map_on_tensor,
    interchange_iso,
    module_hom_space,
    regular_bimodule,
    scalar_bimodule,
    tensor_over_alg,
    tensor_over_k,
)
from .category import (
    CoringsMorphism,
    ExtMorphism,
    check_corings_morphism,
    check_ext_morphism,
    corings_compose,
    corings_identity,
    corings_tensor_morphisms,
    corings_to_ext,
    counit_corings_morphism,
    ext_compose,
    ext_compose_via_cotensor,
    ext_identity,
    ext_morphisms_equal,
    ext_tensor_morphisms,
    ext_to_trivial,
    ext_to_unit,
    grouplike_corings_morphism,
    trivial_corings_morphism,
    verify_corings_monoidal,
    verify_ext_monoidal,
)
from .constructions import (
    BaseRingExtension,
    RightExtension,
    base_ring_extension,
    grouplike_coalgebra,
    make_right_extension,
    matrix_coalgebra,
    regular_extension,
    sweedler_coring,
    tensor_coring,
    tensor_extension,
    trivial_coring,
    trivial_extension,
    unit_coring,
    unit_extension,
)
from .coring import (
    Bicomodule,
    Comodule,
    Coring,
    check_bicomodule,
    check_comodule,
    check_coring,
    check_left_colinear,
    cotensor,
)
from .linalg import Field, Mat, QuotientSpace, Subspace, kernel, quotient, rref
from .verdict import Verdict
from .workspace import Workspace, load_workspace, parse_workspace

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
