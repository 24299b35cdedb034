"""Exact-arithmetic affine root systems, alcove geometry, and
spherical-pair verification for momentum polytopes.

All coordinates are rational and all decisions are exact; see the README
for the coordinate conventions and the command line entry points.
"""

from .classify import (
    AmbiguityReport,
    IntegralRootSystem,
    LocalRootAssignment,
    ambiguous_reflections,
    assemble_global,
    phi_empty_classify,
    primitive_functional,
    root_systems_for,
    validate_simple_system,
)
from .functionals import AffineFunctional, WeylElement, reflect, reflect_functional
from .lattices import (
    AbelianGroupPresentation,
    InnerProduct,
    Lattice,
    NotSublattice,
    dual_lattice,
    orthogonal_project,
    quotient,
)
from .models import LocalModelEntry, shipped_catalog
from .monoids import WeightMonoid, hilbert_basis, monoid_equal
from .pairs import (
    IntegralPair,
    PairInvalid,
    VerificationReport,
    check_pair,
    check_vertex,
    weight_monoid_at,
)
from .polytopes import Cone, Polytope, affine_span, cone_equal, hull, meets_every_wall, tangent_cone
from .registry import builtin_examples
from .roots import (
    AffineRootSystem,
    CartanType,
    FiniteSubsystem,
    TwistSpec,
    build_affine_twisted,
    build_affine_untwisted,
    build_factor,
    build_finite,
    centralizer_root_datum,
    fold_cyclic,
    fundamental_weights,
    is_weight_lattice,
    local_subsystem,
    product_system,
    standard_twist,
)
from .stalks import (
    NotAdjoint,
    adjoint_decompose,
    component_group_adjoint,
    component_group_general,
    d_I,
    h0_component_data,
    kernel_stalk,
    restriction_compatible,
    stalk_sequence_check,
)

__version__ = "0.1.0"
