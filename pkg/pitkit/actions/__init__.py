"""显式作用构造"""

from .lifting import (
    AutLiftSpec,
    NormalizerAssembly,
    assemble_normalizer,
    intermediate_subgroups,
    lift_automorphism,
    normalizer_over_plinth,
    overgroup_classes,
    plinth_overgroups,
)
from .projective import projective_action, scaled_projective_action
from .ree import Line7Action, ree3_line7_action, ree_action
from .scaled import ScaledConstruction, ScaledDomain, ScaledPoint
from .symplectic import (
    QuadraticFormPoint,
    SymplecticAction,
    dickson_class,
    kernel_of_cyclic_character,
    quadratic_form_action,
    symplectic_action,
)
from .unitary import isotropic_action, isotropic_vectors, scaled_isotropic_action

__all__ = [
    "AutLiftSpec", "Line7Action", "NormalizerAssembly", "QuadraticFormPoint",
    "ScaledConstruction", "ScaledDomain", "ScaledPoint", "SymplecticAction",
    "assemble_normalizer", "dickson_class", "intermediate_subgroups", "isotropic_action",
    "isotropic_vectors", "kernel_of_cyclic_character", "lift_automorphism",
    "normalizer_over_plinth", "overgroup_classes", "plinth_overgroups", "projective_action",
    "quadratic_form_action", "ree3_line7_action", "ree_action", "scaled_isotropic_action",
    "scaled_projective_action", "symplectic_action",
]
