"""置换群核心"""

from .action import LabeledAction
from .blocks import (
    ActionQuotient,
    BlockSystem,
    block_system_from_orbits,
    minimal_block,
    minimal_block_systems,
    quotient_on_blocks,
)
from .chain import StabilizerChain
from .cosets import (
    CosetTable,
    centralizer_in,
    centralizer_in_symmetric,
    centralizer_of_transitive,
    coset_action,
    element_of_order,
    normalizer_small,
    normalizer_witness,
)
from .group import (
    GeneratedGroup,
    derived_subgroup,
    intersection_with,
    is_normal_in,
    kernel_of_action,
    normal_closure,
    orbits_of,
    perfect_residual,
)
from .isomorphism import PermIsomorphism, fingerprint, pairs_equivalent, perm_isomorphic
from .normal import (
    centralizer_of_normal,
    conjugacy_classes,
    is_simple,
    minimal_normal_subgroups,
    normal_subgroups_up_to_index,
    prime_factors,
)
from .permutation import (
    Permutation,
    format_permutations,
    parse_permutation,
    parse_permutation_file,
    read_permutation_file,
)

__all__ = [
    "ActionQuotient", "BlockSystem", "CosetTable", "GeneratedGroup", "LabeledAction",
    "PermIsomorphism", "Permutation", "StabilizerChain",
    "block_system_from_orbits", "centralizer_in", "centralizer_in_symmetric",
    "centralizer_of_normal", "centralizer_of_transitive", "conjugacy_classes", "coset_action",
    "derived_subgroup",
    "element_of_order", "fingerprint", "format_permutations", "intersection_with",
    "is_normal_in", "is_simple", "kernel_of_action", "minimal_block", "minimal_block_systems",
    "minimal_normal_subgroups", "normal_closure", "normal_subgroups_up_to_index",
    "normalizer_small", "normalizer_witness", "orbits_of", "pairs_equivalent",
    "parse_permutation", "parse_permutation_file", "perfect_residual", "perm_isomorphic",
    "prime_factors", "quotient_on_blocks", "read_permutation_file",
]
