"""Decide conjugacy of homomorphisms from two-generator abelian and dihedral
groups into S_n, with a brute-force oracle to check every verdict."""
from .abelian import (
    AbelianHom,
    CentSignature,
    ConjugacyDecision,
    KDecomposition,
    are_conjugate_abelian,
    are_element_conjugate_abelian,
    are_generator_conjugate,
    cent_conjugate_block,
    cent_signature,
    element_conjugacy_criterion,
    k_decompose,
)
from .centralizer import (
    BlockQuotientImage,
    CapExceededError,
    HClass,
    SigmaBlock,
    SigmaDecomposition,
    centralizer_order,
    cycles_action,
    enumerate_centralizer,
    h_class_of,
    in_centralizer,
    sigma_decompose,
)
from .dihedral import (
    DihedralHom,
    ReflectionSignature,
    are_conjugate_dihedral,
    are_element_conjugate_dihedral,
    canonical_reflection_conjugator,
    h_conjugate_involutions_block,
    reflection_signature,
)
from .perm import (
    Permutation,
    PermutationError,
    compose,
    conjugate_by,
    cycle_type,
    fixed_points,
    format_cycles,
    inverse,
    order_of,
    parse_cycles,
)

__version__ = "0.1.0"
