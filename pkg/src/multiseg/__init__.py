"""Multisegment calculus: posets, truncation descent, symmetrization and
induced-product multiplicities via Kazhdan-Lusztig polynomials."""

__version__ = "0.1.0"

from .core import (
    Multisegment,
    Segment,
    WeightFunction,
    elementary_operation,
    is_regular,
    is_symmetric,
    linked,
    precedes,
    weight,
)
from .errors import DomainError, InvariantError, ResourceLimitError
from .multiplicity import (
    RelationType,
    RelationTypeMap,
    mult,
    mult_matrix,
    relation_type,
    same_relation_type,
    standard_base,
    xi_transport,
)
from .poset import (
    MultisegmentPoset,
    RankTable,
    generate_poset,
    hasse_dot,
    leq_rank,
    minimal_element,
    rank_table,
)
from .ring import (
    RingElement,
    check_eq2,
    derivative_begin,
    derivative_composite,
    derivative_end,
    derivative_l,
    l_element,
    pi_element,
    product,
    to_l_basis,
    to_pi_basis,
    unit,
)
from .symmetrization import (
    SymmetrizationData,
    lift,
    ordinarize,
    symmetrize,
    symmetrize_ordinary,
)
from .truncation import (
    BEGIN,
    END,
    DescentPath,
    descent_set,
    descent_set_path,
    hypothesis_begin,
    hypothesis_end,
    minimal_lift,
    psi_k,
    psi_k_inverse,
    psi_path,
    psi_path_inverse,
    truncate_begin,
    truncate_end,
    truncate_path,
)
from .weyl import (
    KLPolynomial,
    Permutation,
    all_perms,
    bruhat_leq,
    kl_polynomial,
    perm_from_string,
    perm_identity,
    perm_inverse,
    perm_length,
    phi,
    phi_inverse,
)

__all__ = [name for name in dir() if not name.startswith("_")]
