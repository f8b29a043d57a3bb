"""Exact-arithmetic toolkit for nilpotent orbits in spaces of self-adjoint
maps and for Schubert cells of twisted loop groups."""

from .correspondence import (
    CellImageRow,
    VerifyReport,
    branch_of,
    duality_dims,
    expected_image,
    fiber_contains,
    fiber_zero_profile,
    non_small_witness,
    order2_embed,
    order2_standard,
    verify_table,
    witness,
)
from .exactlinalg import (
    NonNilpotentError,
    QMatrix,
    Rational,
    TwistedCase,
    adjoint,
    block_toeplitz_rank,
    eigenspace_membership,
    exp_nilpotent,
    form_adjoint,
    jordan_type,
    random_k_element,
)
from .grassmannian import (
    CellPatternError,
    LaurentMatrix,
    NotOrthogonal,
    NotSpecialLinear,
    cell_of,
    det1_check,
    iota,
    laurent_det,
    norm_element,
    pi,
    sigma_fixed,
)
from .partitions import (
    OrbitDescriptor,
    PairCase,
    Partition,
    classify_orbits,
    closure_hasse,
    dominates,
    hasse_dot,
    orbit_dim_classical,
    orbit_dim_symmetric,
    partitions_of,
)
from .weights import (
    HType,
    WeightTuple,
    btype,
    ctype,
    dominance_le,
    enumerate_small,
    fundamental_weight,
    highest_short_root,
    is_small,
    positive_roots,
    schubert_dim,
    simple_roots,
)

__all__ = [name for name in dir() if not name.startswith("_")]
