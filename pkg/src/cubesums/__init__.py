"""Sumsets of subsets of Z_2^n: compressions, the Hopf-Stiefel function,
partition minimization, isoperimetric bounds, exact extremal formulas, and
brute-force verification oracles."""

__version__ = "1.0.0"

from .bounds import (
    AbBoundResult,
    F_of_K,
    Ktilde,
    ab_lower_bound,
    ab_surface,
    construct,
    f_curve,
    ktilde_curve,
    repeated_threshold,
)
from .compression import (
    StructureError,
    StructureReport,
    compress,
    e_compress,
    heavy_witness,
    is_basis_preserving_fixpoint,
    is_compressed,
    pair_compress,
    push_down,
    shift,
    structure,
)
from .exhaustive import (
    SUITE_NAMES,
    min_doubling,
    min_sumset,
    verify_suite,
)
from .gf2core import (
    AffineFlat,
    AffineMap,
    DomainError,
    Z2Set,
    affine_span,
    hamming_ball_product,
    height,
    initial_segment,
    is_affinely_generating,
    normalize_to_basis,
    read_z2set,
    standard_affine_basis,
    unit_cell,
    write_z2set,
)
from .hopf_stiefel import hs, hs_oracle
from .isoperimetry import (
    DownsetFamily,
    FamilyReport,
    avg_shadow_bound,
    classify_by_top,
    family_check,
    harper_bound,
    harper_bound_exact,
    is_downset,
    lower_shadow,
    upper_shadow,
)
from .partitions import (
    Partition,
    PartitionFlags,
    QuasiFairMeta,
    classify,
    min_pair_cost,
    pair_cost,
    quasi_fair,
)
from .sumsets import SumStats, constants, sum_auto, sum_naive, sum_transform

__all__ = [
    "AbBoundResult",
    "AffineFlat",
    "AffineMap",
    "DomainError",
    "DownsetFamily",
    "FamilyReport",
    "F_of_K",
    "Ktilde",
    "Partition",
    "PartitionFlags",
    "QuasiFairMeta",
    "StructureError",
    "StructureReport",
    "SumStats",
    "SUITE_NAMES",
    "Z2Set",
    "ab_lower_bound",
    "ab_surface",
    "affine_span",
    "avg_shadow_bound",
    "classify",
    "classify_by_top",
    "compress",
    "constants",
    "construct",
    "e_compress",
    "f_curve",
    "family_check",
    "hamming_ball_product",
    "harper_bound",
    "harper_bound_exact",
    "heavy_witness",
    "height",
    "hs",
    "hs_oracle",
    "initial_segment",
    "is_affinely_generating",
    "is_basis_preserving_fixpoint",
    "is_compressed",
    "is_downset",
    "ktilde_curve",
    "lower_shadow",
    "min_doubling",
    "min_pair_cost",
    "min_sumset",
    "normalize_to_basis",
    "pair_compress",
    "pair_cost",
    "push_down",
    "quasi_fair",
    "read_z2set",
    "repeated_threshold",
    "shift",
    "standard_affine_basis",
    "structure",
    "sum_auto",
    "sum_naive",
    "sum_transform",
    "unit_cell",
    "upper_shadow",
    "verify_suite",
    "write_z2set",
]
