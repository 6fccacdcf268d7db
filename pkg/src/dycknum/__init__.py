"""Exact combinatorics of Dyck numbers (OEIS A036991)."""

from .bijection import (
    BChain,
    TermClass,
    bij,
    chain,
    classify,
    forest_partition,
    inv_bij,
    root_of,
)
from .core import (
    Check,
    NotDyckError,
    NotSymmetricError,
    binary_weight,
    from_brackets,
    is_symmetric,
    pad,
    to_brackets,
    unpad,
    validate,
)
from .enumeration import (
    catalan,
    gf_coefficients,
    level_count,
    level_max,
    level_min,
    level_stats,
    level_terms,
    mersenne_tail,
    suffix_count,
    suffixes,
)
from .ternary import children, forest_check, is_ternary_root, parent

__version__ = "0.1.0"
