"""Exact algebra of cubic matrices under semigroup-parameterized multiplications.

The package enumerates associative binary operations on a finite index set,
classifies them up to relabeling, and builds the m^3-dimensional algebras of
cubic matrices their multiplications define, entirely in exact rational
arithmetic.  See the demos/ directory for worked tours of each capability.
"""

from .cubic import CubicMatrix, SquareMatrix, accompanying_matrix, mul, plenary_power
from .enumeration import (
    CensusResult,
    canonical_representative,
    collect_operations,
    count_operations,
    enumerate_operations,
    orbit_census,
)
from .errors import CapacityError, CubalError, FormatError, NotAssociativeError
from .operations import (
    Operation,
    Permutation,
    PowerSequence,
    act,
    all_permutations,
    are_equivalent,
    check_associative,
    classify_power_sequence,
    classify_symmetry,
    closure,
    enumerate_invariant_subsets,
    image,
    invariance_violation,
    is_invariant,
    is_symmetric,
    left_symmetric,
    orbit,
    power_sequence,
    right_symmetric,
)
from .structure import (
    AccompanyingElement,
    LinearForm,
    SpannedSubspace,
    accompanying_image,
    character_search,
    count_subalgebras_from_invariants,
    image_ideal_span,
    in_kernel_ideal,
    is_character,
    is_ideal,
    is_left_ideal,
    is_right_ideal,
    is_subalgebra,
    left_zero_divisor_witness,
    permute_indices,
    right_zero_divisor_witness,
    subalgebra_span,
    verify_isomorphism,
)
from .verify import verify_census, verify_operation

__version__ = "0.1.0"

__all__ = [
    "AccompanyingElement",
    "CapacityError",
    "CensusResult",
    "CubalError",
    "CubicMatrix",
    "FormatError",
    "LinearForm",
    "NotAssociativeError",
    "Operation",
    "Permutation",
    "PowerSequence",
    "SpannedSubspace",
    "SquareMatrix",
    "accompanying_image",
    "accompanying_matrix",
    "act",
    "all_permutations",
    "are_equivalent",
    "canonical_representative",
    "character_search",
    "check_associative",
    "classify_power_sequence",
    "classify_symmetry",
    "closure",
    "collect_operations",
    "count_operations",
    "count_subalgebras_from_invariants",
    "enumerate_invariant_subsets",
    "enumerate_operations",
    "image",
    "image_ideal_span",
    "in_kernel_ideal",
    "invariance_violation",
    "is_character",
    "is_ideal",
    "is_invariant",
    "is_left_ideal",
    "is_right_ideal",
    "is_subalgebra",
    "is_symmetric",
    "left_symmetric",
    "left_zero_divisor_witness",
    "mul",
    "orbit",
    "orbit_census",
    "permute_indices",
    "plenary_power",
    "power_sequence",
    "right_symmetric",
    "right_zero_divisor_witness",
    "subalgebra_span",
    "verify_census",
    "verify_isomorphism",
    "verify_operation",
]
