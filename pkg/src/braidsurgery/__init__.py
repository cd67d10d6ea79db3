"""Braid-positive surgery descriptions of 3-manifolds, in exact arithmetic."""

from .braid import (
    BraidWord,
    Permutation,
    concat,
    exponent_sum,
    free_reduce,
    full_twist_word,
    inverse,
    is_positive_word,
    negative_letter_count,
    new_braid_word,
    parse_word,
    underlying_permutation,
)
from .closure import ClosureInfo, axis_linking, components, linking_matrix
from .garside import (
    NormalForm,
    SimpleFactor,
    braids_equal,
    delta_over_sigma,
    half_twist_word,
    left_normal_form,
    minimal_twist_power,
    positify,
    positive_representative,
    simple_word,
)
from .pipeline import (
    BraidSurgeryDiagram,
    TransformReport,
    braid_positive_surgery,
    compute_twist_number,
    diagram_to_presentation,
    verify_report,
)
from .surgery import (
    INFINITY,
    HomologyInvariants,
    RationalCoeff,
    SurgeryPresentation,
    h1_invariants,
    h1_matrix,
    normalize_coeff,
    parse_coeff,
    remove_infinity_component,
    rolfsen_twist,
    smith_normal_form,
)

__version__ = "0.1.0"
