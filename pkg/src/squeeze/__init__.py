"""Squeezed spheres, stable operators and generic initial ideals of monomial ideals."""

from .monomial import Monomial, degrevlex_cmp, dominates, lex_cmp, max_index, parse_monomial
from .ideal import (
    BettiTable,
    MonomialIdeal,
    NotStronglyStableError,
    betti_eliahou_kervaire,
    betti_linear_quotients,
    betti_squarefree_stable,
    colon_saturate_by_last,
    degree_part_ideal,
    hilbert_function_from_betti,
    hilbert_function_quotient,
    is_squarefree_strongly_stable,
    is_strongly_stable,
)
from .operators import (
    ShiftSequence,
    alpha_a,
    alpha_image_ordered,
    apply_operator_to_ideal,
    linear_quotient_sets,
    polarize,
    polarize_ideal,
    quotient_set,
    sigma_a,
)
from .simplicial import (
    FHGVectors,
    SimplicialComplex,
    SizeGuardError,
    betti_hochster,
    boundary_of_pure,
    complex_of_ideal,
    cone,
    fhg_vectors,
    from_facets,
    is_pure,
    is_shifted,
    stanley_reisner_ideal,
)
from .squeezed import (
    ShiftedOrderIdeal,
    ShiftedOrderIdealError,
    SqueezedPair,
    build_squeezed,
    chara5_condition_check,
    count_shifted_order_ideals,
    enumerate_shifted_order_ideals,
    exterior_shifted_ball,
    facet_F,
    ideal_I_of_U,
    lex_order_ideal,
    squeeze_counts_relation_check,
    squeezed_sphere_betti,
    validate_shifted_order_ideal,
)
from .gin import (
    GenericMatrix,
    GinError,
    GinResult,
    L_set,
    U_set,
    exterior_gin,
    generic_section,
    gin_truncated,
    lefschetz_checks,
    squeeze,
)

__version__ = "0.1.0"
