"""Essential and inessential elements of standard bases of homogeneous ideals."""

from .poly import (
    DEGREVLEX,
    LEX,
    MonomialOrder,
    ParseError,
    Polynomial,
    Ring,
    dehomogenize,
    dehomogenize_wrt,
    homogenize,
    linear_change,
    parse_form,
)
from .groebner import (
    HilbertData,
    Ideal,
    UnsupportedInput,
    colon,
    hilbert_data,
    ideal_equal,
    ideal_member,
    intersect,
    is_regular_for_quotient,
    normal_form,
    reduced_groebner,
    saturate,
    saturate_irrelevant,
)
from .graded import StandardBasis, extract_standard_basis, first_betti, graded_piece, is_standard_basis
from .essentiality import (
    BudgetExhausted,
    CrossCheckError,
    SeededRandom,
    build_e_basis,
    build_e_maximal,
    build_e_minimal,
    classify,
    classify_all,
    classify_crosscheck,
    dehomogenized_basis_check,
    essentiality_witness,
    greedy_maximal_inessential_set,
    is_inessential_set,
    make_essential,
    maximum_inessential_subsets,
    nature_invariance_check,
    strongly_inessential,
)
from .hilbert_burch import (
    HilbertMatrix,
    column_criterion,
    generators_from_matrix,
    inessential_set_column_test,
    si_column_test,
    verify_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "DEGREVLEX",
    "LEX",
    "MonomialOrder",
    "ParseError",
    "Polynomial",
    "Ring",
    "dehomogenize",
    "dehomogenize_wrt",
    "homogenize",
    "linear_change",
    "parse_form",
    "HilbertData",
    "Ideal",
    "UnsupportedInput",
    "colon",
    "hilbert_data",
    "ideal_equal",
    "ideal_member",
    "intersect",
    "is_regular_for_quotient",
    "normal_form",
    "reduced_groebner",
    "saturate",
    "saturate_irrelevant",
    "StandardBasis",
    "extract_standard_basis",
    "first_betti",
    "graded_piece",
    "is_standard_basis",
    "BudgetExhausted",
    "CrossCheckError",
    "SeededRandom",
    "build_e_basis",
    "build_e_maximal",
    "build_e_minimal",
    "classify",
    "classify_all",
    "classify_crosscheck",
    "dehomogenized_basis_check",
    "essentiality_witness",
    "greedy_maximal_inessential_set",
    "is_inessential_set",
    "make_essential",
    "maximum_inessential_subsets",
    "nature_invariance_check",
    "strongly_inessential",
    "HilbertMatrix",
    "column_criterion",
    "generators_from_matrix",
    "inessential_set_column_test",
    "si_column_test",
    "verify_matrix",
]
