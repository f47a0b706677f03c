"""Exact sums-of-squares decompositions of minimal length in number fields."""

from .fields import (
    NumberField,
    FieldElement,
    field_create,
    elem_arith,
    is_square,
    integral_scale,
    parse_field,
    parse_element,
    format_element,
    format_polynomial,
)
from .places import (
    RealPlace,
    FinitePlace,
    PlaceSet,
    real_places,
    decompose_prime,
    dyadic_places,
    odd_support,
    valuation,
)
from .localsym import (
    DiagonalForm,
    hilbert_symbol,
    hasse_invariant,
    local_square,
    local_isotropic,
    sign_at,
    signs,
)
from .singular import (
    SingularBasis,
    singular_basis,
    extend_basis,
    class_group_small,
    unit_group,
)
from .normeq import (
    QuadraticExtension,
    NormSolution,
    norm_locally_solvable,
    solve_norm,
)
from .f2linear import F2Matrix, solve_f2
from .decompose import (
    INFINITY,
    LengthReport,
    Decomposition,
    DyadicObstructionData,
    PrimeSearchStrategy,
    compute_length,
    decompose,
    decompose_len2,
    decompose_len3_level2,
    decompose_len3_general,
    decompose_len4,
    find_dyadic_pair,
    field_level,
)

__all__ = [
    "NumberField",
    "FieldElement",
    "field_create",
    "elem_arith",
    "is_square",
    "integral_scale",
    "parse_field",
    "parse_element",
    "format_element",
    "format_polynomial",
    "RealPlace",
    "FinitePlace",
    "PlaceSet",
    "real_places",
    "decompose_prime",
    "dyadic_places",
    "odd_support",
    "valuation",
    "DiagonalForm",
    "hilbert_symbol",
    "hasse_invariant",
    "local_square",
    "local_isotropic",
    "sign_at",
    "signs",
    "SingularBasis",
    "singular_basis",
    "extend_basis",
    "class_group_small",
    "unit_group",
    "QuadraticExtension",
    "NormSolution",
    "norm_locally_solvable",
    "solve_norm",
    "F2Matrix",
    "solve_f2",
    "INFINITY",
    "LengthReport",
    "Decomposition",
    "DyadicObstructionData",
    "PrimeSearchStrategy",
    "compute_length",
    "decompose",
    "decompose_len2",
    "decompose_len3_level2",
    "decompose_len3_general",
    "decompose_len4",
    "find_dyadic_pair",
    "field_level",
]
