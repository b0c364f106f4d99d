"""Groebner bases for left ideals and submodules over solvable polynomial algebras."""

from .algebra import (
    Algebra,
    AlgebraDef,
    IncompleteRelationTable,
    LeadingMonomialNotSmaller,
    OverlapInconsistent,
    ValidationError,
    ZeroLambda,
    extend_with_t,
    mul,
    mul_mono,
    subalgebra,
    tensor,
    validate_algebra,
)
from .elimination import (
    ClosureFailure,
    ComponentSubset,
    DimensionResult,
    GeneratorSubset,
    OrderingNotEliminatingForS,
    TSlice,
    ZeroIdeal,
    eliminate_ideal,
    eliminate_module,
    gk_dim_search,
    intersect_ideals,
    intersect_submodules,
    subalgebra_closure_check,
    truncate_to_VS,
    weakly_independent,
)
from .fields import GF, QQ, parse_field
from .groebner import (
    GroebnerBasis,
    Membership,
    RankMismatch,
    buchberger,
    is_groebner,
    member,
    normal_form,
    reduce_basis,
    spair,
)
from .homs import (
    FreeHom,
    HomNotWellDefined,
    ImageResult,
    Presentation,
    QuotientHom,
    SurjectivityResult,
    graph_kernel_basis,
    hom_exists,
    image_membership,
    image_membership_quotient,
    is_surjective_free,
    is_surjective_quotient,
    kernel_free,
    kernel_quotient,
)
from .orderings import (
    POT,
    TOP,
    DegLex,
    DegRevLex,
    ElimBlock,
    Lex,
    Schreyer,
    Weighted,
    compare,
    compare_module,
    elim_order,
    module_elim_order,
)
from .polys import Poly, Vec

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraDef",
    "ClosureFailure",
    "ComponentSubset",
    "DegLex",
    "DegRevLex",
    "DimensionResult",
    "ElimBlock",
    "FreeHom",
    "GF",
    "GeneratorSubset",
    "GroebnerBasis",
    "HomNotWellDefined",
    "ImageResult",
    "IncompleteRelationTable",
    "LeadingMonomialNotSmaller",
    "Lex",
    "Membership",
    "OrderingNotEliminatingForS",
    "OverlapInconsistent",
    "POT",
    "Poly",
    "Presentation",
    "QQ",
    "QuotientHom",
    "RankMismatch",
    "Schreyer",
    "SurjectivityResult",
    "TOP",
    "TSlice",
    "ValidationError",
    "Vec",
    "Weighted",
    "ZeroIdeal",
    "ZeroLambda",
    "buchberger",
    "compare",
    "compare_module",
    "elim_order",
    "eliminate_ideal",
    "eliminate_module",
    "extend_with_t",
    "gk_dim_search",
    "graph_kernel_basis",
    "hom_exists",
    "image_membership",
    "image_membership_quotient",
    "intersect_ideals",
    "intersect_submodules",
    "is_groebner",
    "is_surjective_free",
    "is_surjective_quotient",
    "kernel_free",
    "kernel_quotient",
    "member",
    "module_elim_order",
    "mul",
    "mul_mono",
    "normal_form",
    "parse_field",
    "reduce_basis",
    "spair",
    "subalgebra",
    "subalgebra_closure_check",
    "tensor",
    "truncate_to_VS",
    "validate_algebra",
    "weakly_independent",
]
