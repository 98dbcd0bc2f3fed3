"""Exact computations with finite-dimensional Com-PreLie algebras over Q."""
from .algebra import (
    ComPreLieAlgebra,
    commutator,
    eval_product,
    is_automorphism,
    validate_algebra,
)
from .cohomology import (
    Cochain2,
    CocycleSpace,
    GeneralCochain,
    are_cohomologous,
    cohomology_space,
    d1,
    d2_defect,
    general_coboundary,
    is_1cocycle,
    is_2cocycle,
    shuffle_check,
)
from .extensions import (
    AbelianExtension,
    build_extension,
    extensions_isomorphic,
    extract_cocycle,
    induced_rep,
    validate_extension,
)
from .representations import Representation, adjoint, semidirect, validate_representation
from .wells import (
    AutPair,
    LiftedAutomorphism,
    WellsClass,
    act_on_cocycle,
    exactness_report,
    gamma_from_z1,
    induce,
    is_compatible_pair,
    tau,
    wells_class,
    z1_from_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianExtension",
    "AutPair",
    "Cochain2",
    "CocycleSpace",
    "ComPreLieAlgebra",
    "GeneralCochain",
    "LiftedAutomorphism",
    "Representation",
    "WellsClass",
    "act_on_cocycle",
    "adjoint",
    "are_cohomologous",
    "build_extension",
    "cohomology_space",
    "commutator",
    "d1",
    "d2_defect",
    "eval_product",
    "exactness_report",
    "extensions_isomorphic",
    "extract_cocycle",
    "gamma_from_z1",
    "general_coboundary",
    "induce",
    "induced_rep",
    "is_1cocycle",
    "is_2cocycle",
    "is_automorphism",
    "is_compatible_pair",
    "semidirect",
    "shuffle_check",
    "tau",
    "validate_algebra",
    "validate_extension",
    "validate_representation",
    "wells_class",
    "z1_from_gamma",
]
