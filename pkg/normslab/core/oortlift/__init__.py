from normslab.core.oortlift.crosscheck import KummerExtension, cross_check
from normslab.core.oortlift.kummer import (
    GenericDifferent,
    KummerCoverSpec,
    KummerReduction,
    PthPowerCheck,
    branch_series,
    composite_pthpower_check,
    eisenstein_check,
    eisenstein_from_rhs,
    generic_different,
    kummer_conductor,
    kummer_reduce,
    pthpower_check,
    special_different,
    specialize_unit,
    threshold_level,
)
from normslab.core.oortlift.verifier import verify

__all__ = [
    "GenericDifferent",
    "KummerCoverSpec",
    "KummerExtension",
    "KummerReduction",
    "PthPowerCheck",
    "branch_series",
    "composite_pthpower_check",
    "cross_check",
    "eisenstein_check",
    "eisenstein_from_rhs",
    "generic_different",
    "kummer_conductor",
    "kummer_reduce",
    "pthpower_check",
    "special_different",
    "specialize_unit",
    "threshold_level",
    "verify",
]
