from normslab.core.ramification.piecewise import PiecewiseLinearFn
from normslab.core.ramification.profile import (
    RamificationProfile,
    apf_first_jump,
    different_from_minpoly,
    filtration,
    herbrand_grid,
    i_value,
    profile_from_i_table,
    quotient_compatible,
    quotient_upper_group,
    r_of_level,
)

__all__ = [
    "PiecewiseLinearFn",
    "RamificationProfile",
    "apf_first_jump",
    "different_from_minpoly",
    "filtration",
    "herbrand_grid",
    "i_value",
    "profile_from_i_table",
    "quotient_compatible",
    "quotient_upper_group",
    "r_of_level",
]
