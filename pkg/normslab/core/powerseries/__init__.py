from normslab.core.powerseries.rings import CoefficientRing, R1Ring, ZpRing, make_ring
from normslab.core.powerseries.series import PowerSeriesElt
from normslab.core.powerseries.weierstrass import (
    DistinguishedPoly,
    WeierstrassFactorization,
    weierstrass_degree,
    weierstrass_prepare,
)
from normslab.core.powerseries.sections import (
    RationalSection,
    is_eisenstein,
    specialization_valuation,
    specialize,
    truncation_bound,
)

__all__ = [
    "CoefficientRing",
    "R1Ring",
    "ZpRing",
    "make_ring",
    "PowerSeriesElt",
    "DistinguishedPoly",
    "WeierstrassFactorization",
    "weierstrass_degree",
    "weierstrass_prepare",
    "RationalSection",
    "is_eisenstein",
    "specialization_valuation",
    "specialize",
    "truncation_bound",
]
