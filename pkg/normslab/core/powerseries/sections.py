"""Sections of R[[Z]] localized at the maximal ideal, and their specializations.

A ``RationalSection`` is kept factored as ``varpi^c f1 U / f2``; the valuation
of its value at ``pi_m`` is then read off from c and the Weierstrass degrees
without evaluating anything.
"""

from typing import Optional, Sequence

from normslab.core.cyclotomic import CycloElement
from normslab.core.errors import (
    DenominatorVanishes,
    InvalidInput,
    LevelTooSmall,
    OutsideDisc,
    PrecisionExhausted,
)
from normslab.core.padics import INFINITY
from normslab.core.powerseries.rings import CoefficientRing
from normslab.core.powerseries.series import PowerSeriesElt
from normslab.core.powerseries.weierstrass import (
    DistinguishedPoly,
    weierstrass_prepare,
)


class RationalSection:
    """``A(Z) = varpi^c * f1(Z) * U(Z) / f2(Z)``."""

    __slots__ = ("c", "f1", "U", "f2")

    def __init__(
        self,
        c: int,
        f1: DistinguishedPoly,
        U: PowerSeriesElt,
        f2: Optional[DistinguishedPoly] = None,
    ):
        if c < 0:
            raise InvalidInput(f"varpi-exponent must be >= 0, got {c}")
        if not U.is_unit():
            raise InvalidInput("U must have a unit constant term")
        if f2 is None:
            f2 = DistinguishedPoly(f1.ring, [])
        self.c = c
        self.f1 = f1
        self.U = U
        self.f2 = f2

    @classmethod
    def from_quotient(
        cls, numerator: PowerSeriesElt, denominator: PowerSeriesElt
    ) -> "RationalSection":
        """Prepare both sides; the denominator must not lie in varpi R[[Z]]."""
        top = weierstrass_prepare(numerator)
        bottom = weierstrass_prepare(denominator)
        if bottom.c:
            raise InvalidInput("denominator is divisible by varpi")
        ring = top.U.ring
        U = top.U * _rebase_series(bottom.U, ring).inverse()
        return cls(top.c, top.f, U, _rebase_poly(bottom.f, ring))

    @classmethod
    def polynomial(cls, ring: CoefficientRing, f1: Sequence[int], c: int = 0):
        """varpi^c f1 for a distinguished f1 given by its lower coefficients."""
        return cls(c, DistinguishedPoly.from_ints(ring, f1), PowerSeriesElt.one(ring))

    @property
    def ring(self) -> CoefficientRing:
        return self.f1.ring

    @property
    def d1(self) -> int:
        return self.f1.degree

    @property
    def d2(self) -> int:
        return self.f2.degree

    def __repr__(self):
        return (
            f"RationalSection(c={self.c}, f1={self.f1!r}, U={self.U!r}, f2={self.f2!r})"
        )


def _rebase_series(s: PowerSeriesElt, ring: CoefficientRing) -> PowerSeriesElt:
    if s.ring == ring:
        return s
    if s.ring.tag != ring.tag:
        raise InvalidInput(f"mixing {s.ring} and {ring}")
    return PowerSeriesElt(ring, [_rebase(a, ring) for a in s.coeffs], s.M, s.exact)


def _rebase_poly(f: DistinguishedPoly, ring: CoefficientRing) -> DistinguishedPoly:
    return DistinguishedPoly(ring, [_rebase(a, ring) for a in f.coeffs])


def _rebase(a, ring: CoefficientRing):
    return ring.from_int(a) if isinstance(a, int) else a


def specialize(A: RationalSection, alpha: CycloElement) -> CycloElement:
    """``A(alpha)`` for a point alpha of the open disc.

    The unit factor is evaluated with its truncation error clamped in; f1 and
    f2 are polynomials and evaluate exactly.

    Raises:
        OutsideDisc: If nu(alpha) <= 0.
        DenominatorVanishes: If f2(alpha) is zero at precision.
    """
    if not alpha.is_exact_zero() and alpha.valuation <= 0:
        raise OutsideDisc(f"nu(alpha) = {alpha.valuation} is not positive")
    ring = A.ring
    m = alpha.m
    denominator = A.f2.evaluate(alpha)
    if denominator.is_zero():
        raise DenominatorVanishes(f"f2 vanishes at the point at level {m}")
    value = A.f1.evaluate(alpha) * A.U.evaluate(alpha)
    if A.c:
        value = value * ring.to_level(ring.uniformizer_power(A.c), m)
    return value / denominator


def truncation_bound(A: RationalSection, alpha: CycloElement):
    """Lower bound on nu_m of the tail dropped by specialize, after division by f2."""
    if A.U.exact:
        return INFINITY
    return (A.U.M + 1) * alpha.valuation - A.f2.evaluate(alpha).valuation


def specialization_valuation(A: RationalSection, m: int) -> int:
    """``nu_m(A(pi_m)) = c nu_m(varpi) + d1 - d2``, without evaluating A.

    Raises:
        LevelTooSmall: If nu_m(varpi) <= d1 + d2.
    """
    unit = A.ring.uniformizer_valuation_at(m)
    if unit <= A.d1 + A.d2:
        raise LevelTooSmall(
            f"nu_{m}(varpi) = {unit} does not exceed d1 + d2 = {A.d1 + A.d2}"
        )
    return A.c * unit + A.d1 - A.d2


def is_eisenstein(q: Sequence[CycloElement]) -> bool:
    """Monic q with non-leading coefficients in m and constant term of valuation 1.

    Raises:
        InvalidInput: If q is not monic.
        PrecisionExhausted: If a coefficient's valuation cannot be resolved.
    """
    if len(q) < 2:
        return False
    lead = q[-1]
    if not (lead - 1).is_zero():
        raise InvalidInput("is_eisenstein needs a monic polynomial")
    constant = q[0]
    if constant.is_zero():
        if constant.is_exact_zero():
            return False
        raise PrecisionExhausted("constant term vanishes at precision")
    if constant.valuation != 1:
        return False
    return all(a.valuation_lower_bound() >= 1 for a in q[1:-1])
