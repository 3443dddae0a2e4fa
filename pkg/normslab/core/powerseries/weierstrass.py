"""Weierstrass preparation over Z_p and Z_p[zeta_p].

A series ``g`` is prepared as the polynomial it represents: coefficients past
the truncation order are taken to be zero. For exact input this is the true
factorization ``g = varpi^c f U``; for truncated input ``varpi^c f U`` agrees
with ``g`` up to ``Z^M``.
"""

from dataclasses import dataclass
from typing import List, Sequence

from normslab.core.cyclotomic import CycloElement
from normslab.core.errors import InvalidInput, PrecisionExhausted, ReducesToZero
from normslab.core.logging import LogLevel, track_call
from normslab.core.padics import INFINITY
from normslab.core.powerseries.rings import CoefficientRing
from normslab.core.powerseries.series import PowerSeriesElt
from normslab.models.documents import FactorizationDocument


class DistinguishedPoly:
    """Monic ``Z^d + a_{d-1} Z^{d-1} + ... + a_0`` with every a_i in the maximal ideal."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoefficientRing, coeffs: Sequence):
        for i, a in enumerate(coeffs):
            if ring.valuation(a) < 1:
                raise InvalidInput(f"coefficient of Z^{i} is a unit; not distinguished")
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, ring: CoefficientRing, ints: Sequence[int]) -> "DistinguishedPoly":
        return cls(ring, [ring.from_int(n) for n in ints])

    @classmethod
    def from_series(cls, f: PowerSeriesElt) -> "DistinguishedPoly":
        d = f.degree
        if not f.exact or d < 0 or not f.ring.equal(f[d], f.ring.one()):
            raise InvalidInput("a distinguished polynomial must be exact and monic")
        return cls(f.ring, f.coeffs[:d])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def as_series(self) -> PowerSeriesElt:
        return PowerSeriesElt(
            self.ring, list(self.coeffs) + [self.ring.one()], self.degree, exact=True
        )

    def evaluate(self, alpha: CycloElement) -> CycloElement:
        return self.as_series().evaluate(alpha)

    def __eq__(self, other):
        if not isinstance(other, DistinguishedPoly):
            return NotImplemented
        return self.degree == other.degree and self.as_series().agrees_with(
            other.as_series()
        )

    __hash__ = None

    def __repr__(self):
        return f"DistinguishedPoly({self.as_series().render()!r})"


@dataclass(frozen=True)
class WeierstrassFactorization:
    """``g = varpi^c * f * U`` with f distinguished and U a unit series."""

    c: int
    f: DistinguishedPoly
    U: PowerSeriesElt

    @property
    def degree(self) -> int:
        return self.f.degree

    def reconstruct(self, ring: CoefficientRing) -> PowerSeriesElt:
        """varpi^c f U expressed over ``ring`` (the ring of the prepared series)."""
        product = self.f.as_series() * self.U
        return product.scale_uniformizer(self.c, ring)

    def to_document(self) -> FactorizationDocument:
        return FactorizationDocument(
            c=self.c, f=self.f.as_series().to_document(), U=self.U.to_document()
        )

    @classmethod
    def from_document(cls, doc: FactorizationDocument) -> "WeierstrassFactorization":
        f = PowerSeriesElt.from_document(doc.f)
        U = PowerSeriesElt.from_document(doc.U)
        return cls(doc.c, DistinguishedPoly.from_series(f), U)


def weierstrass_degree(g: PowerSeriesElt) -> int:
    """Order of vanishing of g mod the maximal ideal."""
    return g.weierstrass_degree()


def _contraction_rounds(ring: CoefficientRing, low: List) -> int:
    gain = min((ring.valuation(a) for a in low), default=INFINITY)
    if gain == INFINITY:
        return 0
    return -(-ring.precision_units // gain) + 1


@track_call(level=LogLevel.DEBUG, source="weierstrass_prepare")
def weierstrass_prepare(g: PowerSeriesElt) -> WeierstrassFactorization:
    """Factor ``g = varpi^c f U``.

    Splits ``g / varpi^c = P + Z^d H`` at the Weierstrass degree d and iterates
    ``V <- H^-1 (1 - tau_d(P V))`` to the fixed point ``V = U^-1``; then
    ``f = Z^d + (P V mod Z^d)``.

    Raises:
        ReducesToZero: If g vanishes at precision or its reduction does.
        PrecisionExhausted: If the product does not reproduce g.
    """
    c = g.content()
    if c == INFINITY:
        raise ReducesToZero("the series is zero at its precision")
    g1 = g.divide_uniformizer(c) if c else g
    ring = g1.ring
    d = g1.weierstrass_degree()
    M = g1.M

    P = g1.low_part(d)
    rounds = _contraction_rounds(ring, P)
    # V_j depends on V_{j+1..j+d} through a factor in the maximal ideal,
    # so each round needs d more terms above M to settle.
    length = M + d * (rounds + 1) + 1
    H = PowerSeriesElt(ring, list(g1.coeffs[d:]) or [ring.zero()], M - d, exact=True)
    H_inv = H.inverse(length - 1).coeffs

    V = list(H_inv)
    for _ in range(rounds):
        PV = ring.series_mul(P, V, length + d)
        rhs = [ring.neg(a) for a in PV[d : d + length]]
        rhs[0] = ring.add(rhs[0], ring.one())
        V = ring.series_mul(list(H_inv), rhs, length)

    low = ring.series_mul(P, V, d) if d else []
    f = DistinguishedPoly(ring, low)
    U = PowerSeriesElt(ring, V[: M + 1], M).inverse()
    factorization = WeierstrassFactorization(c, f, U)

    if not factorization.reconstruct(g.ring).agrees_with(g):
        raise PrecisionExhausted("Weierstrass iteration lost the input's digits")
    return factorization
