"""The p-cyclic Kummer cover ``T^p = 1 + lambda^p W(Z) / Z^c`` and its fibers.

Throughout, lambda is lambda_1 = zeta_p - 1 and the fiber at level m is the
specialization ``Z = pi_m = lambda_m``. Valuations are nu_m, so that
``nu_m(lambda^p) = p e_m / (p - 1) = p^m``; this is the bound ``B`` of the
standard-form reduction.
"""

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Optional

from normslab.core.cyclotomic import CycloElement, UnitIndex, lam, tower_level
from normslab.core.errors import (
    InvalidInput,
    IsPthPower,
    LevelMismatch,
    LevelTooSmall,
    PrecisionExhausted,
    ReductionStuck,
    WeierstrassDegreeMismatch,
)
from normslab.core.logging import LogLevel, track_call
from normslab.core.padics import DEFAULT_PRECISION, check_prime, teichmuller_int
from normslab.core.powerseries import (
    DistinguishedPoly,
    PowerSeriesElt,
    R1Ring,
    RationalSection,
    ZpRing,
    specialize,
    weierstrass_degree,
)
from normslab.core.ramification import r_of_level
from normslab.core.utils.parsing import parse_polynomial


@dataclass(frozen=True)
class KummerCoverSpec:
    """Data ``(p, c, W)`` of the cover.

    W is a polynomial over Z_p with constant term 1 whose coefficients are
    Teichmuller representatives.
    """

    p: int
    c: int
    W: PowerSeriesElt

    def __post_init__(self):
        check_prime(self.p)
        if self.c < 1:
            raise InvalidInput(f"c must be positive, got {self.c}")
        if gcd(self.c, self.p) != 1:
            raise InvalidInput(f"c = {self.c} is divisible by p = {self.p}")
        ring = self.W.ring
        if not isinstance(ring, ZpRing) or ring.p != self.p:
            raise InvalidInput(f"W must be a series over Z_{self.p}")
        if not self.W.exact:
            raise InvalidInput("W must be a polynomial")
        if not ring.equal(self.W[0], ring.one()):
            raise InvalidInput("W must have constant term 1")
        for i, b in enumerate(self.W.coeffs):
            if pow(b, self.p, ring.modulus) != b:
                raise InvalidInput(
                    f"coefficient of Z^{i} is not a Teichmuller representative"
                )

    @classmethod
    def from_text(
        cls,
        p: int,
        c: int,
        w: str = "1",
        prec: int = DEFAULT_PRECISION,
        lift_coefficients: bool = False,
    ) -> "KummerCoverSpec":
        """Build from a polynomial such as ``"1 + Z^4"``.

        With ``lift_coefficients`` every coefficient is replaced by the
        Teichmuller representative of its residue.
        """
        check_prime(p)
        terms = parse_polynomial(w)
        if lift_coefficients:
            terms = {i: teichmuller_int(a, p, prec) for i, a in terms.items()}
            terms = {i: a for i, a in terms.items() if a}
        return cls(p, c, PowerSeriesElt.from_terms(ZpRing(p, prec), terms))

    @property
    def prec(self) -> int:
        return self.W.ring.prec

    @property
    def d_eta(self) -> int:
        return (self.c + 1) * (self.p - 1)

    def bound(self, m: int) -> int:
        """B = nu_m(lambda^p) = p^m."""
        return self.p**m


class GenericDifferent(NamedTuple):
    weierstrass_degree: int
    branch_count: int
    d_eta: int


def _lambda_power(p: int, m: int, prec: int) -> CycloElement:
    """lambda_1^p at level m."""
    return (lam(p, 1, prec) ** p).embed_up(m)


def branch_series(spec: KummerCoverSpec, prec: Optional[int] = None) -> PowerSeriesElt:
    """``Z^c + lambda^p W(Z)`` over Z_p[zeta_p]."""
    p, c = spec.p, spec.c
    ring = R1Ring(p, prec or spec.prec)
    lp = lam(p, 1, ring.prec) ** p
    top = max(c, spec.W.degree)
    coeffs = []
    for i in range(top + 1):
        a = lp * int(spec.W[i]) if spec.W[i] else ring.zero()
        if i == c:
            a = ring.add(a, ring.one())
        coeffs.append(a)
    return PowerSeriesElt(ring, coeffs, top, exact=True)


def generic_different(spec: KummerCoverSpec) -> GenericDifferent:
    """Branch points of the generic fiber and the degree of its different.

    The zeros of ``Z^c + lambda^p W`` number its Weierstrass degree c; the
    factor ``Z^{(p-1)c}`` of the integral equation adds the point Z = 0.

    Raises:
        WeierstrassDegreeMismatch: If the Weierstrass degree is not c.
    """
    degree = weierstrass_degree(branch_series(spec))
    if degree != spec.c:
        raise WeierstrassDegreeMismatch(
            f"Z^c + lambda^p W has Weierstrass degree {degree}, expected {spec.c}"
        )
    branch_count = degree + 1
    return GenericDifferent(degree, branch_count, branch_count * (spec.p - 1))


def _check_level(spec: KummerCoverSpec, m: int) -> None:
    if m < 1:
        raise LevelMismatch(f"fibers are taken at levels m >= 1, got {m}")
    if spec.bound(m) <= spec.c:
        raise LevelTooSmall(
            f"nu_{m}(lambda^p) = {spec.bound(m)} does not exceed c = {spec.c}"
        )


def specialize_unit(spec: KummerCoverSpec, m: int) -> CycloElement:
    """``u_m = 1 + lambda^p W(pi_m) / pi_m^c``, with nu_m(u_m - 1) = p^m - c.

    Raises:
        LevelTooSmall: If p^m <= c, so u_m is not a principal unit.
        PrecisionExhausted: If the computed index differs from p^m - c.
    """
    _check_level(spec, m)
    p, c, prec = spec.p, spec.c, spec.prec
    pi = lam(p, m, prec)
    section = RationalSection(0, DistinguishedPoly(spec.W.ring, []), spec.W)
    w_value = specialize(section, pi)
    u = 1 + _lambda_power(p, m, prec) * w_value / pi**c
    index = u.principal_unit_index()
    expected = spec.bound(m) - c
    if not index.exact or index.value != expected:
        raise PrecisionExhausted(
            f"nu_{m}(u_{m} - 1) came out {index.value}, expected {expected}"
        )
    return u


class KummerReduction(NamedTuple):
    """Standard form ``u' = u * v^p`` with nu(u' - 1) prime to p."""

    unit: CycloElement
    index: int
    conductor: int
    steps: int


def kummer_reduce(u: CycloElement) -> KummerReduction:
    """Multiply u by p-th powers until nu(u - 1) is prime to p.

    While ``t = nu(u - 1)`` is a multiple of p below B, u = 1 + r lambda^t + ...
    is multiplied by ``(1 - tau(r) lambda^{t/p})^p``, which clears the leading
    term. The conductor of ``T^p = u`` is then ``B - t + 1``.

    Raises:
        IsPthPower: If nu(u - 1) exceeds B.
        ReductionStuck: If nu(u - 1) reaches B exactly.
        PrecisionExhausted: If u - 1 vanishes at precision below B.
    """
    m, p = u.m, u.p
    if m < 1:
        raise LevelMismatch("Kummer conductors are computed at levels m >= 1")
    bound = p**m
    prec = u.absprec
    pi = lam(p, m, prec)
    steps = 0
    while True:
        index: UnitIndex = u.principal_unit_index()
        t = index.value
        if not index.exact:
            if t > bound:
                raise IsPthPower(f"nu(u - 1) >= {t} exceeds the bound {bound}")
            raise PrecisionExhausted(f"u - 1 vanishes at precision below the bound {bound}")
        if t == 0:
            raise InvalidInput("u is not a principal unit")
        if t > bound:
            raise IsPthPower(f"nu(u - 1) = {t} exceeds the bound {bound}")
        if t == bound:
            raise ReductionStuck(f"nu(u - 1) reached the bound {bound}")
        if t % p:
            return KummerReduction(u, t, bound - t + 1, steps)
        _, r = (u - 1).leading_term()
        tau = CycloElement.from_rational(u.level, teichmuller_int(r, p, prec), prec)
        u = u * (1 - tau * pi ** (t // p)) ** p
        steps += 1


def kummer_conductor(u: CycloElement) -> int:
    """Artin conductor of the extension ``T^p = u`` of L^m."""
    return kummer_reduce(u).conductor


def special_different(spec: KummerCoverSpec, m: int) -> int:
    """d_m: degree of the different of the fiber at level m."""
    return kummer_conductor(specialize_unit(spec, m)) * (spec.p - 1)


def eisenstein_from_rhs(rhs: CycloElement, c: int) -> bool:
    """Whether ``T'^p = rhs`` has a totally ramified degree-p fiber.

    The p-th power content ``pi_m^{pc}`` and the Teichmuller factor of the
    leading residue are removed; what is left must be a principal unit with
    index strictly between 0 and B and prime to p.
    """
    p, m = rhs.p, rhs.m
    if rhs.is_zero() or rhs.valuation != p * c:
        return False
    prec = rhs.absprec
    unit = rhs / lam(p, m, prec) ** (p * c)
    r = unit.residue()
    unit = unit / teichmuller_int(r, p, prec)
    index = unit.principal_unit_index()
    if not index.exact:
        return False
    return 0 < index.value < p**m and index.value % p != 0


def eisenstein_check(spec: KummerCoverSpec, m: int) -> bool:
    """Check the integral equation ``T'^p = pi^{(p-1)c} (pi^c + W(pi) lambda^p)``.

    Substituting ``T' = T pi^c`` in ``T^p = u_m``, the right side is
    ``pi^{pc} u_m``.

    Raises:
        LevelTooSmall: If p^m <= c.
    """
    u = specialize_unit(spec, m)
    rhs = lam(spec.p, m, spec.prec) ** (spec.p * spec.c) * u
    return eisenstein_from_rhs(rhs, spec.c)


class PthPowerCheck(NamedTuple):
    index: UnitIndex
    bound: int
    passed: bool


def _correction(spec: KummerCoverSpec, k: int) -> CycloElement:
    """``1 - lambda / pi_k^c`` at level k."""
    p, prec = spec.p, spec.prec
    return 1 - lam(p, 1, prec).embed_up(k) / lam(p, k, prec) ** spec.c


def _judge(q: CycloElement, bound: int) -> PthPowerCheck:
    index = q.principal_unit_index()
    if index.exact:
        return PthPowerCheck(index, bound, index.value > bound)
    if index.value > bound:
        return PthPowerCheck(index, bound, True)
    raise PrecisionExhausted(
        f"the index is only known to be >= {index.value}, bound is {bound}"
    )


def _require_precision(spec: KummerCoverSpec, level: int, bound: int, margin: int) -> None:
    available = tower_level(spec.p, level).degree * (spec.prec - margin)
    if available <= bound:
        raise PrecisionExhausted(
            f"precision {spec.prec} certifies nu < {available}, need more than {bound}"
        )


def pthpower_check(
    spec: KummerCoverSpec,
    m: int,
    exponent: Optional[int] = None,
    margin: int = 5,
) -> PthPowerCheck:
    """Whether ``u_m u_{m+1}^{-1} (1 - lambda / pi_{m+1}^c)^p`` is a p-th power in L^(m+1).

    A principal unit of L^(m+1) with index above ``D = p^{m+1}`` is a p-th
    power; the check passes iff the index exceeds D. ``exponent`` replaces p
    in the correction factor.

    Raises:
        PrecisionExhausted: If the precision cannot certify an index above D.
    """
    k = m + 1
    bound = spec.bound(k)
    _require_precision(spec, k, bound, margin)
    exponent = spec.p if exponent is None else exponent
    q = (
        specialize_unit(spec, m).embed_up(k)
        / specialize_unit(spec, k)
        * _correction(spec, k) ** exponent
    )
    return _judge(q, bound)


def composite_pthpower_check(
    spec: KummerCoverSpec, m: int, margin: int = 5
) -> PthPowerCheck:
    """The same check across two steps, in L^(m+2) with bound p^{m+2}."""
    k = m + 2
    bound = spec.bound(k)
    _require_precision(spec, k, bound, margin)
    correction = _correction(spec, m + 1).embed_up(k) * _correction(spec, k)
    q = (
        specialize_unit(spec, m).embed_up(k)
        / specialize_unit(spec, k)
        * correction**spec.p
    )
    return _judge(q, bound)


@track_call(level=LogLevel.DEBUG, source="threshold_level")
def threshold_level(spec: KummerCoverSpec, max_level: int = 5) -> int:
    """m_0: least m with ``min(r(m), e_m/(p-1)) > 2c``.

    Raises:
        LevelTooSmall: If no level up to ``max_level`` qualifies.
    """
    p, c = spec.p, spec.c
    for m in range(1, max_level + 1):
        if tower_level(p, m).degree // (p - 1) <= 2 * c:
            continue
        if r_of_level(p, m, spec.prec) > 2 * c:
            return m
    raise LevelTooSmall(f"no level up to {max_level} clears 2c = {2 * c}")
