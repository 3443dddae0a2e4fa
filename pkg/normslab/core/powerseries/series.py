"""Truncated power series in one variable Z over a ``CoefficientRing``."""

from typing import Dict, List, Optional, Sequence, Tuple

from normslab.core.cyclotomic import CycloElement
from normslab.core.errors import (
    DivisionByApparentZero,
    InvalidInput,
    OutsideDisc,
    ReducesToZero,
)
from normslab.core.padics import INFINITY, DEFAULT_PRECISION
from normslab.core.powerseries.rings import CoefficientRing, ZpRing, make_ring
from normslab.core.utils.parsing import format_polynomial, parse_polynomial
from normslab.models.documents import SeriesDocument


class PowerSeriesElt:
    """``a_0 + a_1 Z + ... + a_M Z^M + O(Z^(M+1))``.

    With ``exact`` set the series is a polynomial: coefficients past ``M`` are
    zero rather than unknown.
    """

    __slots__ = ("ring", "coeffs", "M", "exact")

    def __init__(
        self,
        ring: CoefficientRing,
        coeffs: Sequence,
        M: Optional[int] = None,
        exact: bool = False,
    ):
        coeffs = list(coeffs)
        if M is None:
            M = max(len(coeffs) - 1, 0)
        if M < 0:
            raise InvalidInput(f"truncation order must be >= 0, got {M}")
        if exact and any(not ring.is_zero(a) for a in coeffs[M + 1 :]):
            raise InvalidInput("exact series has terms beyond its degree bound")
        coeffs = coeffs[: M + 1] + [ring.zero() for _ in range(M + 1 - len(coeffs))]
        for a in coeffs:
            v = ring.valuation(a)
            if v != INFINITY and v < 0:
                raise InvalidInput("power series coefficients must be integral")
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self.M = M
        self.exact = exact

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_ints(
        cls,
        ring: CoefficientRing,
        ints: Sequence[int],
        M: Optional[int] = None,
        exact: bool = False,
    ) -> "PowerSeriesElt":
        return cls(ring, [ring.from_int(n) for n in ints], M, exact)

    @classmethod
    def from_terms(
        cls,
        ring: CoefficientRing,
        terms: Dict[int, int],
        M: Optional[int] = None,
        exact: bool = True,
    ) -> "PowerSeriesElt":
        degree = max(terms, default=0)
        if M is None:
            M = degree
        ints = [terms.get(i, 0) for i in range(max(M, degree) + 1)]
        if exact and degree > M:
            M = degree
        return cls.from_ints(ring, ints, M, exact)

    @classmethod
    def parse(
        cls, text: str, ring: CoefficientRing, M: Optional[int] = None
    ) -> "PowerSeriesElt":
        """A polynomial such as ``"1 + Z^4"``, as an exact series."""
        return cls.from_terms(ring, parse_polynomial(text), M, exact=True)

    @classmethod
    def one(cls, ring: CoefficientRing, M: int = 0) -> "PowerSeriesElt":
        return cls.from_ints(ring, [1], M, exact=True)

    @classmethod
    def monomial(cls, ring: CoefficientRing, k: int, M: Optional[int] = None):
        return cls.from_terms(ring, {k: 1}, M if M is not None else k, exact=True)

    # -- accessors --------------------------------------------------------

    def __getitem__(self, i: int):
        if i <= self.M:
            return self.coeffs[i]
        if self.exact:
            return self.ring.zero()
        raise IndexError(f"coefficient {i} is beyond the truncation order {self.M}")

    def __len__(self):
        return self.M + 1

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero series."""
        for i in range(self.M, -1, -1):
            if not self.ring.is_zero(self.coeffs[i]):
                return i
        return -1

    def residues(self) -> List[int]:
        return [self.ring.residue(a) for a in self.coeffs]

    def content(self):
        """Least varpi-valuation of a coefficient; +inf if all vanish."""
        return min(self.ring.valuation(a) for a in self.coeffs)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.coeffs[0])

    def weierstrass_degree(self) -> int:
        """Index of the first unit coefficient.

        Raises:
            ReducesToZero: If every coefficient up to M lies in the maximal ideal.
        """
        for i, a in enumerate(self.coeffs):
            if self.ring.is_unit(a):
                return i
        raise ReducesToZero(
            f"reduction mod the maximal ideal vanishes up to Z^{self.M}"
        )

    def truncate(self, M: int) -> "PowerSeriesElt":
        exact = self.exact and self.degree <= M
        return PowerSeriesElt(self.ring, self.coeffs[: M + 1], M, exact)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "PowerSeriesElt") -> None:
        if other.ring != self.ring:
            raise InvalidInput(f"mixing series over {self.ring} and {other.ring}")

    def _sum_order(self, other: "PowerSeriesElt") -> Tuple[int, bool]:
        if self.exact and other.exact:
            return max(self.M, other.M), True
        if self.exact:
            return other.M, False
        if other.exact:
            return self.M, False
        return min(self.M, other.M), False

    def __add__(self, other):
        if not isinstance(other, PowerSeriesElt):
            return NotImplemented
        self._check(other)
        M, exact = self._sum_order(other)
        ring = self.ring
        coeffs = [ring.add(self._at(i), other._at(i)) for i in range(M + 1)]
        return PowerSeriesElt(ring, coeffs, M, exact)

    def _at(self, i: int):
        return self.coeffs[i] if i <= self.M else self.ring.zero()

    def __neg__(self):
        return PowerSeriesElt(
            self.ring, [self.ring.neg(a) for a in self.coeffs], self.M, self.exact
        )

    def __sub__(self, other):
        if not isinstance(other, PowerSeriesElt):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        ring = self.ring
        if isinstance(other, PowerSeriesElt):
            self._check(other)
            if self.exact and other.exact:
                M = max(self.degree, 0) + max(other.degree, 0)
                exact = True
            else:
                M, exact = self._sum_order(other)
            coeffs = ring.series_mul(list(self.coeffs), list(other.coeffs), M + 1)
            return PowerSeriesElt(ring, coeffs, M, exact)
        if isinstance(other, int):
            other = ring.from_int(other)
        return PowerSeriesElt(
            ring, [ring.mul(a, other) for a in self.coeffs], self.M, self.exact
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = PowerSeriesElt.one(self.ring, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self, M: Optional[int] = None) -> "PowerSeriesElt":
        """Inverse of a unit series, truncated at ``M`` (default: own order)."""
        ring = self.ring
        if not self.is_unit():
            raise DivisionByApparentZero("constant term is not a unit")
        M = self.M if M is None else M
        if not self.exact and M > self.M:
            raise InvalidInput(f"cannot invert past the truncation order {self.M}")
        a = [self._at(i) for i in range(M + 1)]
        inv0 = ring.inverse(a[0])
        b = [inv0]
        for n in range(1, M + 1):
            acc = ring.zero()
            for k in range(1, n + 1):
                if not ring.is_zero(a[k]):
                    acc = ring.add(acc, ring.mul(a[k], b[n - k]))
            b.append(ring.neg(ring.mul(inv0, acc)))
        return PowerSeriesElt(ring, b, M)

    def shift_down(self, d: int) -> "PowerSeriesElt":
        """tau_d: drop the first d terms and divide by Z^d."""
        M = max(self.M - d, 0)
        coeffs = list(self.coeffs[d:]) or [self.ring.zero()]
        return PowerSeriesElt(self.ring, coeffs, M, self.exact)

    def low_part(self, d: int) -> List:
        return [self._at(i) for i in range(d)]

    def divide_uniformizer(self, k: int) -> "PowerSeriesElt":
        ring = self.ring.drop_precision(k)
        coeffs = [self.ring.divide_uniformizer(a, k) for a in self.coeffs]
        return PowerSeriesElt(ring, coeffs, self.M, self.exact)

    def scale_uniformizer(self, k: int, ring: CoefficientRing) -> "PowerSeriesElt":
        """varpi^k * self, rebased into ``ring``."""
        power = ring.uniformizer_power(k)
        coeffs = [ring.mul(_rebase(a, ring), power) for a in self.coeffs]
        return PowerSeriesElt(ring, coeffs, self.M, self.exact)

    # -- comparison -------------------------------------------------------

    def agrees_with(self, other: "PowerSeriesElt", M: Optional[int] = None) -> bool:
        """Coefficientwise equality at precision up to Z^M."""
        M = min(self.M, other.M) if M is None else M
        ring = self.ring
        return all(
            ring.equal(_rebase(self._at(i), ring), _rebase(other._at(i), ring))
            for i in range(M + 1)
        )

    def __eq__(self, other):
        if not isinstance(other, PowerSeriesElt):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.M == other.M
            and self.exact == other.exact
            and self.agrees_with(other)
        )

    __hash__ = None

    # -- evaluation -------------------------------------------------------

    def evaluate(self, alpha: CycloElement) -> CycloElement:
        """Value at a point of the open disc.

        A truncated series loses the tail ``sum_{i > M} a_i alpha^i``, whose
        valuation is at least ``(M + 1) nu(alpha)``; the result's precision is
        clamped to what that bound certifies.
        """
        v = alpha.valuation
        if v <= 0:
            raise OutsideDisc(f"nu(alpha) = {v} is not positive")
        m = alpha.m
        acc = CycloElement.zero(alpha.level)
        for a in reversed(self.coeffs):
            acc = acc * alpha + self.ring.to_level(a, m)
        if self.exact or v == INFINITY:
            return acc
        tail = (self.M + 1) * v
        return acc.with_precision(tail // alpha.level.degree)

    # -- documents --------------------------------------------------------

    def to_document(self) -> SeriesDocument:
        return SeriesDocument(
            ring=self.ring.tag,
            p=self.ring.p,
            M=self.M,
            exact=self.exact,
            coeffs=[self.ring.to_document(a) for a in self.coeffs],
        )

    @classmethod
    def from_document(
        cls, doc: SeriesDocument, prec: int = DEFAULT_PRECISION
    ) -> "PowerSeriesElt":
        if len(doc.coeffs) > doc.M + 1:
            raise InvalidInput(f"{len(doc.coeffs)} coefficients for M = {doc.M}")
        if doc.ring == "Zp":
            known = [
                c.val + c.relprec
                for c in doc.coeffs
                if getattr(c, "val", None) is not None
            ]
            prec = min(known) if known else prec
        ring = make_ring(doc.ring, doc.p, prec)
        coeffs = [ring.from_document(c) for c in doc.coeffs]
        return cls(ring, coeffs, doc.M, doc.exact)

    def render(self) -> str:
        if isinstance(self.ring, ZpRing):
            terms = {i: _signed(a, self.ring) for i, a in enumerate(self.coeffs) if a}
            body = format_polynomial(terms)
        else:
            body = " + ".join(
                f"({a!r})*Z^{i}" for i, a in enumerate(self.coeffs) if not a.is_zero()
            ) or "0"
        return body if self.exact else f"{body} + O(Z^{self.M + 1})"

    def __repr__(self):
        return f"PowerSeriesElt({self.render()!r})"


def _signed(a: int, ring: ZpRing) -> int:
    return a - ring.modulus if a > ring.modulus // 2 else a


def _rebase(a, ring: CoefficientRing):
    if isinstance(ring, ZpRing):
        return a % ring.modulus
    return a
