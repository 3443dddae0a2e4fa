"""Explicit degree-p Kummer extensions ``M = L^m(y)``, ``(1 + y)^p = u``.

Elements of M are polynomials of degree < p in y with coefficients in L^m.
This is the slow path that recomputes the different of a fiber from its
Galois action instead of from the conductor.
"""

from math import comb
from typing import List, Sequence

from normslab.core.cyclotomic import CycloElement, zeta
from normslab.core.errors import InvalidInput, LevelMismatch, TrivialElement
from normslab.core.padics import INFINITY
from normslab.core.ramification import RamificationProfile, profile_from_i_table
from normslab.models.reports import CrossCheckRecord


class KummerExtension:
    """M over L^m for a principal unit u with nu_m(u - 1) = t prime to p."""

    def __init__(self, u: CycloElement):
        if u.m < 1:
            raise LevelMismatch("the base of a Kummer extension is a level m >= 1")
        index = u.principal_unit_index()
        if not index.exact or index.value % u.p == 0 or index.value == 0:
            raise InvalidInput("the unit must be in standard form: nu(u - 1) prime to p")
        self.u = u
        self.level = u.level
        self.p = u.p
        self.t = index.value
        prec = u.absprec
        p = self.p
        # y^p = (u - 1) - sum_{0<j<p} C(p, j) y^j
        self._tail = [u - 1] + [
            CycloElement.from_rational(self.level, -comb(p, j), prec) for j in range(1, p)
        ]
        self._zeta_p = zeta(p, u.m, prec) ** (p ** (u.m - 1))

    @property
    def degree(self) -> int:
        return self.p

    def element(self, coeffs: Sequence[CycloElement]) -> List[CycloElement]:
        coeffs = list(coeffs)
        if len(coeffs) > self.p:
            raise InvalidInput(f"elements of M have degree < {self.p} in y")
        zero = CycloElement.zero(self.level)
        return coeffs + [zero] * (self.p - len(coeffs))

    def y(self) -> List[CycloElement]:
        one = CycloElement.one(self.level, self.u.absprec)
        return self.element([CycloElement.zero(self.level), one])

    def add(self, a: Sequence[CycloElement], b: Sequence[CycloElement]) -> List[CycloElement]:
        return [x + y for x, y in zip(a, b)]

    def sub(self, a: Sequence[CycloElement], b: Sequence[CycloElement]) -> List[CycloElement]:
        return [x - y for x, y in zip(a, b)]

    def mul(self, a: Sequence[CycloElement], b: Sequence[CycloElement]) -> List[CycloElement]:
        p = self.p
        prod = [CycloElement.zero(self.level) for _ in range(2 * p - 1)]
        for i, x in enumerate(a):
            if x.is_exact_zero():
                continue
            for j, z in enumerate(b):
                if not z.is_exact_zero():
                    prod[i + j] = prod[i + j] + x * z
        for k in range(2 * p - 2, p - 1, -1):
            top = prod[k]
            if top.is_exact_zero():
                continue
            for j, s in enumerate(self._tail):
                prod[k - p + j] = prod[k - p + j] + top * s
            prod[k] = CycloElement.zero(self.level)
        return prod[:p]

    def pow(self, a: Sequence[CycloElement], n: int) -> List[CycloElement]:
        result = self.element([CycloElement.one(self.level, self.u.absprec)])
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def valuation(self, a: Sequence[CycloElement]):
        """nu_M, with nu_M(y) = t and nu_M(lambda_m) = p."""
        values = [
            self.p * x.valuation + j * self.t
            for j, x in enumerate(a)
            if not x.is_zero()
        ]
        return min(values, default=INFINITY)

    def galois(self, k: int, a: Sequence[CycloElement]) -> List[CycloElement]:
        """sigma_k: y -> zeta_p^k (1 + y) - 1, trivial on L^m."""
        one = CycloElement.one(self.level, self.u.absprec)
        zk = self._zeta_p**k
        image = self.element([zk - one, zk])
        acc = self.element([])
        for x in reversed(list(a)):
            acc = self.mul(acc, image)
            acc[0] = acc[0] + x
        return acc

    def uniformizer_exponents(self):
        """``(a, b)`` with ``a t + b p = 1`` and 1 <= a < p."""
        a = pow(self.t, -1, self.p)
        b = (1 - a * self.t) // self.p
        return a, b

    def i_value(self, k: int) -> int:
        """i(sigma_k) = nu_M(sigma_k(Pi) - Pi) - 1 for Pi = y^a pi_m^b."""
        if k % self.p == 0:
            raise TrivialElement("sigma_0 is the identity")
        a, b = self.uniformizer_exponents()
        ya = self.pow(self.y(), a)
        diff = self.sub(self.galois(k, ya), ya)
        return self.p * b + self.valuation(diff) - 1

    def profile(self) -> RamificationProfile:
        table = {k: self.i_value(k) for k in range(1, self.p)}
        return profile_from_i_table(("kummer", self.p, self.level.m), self.p, table)


def cross_check(u: CycloElement, d_m: int) -> CrossCheckRecord:
    """Recompute the different of ``T^p = u`` and compare it with d_m."""
    profile = KummerExtension(u).profile()
    return CrossCheckRecord(
        lower_jumps=list(profile.lower_jumps),
        upper_jumps=[str(s) for s in profile.upper_jumps],
        different_degree=profile.different_degree,
        agrees=profile.different_degree == d_m,
    )


__all__ = ["KummerExtension", "cross_check"]
