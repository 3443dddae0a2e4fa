"""Coefficient rings for truncated power series.

``ZpRing`` holds elements of Z_p as integers modulo p^N (capped absolute
precision) so series products can go through Kronecker substitution.
``R1Ring`` holds elements of Z_p[zeta_p] as level-1 ``CycloElement`` values
with their own precision tracking. Both expose the same interface, keyed by
the uniformizer varpi (p for Z_p, lambda_1 for Z_p[zeta_p]).
"""

from abc import ABC, abstractmethod
from typing import Any, ClassVar, List, Sequence, Union

from normslab.core.cyclotomic import CycloElement, lam, tower_level
from normslab.core.errors import DivisionByApparentZero, InvalidInput, LevelMismatch
from normslab.core.padics import (
    DEFAULT_PRECISION,
    INFINITY,
    PAdicNumber,
    check_prime,
    teichmuller_int,
    valuation_of_int,
)
from normslab.core.utils.kronecker import poly_mul
from normslab.models.documents import CycloDocument, PAdicDocument


class CoefficientRing(ABC):
    """A complete DVR with residue field F_p, at a fixed working precision."""

    tag: ClassVar[str]

    def __init__(self, p: int, prec: int = DEFAULT_PRECISION):
        self.p = check_prime(p)
        self.prec = prec

    def __eq__(self, other):
        return (
            isinstance(other, CoefficientRing)
            and self.tag == other.tag
            and self.p == other.p
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((self.tag, self.p, self.prec))

    def __repr__(self):
        return f"{type(self).__name__}(p={self.p}, prec={self.prec})"

    @property
    @abstractmethod
    def ramification(self) -> int:
        """nu_p(p) measured in varpi-units."""

    @property
    def precision_units(self) -> int:
        return self.ramification * self.prec

    @abstractmethod
    def from_int(self, n: int) -> Any: ...

    def zero(self) -> Any:
        return self.from_int(0)

    def one(self) -> Any:
        return self.from_int(1)

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def is_zero(self, a) -> bool: ...

    @abstractmethod
    def valuation(self, a):
        """varpi-adic valuation; +inf for zero at precision."""

    def is_unit(self, a) -> bool:
        return self.valuation(a) == 0

    @abstractmethod
    def residue(self, a) -> int:
        """Image in F_p."""

    @abstractmethod
    def inverse(self, a): ...

    @abstractmethod
    def uniformizer_power(self, k: int):
        """varpi^k."""

    @abstractmethod
    def divide_uniformizer(self, a, k: int):
        """a / varpi^k for a divisible by varpi^k."""

    @abstractmethod
    def drop_precision(self, k: int) -> "CoefficientRing":
        """The ring after dividing by varpi^k."""

    @abstractmethod
    def teichmuller(self, r: int): ...

    @abstractmethod
    def to_level(self, a, m: int) -> CycloElement:
        """Image of a coefficient in L^m."""

    @abstractmethod
    def uniformizer_valuation_at(self, m: int) -> int:
        """nu_m(varpi)."""

    @abstractmethod
    def to_document(self, a) -> Union[PAdicDocument, CycloDocument]: ...

    @abstractmethod
    def from_document(self, doc) -> Any: ...

    def equal(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def series_mul(self, a: Sequence, b: Sequence, n: int) -> List:
        """First n coefficients of the product of two coefficient lists."""
        out = [self.zero() for _ in range(n)]
        for i, x in enumerate(a[:n]):
            if self.is_zero(x):
                continue
            for j, y in enumerate(b[: n - i]):
                out[i + j] = self.add(out[i + j], self.mul(x, y))
        return out


class ZpRing(CoefficientRing):
    """Z_p at capped absolute precision: integers modulo p^prec."""

    tag = "Zp"

    def __init__(self, p: int, prec: int = DEFAULT_PRECISION):
        super().__init__(p, prec)
        self.modulus = self.p**prec

    @property
    def ramification(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def is_zero(self, a: int) -> bool:
        return a % self.modulus == 0

    def valuation(self, a: int):
        if a % self.modulus == 0:
            return INFINITY
        return valuation_of_int(a, self.p)

    def residue(self, a: int) -> int:
        return a % self.p

    def inverse(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByApparentZero(f"{a} is not a unit of Z_{self.p}")
        return pow(a, -1, self.modulus)

    def uniformizer_power(self, k: int) -> int:
        return self.p**k % self.modulus

    def divide_uniformizer(self, a: int, k: int) -> int:
        return (a // self.p**k) % self.p ** max(self.prec - k, 0)

    def drop_precision(self, k: int) -> "ZpRing":
        return ZpRing(self.p, self.prec - k)

    def teichmuller(self, r: int) -> int:
        return teichmuller_int(r, self.p, self.prec)

    def to_level(self, a: int, m: int) -> CycloElement:
        return CycloElement.from_rational(tower_level(self.p, m), a, self.prec)

    def uniformizer_valuation_at(self, m: int) -> int:
        return tower_level(self.p, m).degree

    def to_document(self, a: int) -> PAdicDocument:
        return PAdicNumber.from_int(a, self.p, self.prec).to_document()

    def from_document(self, doc) -> int:
        if not isinstance(doc, PAdicDocument):
            raise InvalidInput("Zp series need p-adic coefficients")
        x = PAdicNumber.from_document(doc)
        if x.is_zero():
            return 0
        if x.val < 0:
            raise InvalidInput(f"coefficient {x} is not integral")
        return x.lift() % self.modulus

    def series_mul(self, a: Sequence[int], b: Sequence[int], n: int) -> List[int]:
        prod = poly_mul(a[:n], b[:n])[:n]
        prod += [0] * (n - len(prod))
        return [x % self.modulus for x in prod]


class R1Ring(CoefficientRing):
    """Z_p[zeta_p], the ring of integers of L^1; varpi = lambda_1."""

    tag = "R1"

    def __init__(self, p: int, prec: int = DEFAULT_PRECISION):
        super().__init__(p, prec)
        self.level = tower_level(self.p, 1)

    @property
    def ramification(self) -> int:
        return self.p - 1

    def from_int(self, n: int) -> CycloElement:
        if n == 0:
            return CycloElement.zero(self.level)
        return CycloElement.from_rational(self.level, n, self.prec)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def valuation(self, a):
        if a.is_zero():
            return INFINITY
        return a.valuation

    def residue(self, a) -> int:
        if self.valuation(a) != 0:
            return 0
        return a.residue()

    def inverse(self, a):
        return a.inverse()

    def uniformizer_power(self, k: int):
        return lam(self.p, 1, self.prec) ** k

    def divide_uniformizer(self, a, k: int):
        if a.is_exact_zero() or k == 0:
            return a
        return a / lam(self.p, 1, self.prec) ** k

    def drop_precision(self, k: int) -> "R1Ring":
        return R1Ring(self.p, self.prec - (k + self.p - 2) // (self.p - 1))

    def teichmuller(self, r: int):
        return self.from_int(teichmuller_int(r, self.p, self.prec))

    def to_level(self, a, m: int) -> CycloElement:
        if m < 1:
            raise LevelMismatch("Z_p[zeta_p] coefficients need a point at level >= 1")
        return a.embed_up(m)

    def uniformizer_valuation_at(self, m: int) -> int:
        return tower_level(self.p, m).degree // (self.p - 1)

    def to_document(self, a) -> CycloDocument:
        return a.to_document()

    def from_document(self, doc):
        if not isinstance(doc, CycloDocument) or doc.m != 1:
            raise InvalidInput("R1 series need level-1 cyclotomic coefficients")
        x = CycloElement.from_document(doc)
        if not x.is_zero() and x.valuation < 0:
            raise InvalidInput("coefficient is not integral")
        return x


def make_ring(tag: str, p: int, prec: int = DEFAULT_PRECISION) -> CoefficientRing:
    if tag == "Zp":
        return ZpRing(p, prec)
    if tag == "R1":
        return R1Ring(p, prec)
    raise InvalidInput(f"unknown coefficient ring {tag!r}")
