"""Arithmetic in the cyclotomic tower L^m = Q_p(zeta_{p^m}).

Elements are stored by their coordinates in the power basis
``1, zeta, ..., zeta^{e_m - 1}`` of ``Z_p[zeta_{p^m}]``, scaled by a power of
p::

    x = p^shift * sum(num[i] * zeta^i)    known modulo p^absprec

with ``num[i]`` reduced modulo ``p^(absprec - shift)`` and, unless the element
is zero at its precision, not all divisible by p. Coordinates in the
uniformizer basis ``1, lambda, ..., lambda^{e_m - 1}`` (``lambda = zeta - 1``)
are derived on demand and drive valuations and documents.

Level 0 is Q_p itself (``e_0 = 1``, ``zeta_1 = 1``).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, gcd
from typing import List, NamedTuple, Sequence, Tuple, Union

from normslab.core.errors import (
    CoercionFailure,
    DivisionByApparentZero,
    InvalidInput,
    LevelMismatch,
    PrecisionExhausted,
)
from normslab.core.padics import (
    DEFAULT_PRECISION,
    INFINITY,
    PAdicNumber,
    check_prime,
    valuation_of_int,
)
from normslab.core.utils.kronecker import poly_mul, poly_sqr, taylor_shift
from normslab.models.documents import CycloDocument

COERCION_MARGIN = 5


@dataclass(frozen=True)
class TowerLevel:
    """The field L^m; instances are shared through ``tower_level``."""

    p: int
    m: int

    def __post_init__(self):
        check_prime(self.p)
        if self.m < 0:
            raise InvalidInput(f"level must be non-negative, got {self.m}")

    @property
    def degree(self) -> int:
        """e_m = [L^m : Q_p]."""
        if self.m == 0:
            return 1
        return (self.p - 1) * self.p ** (self.m - 1)

    e = degree

    @property
    def order(self) -> int:
        """Order of zeta_{p^m}."""
        return self.p**self.m

    @property
    def block(self) -> int:
        return self.p ** (self.m - 1) if self.m else 1

    @cached_property
    def minpoly(self) -> Tuple[int, ...]:
        """Phi_{p^m}(1 + X) over Z, low degree first. Eisenstein for m >= 1."""
        if self.m == 0:
            return (0, 1)
        b = self.block
        return tuple(
            sum(comb(j * b, i) for j in range(self.p)) for i in range(self.degree + 1)
        )

    def below(self) -> "TowerLevel":
        if self.m == 0:
            raise LevelMismatch("Q_p has no level below it")
        return tower_level(self.p, self.m - 1)

    def galois_group(self, base: int = 0) -> List["GaloisElement"]:
        """Gal(L^m | L^base) as residues a mod p^m, a = 1 mod p^base."""
        if not 0 <= base <= self.m:
            raise LevelMismatch(f"base level {base} is not below {self.m}")
        if self.m == 0:
            return [GaloisElement(self, 1)]
        n = self.order
        step = self.p**base if base else 1
        return [
            GaloisElement(self, a)
            for a in range(1, n, step)
            if a % self.p != 0
        ]

    def __str__(self):
        return f"L^{self.m} (p={self.p})"


@lru_cache(maxsize=None)
def tower_level(p: int, m: int) -> TowerLevel:
    return TowerLevel(p, m)


def _reduce(level: TowerLevel, acc: List[int], modulus: int) -> List[int]:
    """Reduce a polynomial in zeta (any length) to the power basis mod ``modulus``."""
    if level.m == 0:
        return [sum(acc) % modulus]
    n, e, b, p = level.order, level.degree, level.block, level.p
    if len(acc) > n:
        folded = acc[:n]
        for k in range(n, len(acc)):
            folded[k % n] += acc[k]
        acc = folded
    elif len(acc) < n:
        acc = acc + [0] * (n - len(acc))
    for r in range(b):
        top = acc[e + r]
        if top:
            for j in range(p - 1):
                acc[j * b + r] -= top
    return [x % modulus for x in acc[:e]]


class UnitIndex(NamedTuple):
    """nu(u - 1) of a principal unit; ``exact`` is False for a lower bound."""

    value: int
    exact: bool


Scalar = Union[int, Fraction, PAdicNumber]


class CycloElement:
    __slots__ = ("level", "shift", "absprec", "_num", "_lam", "_val")

    def __init__(self, level: TowerLevel, num: Sequence[int], shift, absprec):
        if len(num) != level.degree:
            raise InvalidInput(
                f"expected {level.degree} coordinates at {level}, got {len(num)}"
            )
        self.level = level
        self._lam = None
        self._val = None
        if absprec == INFINITY:
            self.shift = INFINITY
            self.absprec = INFINITY
            self._num = (0,) * level.degree
            return
        if shift > absprec:
            shift = absprec
        p = level.p
        relprec = absprec - shift
        modulus = p**relprec
        reduced = [x % modulus for x in num]
        if not any(reduced):
            self.shift = absprec
            self.absprec = absprec
            self._num = (0,) * level.degree
            return
        content = min(valuation_of_int(x, p) for x in reduced if x)
        if content:
            scale = p**content
            reduced = [x // scale for x in reduced]
        self.shift = shift + content
        self.absprec = absprec
        self._num = tuple(reduced)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, level: TowerLevel) -> "CycloElement":
        """The exact zero."""
        return cls(level, (0,) * level.degree, INFINITY, INFINITY)

    @classmethod
    def inexact_zero(cls, level: TowerLevel, absprec: int) -> "CycloElement":
        return cls(level, (0,) * level.degree, absprec, absprec)

    @classmethod
    def from_zeta_coords(
        cls,
        level: TowerLevel,
        coords: Sequence[int],
        prec: int = DEFAULT_PRECISION,
        shift: int = 0,
    ) -> "CycloElement":
        """``p^shift * sum(coords[i] zeta^i)``; coords may have any length."""
        return cls(level, _reduce(level, list(coords), level.p ** (prec - shift)), shift, prec)

    @classmethod
    def from_lambda_coords(
        cls, level: TowerLevel, coords: Sequence[int], prec: int = DEFAULT_PRECISION
    ) -> "CycloElement":
        """``sum(coords[i] lambda^i)`` for integer coords, i < e_m."""
        coords = list(coords) + [0] * (level.degree - len(coords))
        if len(coords) > level.degree:
            raise InvalidInput(f"too many lambda coordinates for {level}")
        return cls(level, taylor_shift(coords, -1), 0, prec)

    @classmethod
    def from_coeffs(
        cls, level: TowerLevel, coeffs: Sequence[PAdicNumber]
    ) -> "CycloElement":
        """From lambda-basis coordinates given as p-adic numbers."""
        if len(coeffs) != level.degree:
            raise InvalidInput(
                f"expected {level.degree} coefficients at {level}, got {len(coeffs)}"
            )
        if any(c.p != level.p for c in coeffs):
            raise InvalidInput("coefficients over a different prime")
        known = [c for c in coeffs if not c.is_exact_zero()]
        if not known:
            return cls.zero(level)
        absprec = min(c.absprec for c in known)
        shift = min(c.val for c in known)
        p = level.p
        ints = []
        for c in coeffs:
            if c.is_zero() or c.val >= absprec:
                ints.append(0)
            else:
                ints.append(c.unit * p ** (c.val - shift))
        return cls(level, taylor_shift(ints, -1), shift, absprec)

    @classmethod
    def from_padic(cls, level: TowerLevel, x: PAdicNumber) -> "CycloElement":
        if x.p != level.p:
            raise InvalidInput(f"mixing p={x.p} and p={level.p}")
        if x.is_exact_zero():
            return cls.zero(level)
        num = [0] * level.degree
        num[0] = x.unit
        return cls(level, num, x.val, x.absprec)

    @classmethod
    def from_rational(
        cls, level: TowerLevel, q: Union[int, Fraction], prec: int = DEFAULT_PRECISION
    ) -> "CycloElement":
        return cls.from_padic(level, PAdicNumber.from_rational(q, level.p, prec))

    @classmethod
    def one(cls, level: TowerLevel, prec: int = DEFAULT_PRECISION) -> "CycloElement":
        return cls.from_rational(level, 1, prec)

    # -- accessors --------------------------------------------------------

    @property
    def p(self) -> int:
        return self.level.p

    @property
    def m(self) -> int:
        return self.level.m

    @property
    def relprec(self):
        if self.absprec == INFINITY:
            return INFINITY
        return self.absprec - self.shift

    def is_exact_zero(self) -> bool:
        return self.absprec == INFINITY

    def is_zero(self) -> bool:
        """Zero at its precision, exact or not."""
        return self.is_exact_zero() or self.relprec == 0

    def zeta_coords(self) -> Tuple[int, ...]:
        return self._num

    def lambda_coords(self) -> Tuple[int, ...]:
        """Integer lambda-basis coordinates of ``x / p^shift`` modulo p^relprec."""
        if self._lam is None:
            if self.is_zero():
                self._lam = self._num
            else:
                modulus = self.p**self.relprec
                self._lam = tuple(x % modulus for x in taylor_shift(self._num, 1))
        return self._lam

    @property
    def coeffs(self) -> List[PAdicNumber]:
        """Lambda-basis coordinates as p-adic numbers at the element's precision."""
        p = self.p
        if self.is_exact_zero():
            return [PAdicNumber.zero(p) for _ in range(self.level.degree)]
        out = []
        for n in self.lambda_coords():
            if n == 0:
                out.append(PAdicNumber.inexact_zero(p, self.absprec))
            else:
                v = valuation_of_int(n, p)
                out.append(
                    PAdicNumber(p, self.shift + v, n // p**v, self.relprec - v)
                )
        return out

    @property
    def valuation(self):
        """nu_m, normalized so nu_m(lambda_m) = 1 and nu_m(p) = e_m."""
        if self._val is None:
            if self.is_exact_zero():
                self._val = INFINITY
            elif self.relprec == 0:
                raise PrecisionExhausted(
                    f"element of {self.level} vanishes at precision p^{self.absprec}"
                )
            else:
                e, p = self.level.degree, self.p
                self._val = min(
                    e * (self.shift + valuation_of_int(n, p)) + i
                    for i, n in enumerate(self.lambda_coords())
                    if n
                )
        return self._val

    def valuation_lower_bound(self):
        """nu_m if known, else the bound e_m * absprec certified by the precision."""
        if self.is_zero():
            return self.level.degree * self.absprec
        return self.valuation

    def leading_term(self) -> Tuple[int, int]:
        """``(t, r)`` with ``x = r * lambda^t mod lambda^(t+1)``, r in 1..p-1."""
        t = self.valuation
        e, p = self.level.degree, self.p
        i = t % e if self.m else 0
        n = self.lambda_coords()[i]
        v = valuation_of_int(n, p)
        r = (n // p**v) % p
        # p = -lambda^e mod lambda^(e+1) at every level m >= 1
        if self.m and (self.shift + v) % 2:
            r = p - r
        return t, r

    def residue(self) -> int:
        """Leading residue of the unit part ``x / lambda^nu(x)``."""
        return self.leading_term()[1]

    def principal_unit_index(self) -> UnitIndex:
        """nu(u - 1); a lower bound when u - 1 vanishes at precision."""
        d = self - 1
        if d.is_zero():
            if d.is_exact_zero():
                return UnitIndex(INFINITY, True)
            return UnitIndex(self.level.degree * d.absprec, False)
        return UnitIndex(d.valuation, True)

    def with_precision(self, absprec: int) -> "CycloElement":
        if self.is_exact_zero() or absprec >= self.absprec:
            if self.is_exact_zero() and absprec != INFINITY:
                return CycloElement.inexact_zero(self.level, absprec)
            return self
        return CycloElement(self.level, self._num, self.shift, absprec)

    def scaled(self, k: int) -> "CycloElement":
        """Multiply by p^k exactly."""
        if self.is_exact_zero():
            return self
        return CycloElement(self.level, self._num, self.shift + k, self.absprec + k)

    # -- arithmetic -------------------------------------------------------

    def _same_level(self, other: "CycloElement") -> None:
        if other.level != self.level:
            raise LevelMismatch(f"{self.level} and {other.level}")

    def _lift_scalar(self, value: Scalar) -> "CycloElement":
        if isinstance(value, PAdicNumber):
            return CycloElement.from_padic(self.level, value)
        prec = self.absprec if self.absprec != INFINITY else DEFAULT_PRECISION
        return CycloElement.from_rational(self.level, value, max(prec, 1))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, PAdicNumber)):
            other = self._lift_scalar(other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._same_level(other)
        if self.is_exact_zero():
            return other
        if other.is_exact_zero():
            return self
        shift = min(self.shift, other.shift)
        absprec = min(self.absprec, other.absprec)
        p = self.p
        a = p ** (self.shift - shift)
        b = p ** (other.shift - shift)
        num = [a * x + b * y for x, y in zip(self._num, other._num)]
        return CycloElement(self.level, num, shift, absprec)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return CycloElement(self.level, [-x for x in self._num], self.shift, self.absprec)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, PAdicNumber)):
            other = self._lift_scalar(other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scale_rational(self, q: Fraction) -> "CycloElement":
        if q == 0:
            return CycloElement.zero(self.level)
        if self.is_exact_zero():
            return self
        p = self.p
        vn = valuation_of_int(q.numerator, p)
        vd = valuation_of_int(q.denominator, p)
        k = vn - vd
        if self.relprec == 0:
            return CycloElement.inexact_zero(self.level, self.absprec + k)
        modulus = p**self.relprec
        unit = (q.numerator // p**vn) * pow(q.denominator // p**vd, -1, modulus)
        return CycloElement(
            self.level, [unit * x for x in self._num], self.shift + k, self.absprec + k
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale_rational(Fraction(other))
        if isinstance(other, PAdicNumber):
            other = self._lift_scalar(other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._same_level(other)
        if self.is_exact_zero() or other.is_exact_zero():
            return CycloElement.zero(self.level)
        shift = self.shift + other.shift
        relprec = min(self.relprec, other.relprec)
        if relprec == 0:
            return CycloElement.inexact_zero(self.level, shift)
        if self is other:
            prod = poly_sqr(self._num)
        else:
            prod = poly_mul(self._num, other._num)
        num = _reduce(self.level, prod, self.p**relprec)
        return CycloElement(self.level, num, shift, shift + relprec)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise DivisionByApparentZero(f"cannot invert zero at {self.level}")
        level = self.level
        unit_part = CycloElement(level, self._num, 0, self.relprec)
        if level.m == 0:
            inv = pow(self._num[0], -1, self.p**self.relprec)
            return CycloElement(level, [inv], -self.shift, self.relprec - self.shift)
        conjugate_product = CycloElement.one(level, self.relprec)
        for sigma in level.galois_group(level.m - 1)[1:]:
            conjugate_product = conjugate_product * sigma.apply(unit_part)
        norm = (conjugate_product * unit_part).coerce_down(margin=0)
        inv = conjugate_product * norm.inverse().embed_up(level.m)
        return inv.scaled(-self.shift)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByApparentZero("division by the integer 0")
            return self._scale_rational(1 / Fraction(other))
        if isinstance(other, PAdicNumber):
            other = self._lift_scalar(other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._same_level(other)
        if other.is_zero():
            raise DivisionByApparentZero(f"division by zero at {self.level}")
        if self.is_exact_zero():
            return self
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift_scalar(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        prec = self.relprec if self.relprec not in (0, INFINITY) else DEFAULT_PRECISION
        result = CycloElement.one(self.level, prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, CycloElement):
            return NotImplemented
        return (self.level, self.shift, self.absprec, self._num) == (
            other.level,
            other.shift,
            other.absprec,
            other._num,
        )

    def __hash__(self):
        return hash((self.level, self.shift, self.absprec, self._num))

    def congruent(self, other: "CycloElement", k: int) -> bool:
        """Whether x = y mod m^k (k in units of nu_m)."""
        if isinstance(other, (int, Fraction, PAdicNumber)):
            other = self._lift_scalar(other)
        self._same_level(other)
        available = self.level.degree * min(self.absprec, other.absprec)
        if k > available:
            raise PrecisionExhausted(
                f"congruence mod m^{k} at {self.level} exceeds precision {available}"
            )
        diff = self - other
        return diff.is_zero() or diff.valuation >= k

    # -- tower maps -------------------------------------------------------

    def galois(self, a: int) -> "CycloElement":
        return GaloisElement(self.level, a).apply(self)

    def embed_up(self, target: int) -> "CycloElement":
        """Image in L^target under the tower inclusion."""
        m = self.level.m
        if target < m:
            raise LevelMismatch(f"cannot embed level {m} into level {target}")
        if target == m:
            return self
        up = tower_level(self.p, target)
        if self.is_exact_zero():
            return CycloElement.zero(up)
        stride = self.p ** (target - m)
        num = [0] * up.degree
        for i, x in enumerate(self._num):
            num[i * stride] = x
        return CycloElement(up, num, self.shift, self.absprec)

    def coerce_down(self, margin: int = COERCION_MARGIN) -> "CycloElement":
        """Recognize an element of L^m lying in L^(m-1)."""
        below = self.level.below()
        if self.is_exact_zero():
            return CycloElement.zero(below)
        if self.relprec == 0:
            return CycloElement.inexact_zero(below, self.absprec)
        if self.relprec < margin:
            raise CoercionFailure(
                f"only {self.relprec} digits left, need {margin} to certify membership"
            )
        p = self.p
        stray = [i for i, x in enumerate(self._num) if x and i % p]
        if stray:
            raise CoercionFailure(
                f"element of {self.level} has nonzero coordinate at zeta^{stray[0]}"
            )
        num = [self._num[p * k] for k in range(below.degree)]
        return CycloElement(below, num, self.shift, self.absprec)

    def norm_down(self, margin: int = COERCION_MARGIN) -> "CycloElement":
        """N_{L^m | L^(m-1)}."""
        level = self.level
        if level.m == 0:
            raise LevelMismatch("Q_p has no level below it")
        result = self
        for sigma in level.galois_group(level.m - 1)[1:]:
            result = result * sigma.apply(self)
        return result.coerce_down(margin)

    def norm_to(self, target: int, margin: int = COERCION_MARGIN) -> "CycloElement":
        if target > self.level.m:
            raise LevelMismatch(f"cannot take a norm up to level {target}")
        x = self
        while x.level.m > target:
            x = x.norm_down(margin)
        return x

    def to_padic(self) -> PAdicNumber:
        """The Q_p value of a level-0 element."""
        if self.level.m != 0:
            raise LevelMismatch(f"{self.level} is not Q_p; coerce down first")
        if self.is_exact_zero():
            return PAdicNumber.zero(self.p)
        if self.relprec == 0:
            return PAdicNumber.inexact_zero(self.p, self.absprec)
        return PAdicNumber(self.p, self.shift, self._num[0], self.relprec)

    # -- documents --------------------------------------------------------

    def to_document(self) -> CycloDocument:
        return CycloDocument(
            p=self.p, m=self.m, coeffs=[c.to_document() for c in self.coeffs]
        )

    @classmethod
    def from_document(cls, doc: CycloDocument) -> "CycloElement":
        level = tower_level(check_prime(doc.p), doc.m)
        return cls.from_coeffs(
            level, [PAdicNumber.from_document(c) for c in doc.coeffs]
        )

    def __repr__(self):
        if self.is_exact_zero():
            return f"CycloElement(0, {self.level})"
        return (
            f"CycloElement({self.level}, p^{self.shift} * {list(self.lambda_coords())}"
            f" in lambda, O(p^{self.absprec}))"
        )


@dataclass(frozen=True)
class GaloisElement:
    """sigma_a: zeta_{p^m} -> zeta_{p^m}^a."""

    level: TowerLevel
    a: int

    def __post_init__(self):
        if gcd(self.a, self.level.p) != 1:
            raise InvalidInput(f"a = {self.a} is not prime to p = {self.level.p}")
        object.__setattr__(self, "a", self.a % self.level.order if self.level.m else 1)

    def is_identity(self) -> bool:
        return self.level.m == 0 or self.a == 1

    def compose(self, other: "GaloisElement") -> "GaloisElement":
        if other.level != self.level:
            raise LevelMismatch(f"{self.level} and {other.level}")
        return GaloisElement(self.level, self.a * other.a)

    def restrict(self, m: int) -> "GaloisElement":
        """Image in Gal(L^m | Q_p)."""
        if m > self.level.m:
            raise LevelMismatch(f"cannot restrict to level {m} above {self.level.m}")
        return GaloisElement(tower_level(self.level.p, m), self.a)

    def fixes_level(self, base: int) -> bool:
        """Whether sigma lies in Gal(L^m | L^base)."""
        return base == 0 or self.a % self.level.p**base == 1

    def apply(self, x: CycloElement) -> CycloElement:
        if x.level != self.level:
            raise LevelMismatch(f"sigma at {self.level} applied to {x.level}")
        level = self.level
        if level.m == 0 or self.a == 1 or x.is_zero():
            return x
        n = level.order
        acc = [0] * n
        for i, c in enumerate(x.zeta_coords()):
            if c:
                acc[(self.a * i) % n] += c
        num = _reduce(level, acc, x.p**x.relprec)
        return CycloElement(level, num, x.shift, x.absprec)

    __call__ = apply


# -- distinguished elements ----------------------------------------------


def lam(p: int, m: int, prec: int = DEFAULT_PRECISION) -> CycloElement:
    """The uniformizer lambda_m = zeta_{p^m} - 1 (the net pi_m)."""
    level = tower_level(p, m)
    if m == 0:
        raise LevelMismatch("Q_p has uniformizer p, not zeta - 1")
    return CycloElement.from_zeta_coords(level, [-1, 1], prec)


def zeta(p: int, m: int, prec: int = DEFAULT_PRECISION) -> CycloElement:
    level = tower_level(p, m)
    return CycloElement.from_zeta_coords(level, [0, 1] if m else [1], prec)


# -- polynomials over the tower ------------------------------------------

CycloPoly = Sequence[CycloElement]


def poly_eval(coeffs: CycloPoly, x: CycloElement) -> CycloElement:
    """Evaluate at ``x``; coefficients from lower levels are embedded up."""
    acc = CycloElement.zero(x.level)
    for a in reversed(coeffs):
        acc = acc * x + a.embed_up(x.level.m)
    return acc


def poly_derivative(coeffs: CycloPoly) -> List[CycloElement]:
    return [a * i for i, a in enumerate(coeffs)][1:]


def minimal_polynomial(
    p: int, m: int, prec: int = DEFAULT_PRECISION
) -> List[CycloElement]:
    """Minimal polynomial of lambda_{m+1} over L^m: (X + 1)^p - (1 + lambda_m)."""
    if m < 1:
        raise LevelMismatch("the net pi_m starts at level 1")
    level = tower_level(p, m)
    coeffs = [-lam(p, m, prec)]
    coeffs += [CycloElement.from_rational(level, comb(p, i), prec) for i in range(1, p + 1)]
    return coeffs


def minimal_polynomial_of_generator(
    p: int, base: int, top: int, prec: int = DEFAULT_PRECISION
) -> List[CycloElement]:
    """Minimal polynomial of lambda_top over L^base, coefficients at level base."""
    if not 0 <= base < top:
        raise LevelMismatch(f"need 0 <= base < top, got {base}, {top}")
    level = tower_level(p, base)
    if base == 0:
        return [
            CycloElement.from_rational(level, a, prec)
            for a in tower_level(p, top).minpoly
        ]
    k = p ** (top - base)
    coeffs = [-lam(p, base, prec)]
    coeffs += [CycloElement.from_rational(level, comb(k, i), prec) for i in range(1, k + 1)]
    return coeffs


def random_element(
    level: TowerLevel, rng, prec: int = DEFAULT_PRECISION, integral: bool = True
) -> CycloElement:
    """A random element with coordinates drawn from ``rng`` (a ``random.Random``)."""
    modulus = level.p**prec
    coords = [rng.randrange(modulus) for _ in range(level.degree)]
    shift = 0 if integral else rng.randrange(-2, 3)
    return CycloElement(level, coords, shift, prec + shift)


def group_order(level: TowerLevel, base: int = 0) -> int:
    return level.degree // tower_level(level.p, base).degree

