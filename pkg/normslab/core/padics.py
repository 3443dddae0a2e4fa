"""Elements of Q_p at tracked precision.

A ``PAdicNumber`` is ``p^val * unit`` with ``unit`` known modulo
``p^relprec``. Its absolute precision is ``val + relprec``. Three shapes exist:

* nonzero: ``relprec > 0`` and ``unit`` coprime to ``p``;
* inexact zero ``O(p^k)``: ``val = k``, ``relprec = 0``, ``unit = 0``;
* exact zero: ``val = +inf``.

Operations never renormalize silently: a sum carries the smaller absolute
precision of its inputs, a product or quotient the smaller relative one.
"""

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Union

from normslab.core.errors import (
    DivisionByApparentZero,
    HenselHypothesisFailed,
    InvalidInput,
    PrecisionExhausted,
)
from normslab.models.documents import PAdicDocument

INFINITY = math.inf

DEFAULT_PRECISION = 60


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, else raise InvalidInput."""
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise InvalidInput(f"p must be an odd prime, got {p!r}")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise InvalidInput(f"p must be an odd prime, got {p}")
        d += 2
    return p


def valuation_of_int(n: int, p: int) -> Union[int, float]:
    """p-adic valuation of an integer; +inf for zero."""
    if n == 0:
        return INFINITY
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PAdicNumber:
    __slots__ = ("p", "val", "unit", "relprec")

    def __init__(self, p: int, val, unit: int, relprec: int):
        check_prime(p)
        if val == INFINITY:
            unit, relprec = 0, 0
        else:
            if relprec < 0:
                raise PrecisionExhausted(f"negative relative precision {relprec}")
            if relprec == 0:
                unit = 0
            else:
                unit %= p**relprec
                if unit % p == 0:
                    raise InvalidInput(f"unit {unit} is divisible by p={p}")
        self.p = p
        self.val = val
        self.unit = unit
        self.relprec = relprec

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "PAdicNumber":
        return cls(p, INFINITY, 0, 0)

    @classmethod
    def inexact_zero(cls, p: int, absprec: int) -> "PAdicNumber":
        return cls(p, absprec, 0, 0)

    @classmethod
    def from_int(cls, n: int, p: int, prec: int = DEFAULT_PRECISION) -> "PAdicNumber":
        """The integer ``n`` known to absolute precision ``prec``."""
        if n == 0:
            return cls.zero(p)
        v = valuation_of_int(n, p)
        if v >= prec:
            return cls.inexact_zero(p, prec)
        return cls(p, v, n // p**v, prec - v)

    @classmethod
    def from_rational(
        cls, q: Union[int, Fraction], p: int, prec: int = DEFAULT_PRECISION
    ) -> "PAdicNumber":
        """A rational known to absolute precision ``prec``."""
        q = Fraction(q)
        if q == 0:
            return cls.zero(p)
        vn = valuation_of_int(q.numerator, p)
        vd = valuation_of_int(q.denominator, p)
        v = vn - vd
        if v >= prec:
            return cls.inexact_zero(p, prec)
        relprec = prec - v
        modulus = p**relprec
        num = q.numerator // p**vn
        den = q.denominator // p**vd
        return cls(p, v, num * pow(den, -1, modulus), relprec)

    @classmethod
    def one(cls, p: int, prec: int = DEFAULT_PRECISION) -> "PAdicNumber":
        return cls(p, 0, 1, prec)

    # -- accessors --------------------------------------------------------

    @property
    def absprec(self):
        if self.val == INFINITY:
            return INFINITY
        return self.val + self.relprec

    def is_exact_zero(self) -> bool:
        return self.val == INFINITY

    def is_zero(self) -> bool:
        """Zero at precision (exact or inexact)."""
        return self.relprec == 0

    @property
    def valuation(self):
        """nu_p of the element; +inf for exact zero."""
        if self.val == INFINITY:
            return INFINITY
        if self.relprec == 0:
            raise PrecisionExhausted(f"valuation of O({self.p}^{self.val}) is unknown")
        return self.val

    def norm(self) -> Fraction:
        """|x|_p = p^{-nu_p(x)}."""
        v = self.valuation
        if v == INFINITY:
            return Fraction(0)
        return Fraction(1, self.p**v) if v >= 0 else Fraction(self.p ** (-v))

    def lift(self) -> int:
        """Integer representative of an integral element."""
        if self.is_zero():
            return 0
        if self.val < 0:
            raise InvalidInput(f"{self} is not integral")
        return self.unit * self.p**self.val

    def to_fraction(self) -> Fraction:
        """Rational representative ``p^val * unit``."""
        if self.is_zero():
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def residue(self) -> int:
        """Image in F_p of an integral element."""
        if self.is_zero():
            if self.val == INFINITY or self.val >= 1:
                return 0
            raise PrecisionExhausted("residue of a zero with no digits")
        if self.val < 0:
            raise InvalidInput(f"{self} is not integral")
        return self.unit % self.p if self.val == 0 else 0

    def with_precision(self, absprec: int) -> "PAdicNumber":
        """Drop digits so the absolute precision is at most ``absprec``."""
        if self.val == INFINITY:
            return self
        if absprec >= self.absprec:
            return self
        if absprec <= self.val:
            return PAdicNumber.inexact_zero(self.p, absprec)
        return PAdicNumber(self.p, self.val, self.unit, absprec - self.val)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "PAdicNumber":
        if isinstance(other, PAdicNumber):
            if other.p != self.p:
                raise InvalidInput(f"mixing p={self.p} and p={other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            prec = self.absprec if self.absprec != INFINITY else DEFAULT_PRECISION
            prec = max(prec, 1)
            return PAdicNumber.from_rational(other, self.p, prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.val == INFINITY:
            return other
        if other.val == INFINITY:
            return self
        p = self.p
        absprec = min(self.absprec, other.absprec)
        v = min(self.val, other.val)
        if absprec <= v:
            return PAdicNumber.inexact_zero(p, absprec)
        modulus = p ** (absprec - v)
        s = (
            self.unit * p ** (self.val - v) + other.unit * p ** (other.val - v)
        ) % modulus
        if s == 0:
            return PAdicNumber.inexact_zero(p, absprec)
        shift = valuation_of_int(s, p)
        return PAdicNumber(p, v + shift, s // p**shift, absprec - v - shift)

    __radd__ = __add__

    def __neg__(self):
        if self.relprec == 0:
            return self
        return PAdicNumber(self.p, self.val, -self.unit, self.relprec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        if self.val == INFINITY or other.val == INFINITY:
            return PAdicNumber.zero(p)
        if self.relprec == 0 or other.relprec == 0:
            return PAdicNumber.inexact_zero(p, self.val + other.val)
        relprec = min(self.relprec, other.relprec)
        return PAdicNumber(p, self.val + other.val, self.unit * other.unit, relprec)

    __rmul__ = __mul__

    def inverse(self) -> "PAdicNumber":
        if self.relprec == 0:
            raise DivisionByApparentZero(f"cannot invert {self}")
        return PAdicNumber(
            self.p, -self.val, pow(self.unit, -1, self.p**self.relprec), self.relprec
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.relprec == 0:
            raise DivisionByApparentZero(f"division by {other}")
        if self.val == INFINITY:
            return self
        if self.relprec == 0:
            return PAdicNumber.inexact_zero(self.p, self.val - other.val)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            prec = self.relprec if self.relprec > 0 else DEFAULT_PRECISION
            return PAdicNumber(self.p, 0, 1, prec)
        if self.val == INFINITY:
            return self
        if self.relprec == 0:
            return PAdicNumber.inexact_zero(self.p, self.val * n)
        return PAdicNumber(
            self.p, self.val * n, pow(self.unit, n, self.p**self.relprec), self.relprec
        )

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PAdicNumber):
            return NotImplemented
        return (self.p, self.val, self.unit, self.relprec) == (
            other.p,
            other.val,
            other.unit,
            other.relprec,
        )

    def __hash__(self):
        return hash((self.p, self.val, self.unit, self.relprec))

    def congruent(self, other: "PAdicNumber", k: int) -> bool:
        """Whether x = y mod p^k; k may not exceed either absolute precision."""
        other = self._coerce(other)
        if k > min(self.absprec, other.absprec):
            raise PrecisionExhausted(
                f"congruence mod {self.p}^{k} exceeds available precision"
            )
        diff = self - other
        return diff.is_zero() or diff.val >= k

    # -- text format ------------------------------------------------------

    def digits(self) -> List[int]:
        """Base-p digits of the unit, least significant first, relprec of them."""
        out = []
        u = self.unit
        for _ in range(self.relprec):
            u, d = divmod(u, self.p)
            out.append(d)
        return out

    def render(self) -> str:
        p = self.p
        v = "inf" if self.val == INFINITY else str(self.val)
        if self.relprec == 0:
            body = "0"
        else:
            terms = []
            for i, d in enumerate(self.digits()):
                if i == 0:
                    terms.append(f"{d}")
                elif i == 1:
                    terms.append(f"{d}*{p}")
                else:
                    terms.append(f"{d}*{p}^{i}")
            body = " + ".join(terms)
        return f"{p}^{v} * ({body}) [{self.relprec}]"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PAdicNumber({self.render()!r})"

    def to_document(self) -> PAdicDocument:
        return PAdicDocument(
            p=self.p,
            val=None if self.val == INFINITY else self.val,
            digits=self.digits(),
            relprec=self.relprec,
        )

    @classmethod
    def from_document(cls, doc: PAdicDocument) -> "PAdicNumber":
        p = check_prime(doc.p)
        if doc.val is None:
            return cls.zero(p)
        if len(doc.digits) != doc.relprec:
            raise InvalidInput(
                f"expected {doc.relprec} digits, got {len(doc.digits)}"
            )
        unit = 0
        for d in reversed(doc.digits):
            if not 0 <= d < p:
                raise InvalidInput(f"digit {d} out of range for p={p}")
            unit = unit * p + d
        return cls(p, doc.val, unit, doc.relprec)


_TEXT_RE = re.compile(r"^\s*(\d+)\^(-?\d+|inf) \* \((.*)\) \[(\d+)\]\s*$")
_TERM_RE = re.compile(r"^(\d+)(?:\*(\d+)(?:\^(\d+))?)?$")


def parse(text: str) -> PAdicNumber:
    """Inverse of ``PAdicNumber.render``."""
    match = _TEXT_RE.match(text)
    if not match:
        raise InvalidInput(f"not a p-adic element: {text!r}")
    p = check_prime(int(match.group(1)))
    relprec = int(match.group(4))
    if match.group(2) == "inf":
        return PAdicNumber.zero(p)
    val = int(match.group(2))
    if relprec == 0:
        return PAdicNumber.inexact_zero(p, val)
    digits = [0] * relprec
    for term in match.group(3).split(" + "):
        term_match = _TERM_RE.match(term.strip())
        if not term_match:
            raise InvalidInput(f"bad digit term {term!r}")
        d = int(term_match.group(1))
        if term_match.group(2) is None:
            i = 0
        else:
            if int(term_match.group(2)) != p:
                raise InvalidInput(f"term {term!r} is not in base {p}")
            i = int(term_match.group(3)) if term_match.group(3) else 1
        if i >= relprec or not 0 <= d < p:
            raise InvalidInput(f"bad digit term {term!r}")
        digits[i] = d
    return PAdicNumber.from_document(
        PAdicDocument(p=p, val=val, digits=digits, relprec=relprec)
    )


# -- polynomials over Q_p ------------------------------------------------

Poly = Sequence[PAdicNumber]


def poly_eval(f: Poly, x: PAdicNumber) -> PAdicNumber:
    """Horner evaluation; coefficients low degree first."""
    acc = PAdicNumber.zero(x.p)
    for a in reversed(f):
        acc = acc * x + a
    return acc


def poly_derivative(f: Poly) -> List[PAdicNumber]:
    return [a * i for i, a in enumerate(f)][1:]


def hensel_lift(
    f: Poly, x0: PAdicNumber, max_iterations: Optional[int] = None
) -> PAdicNumber:
    """Newton-lift a simple approximate root of ``f`` to working precision.

    Raises:
        HenselHypothesisFailed: unless nu(f(x0)) > 2 nu(f'(x0)).
    """
    df = poly_derivative(f)
    fx = poly_eval(f, x0)
    if fx.is_zero():
        return x0
    dfx = poly_eval(df, x0)
    if dfx.is_zero():
        raise HenselHypothesisFailed("f'(x0) vanishes at precision")
    v_f, v_df = fx.val, dfx.valuation
    if not v_f > 2 * v_df:
        raise HenselHypothesisFailed(
            f"nu(f(x0)) = {v_f} is not greater than 2 nu(f'(x0)) = {2 * v_df}"
        )

    x = x0
    limit = max_iterations or (2 * int(math.log2(max(x0.absprec, 2))) + 8)
    for _ in range(limit):
        fx = poly_eval(f, x)
        if fx.is_zero():
            break
        x = x - fx / poly_eval(df, x)
    else:
        raise PrecisionExhausted("Newton iteration did not settle")

    if not (x - x0).is_zero() and (x - x0).val < v_f - v_df:
        raise HenselHypothesisFailed("lifted root left the residue disc of x0")
    return x


@lru_cache(maxsize=4096)
def teichmuller(r: int, p: int, precision: int = DEFAULT_PRECISION) -> PAdicNumber:
    """The (p-1)-th root of unity congruent to ``r`` mod p."""
    check_prime(p)
    r %= p
    if r == 0:
        raise InvalidInput("the Teichmuller lift of 0 is 0, not a root of unity")
    f = [PAdicNumber.from_int(-1, p, precision)]
    f += [PAdicNumber.zero(p)] * (p - 2)
    f += [PAdicNumber.one(p, precision)]
    return hensel_lift(f, PAdicNumber.from_int(r, p, precision))


def teichmuller_int(r: int, p: int, precision: int = DEFAULT_PRECISION) -> int:
    """Integer representative of the Teichmuller lift mod p^precision; 0 for r = 0."""
    if r % p == 0:
        return 0
    return teichmuller(r % p, p, precision).lift() % p**precision


def nth_root(a: PAdicNumber, n: int) -> PAdicNumber:
    """n-th root of a unit with p not dividing n, congruent to a root mod p."""
    p = a.p
    if n % p == 0:
        raise InvalidInput("only roots of order prime to p are Hensel-liftable")
    if a.valuation != 0:
        raise InvalidInput(f"{a} is not a unit")
    r0 = next((r for r in range(1, p) if pow(r, n, p) == a.residue()), None)
    if r0 is None:
        raise HenselHypothesisFailed(f"{a} has no {n}-th root mod {p}")
    prec = a.absprec
    f = [-a] + [PAdicNumber.zero(p)] * (n - 1) + [PAdicNumber.one(p, prec)]
    return hensel_lift(f, PAdicNumber.from_int(r0, p, prec))


def sqrt(a: PAdicNumber) -> PAdicNumber:
    """Square root of a unit that is a square mod p."""
    return nth_root(a, 2)
