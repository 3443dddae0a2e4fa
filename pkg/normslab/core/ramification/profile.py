"""Ramification filtrations of steps in the cyclotomic tower.

Conventions: ``i(sigma) = min_x nu(sigma(x) - x) - 1`` (so ``G_0`` is the
inertia group), ``G_t = {sigma : i(sigma) >= t}`` with ``G_t = G_ceil(t)`` for
real t, ``G^s = G_psi(s)``.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Hashable, Iterable, List, Set, Tuple

from normslab.core.cyclotomic import (
    GaloisElement,
    lam,
    minimal_polynomial_of_generator,
    poly_derivative,
    poly_eval,
    tower_level,
)
from normslab.core.errors import HasseArfViolation, InvalidInput, LevelMismatch, TrivialElement
from normslab.core.logging import LogLevel, track_call
from normslab.core.padics import DEFAULT_PRECISION
from normslab.core.ramification.piecewise import PiecewiseLinearFn
from normslab.models.reports import RamificationReport


@dataclass(frozen=True)
class RamificationProfile:
    """Filtration data of a finite Galois extension with i-table ``i_table``.

    ``label`` names the extension, e.g. ``(p, base, top)`` for L^top | L^base.
    """

    label: Tuple
    order: int
    i_table: Dict[Hashable, int] = field(hash=False)
    lower_jumps: Tuple[int, ...]
    upper_jumps: Tuple[Fraction, ...]
    phi: PiecewiseLinearFn
    psi: PiecewiseLinearFn
    conductor: int
    different_degree: int

    @property
    def hasse_arf(self) -> bool:
        return all(u.denominator == 1 for u in self.upper_jumps)

    def lower_group(self, t) -> Set[Hashable]:
        """Keys of G_t (the identity is the key ``None``)."""
        t = math.ceil(Fraction(t))
        return {None} | {key for key, i in self.i_table.items() if i >= t}

    def lower_order(self, t) -> int:
        return len(self.lower_group(t))

    def upper_group(self, s) -> Set[Hashable]:
        return self.lower_group(self.psi(s))

    def to_report(self) -> RamificationReport:
        return RamificationReport(
            extension=list(self.label),
            order=self.order,
            i_table={str(k): v for k, v in sorted(self.i_table.items())},
            lower_jumps=list(self.lower_jumps),
            upper_jumps=[str(u) for u in self.upper_jumps],
            phi_breakpoints=[(str(x), str(y)) for x, y in self.phi.breakpoints],
            phi_final_slope=str(self.phi.final_slope),
            conductor=self.conductor,
            different_degree=self.different_degree,
            hasse_arf=self.hasse_arf,
        )


def profile_from_i_table(
    label: Tuple, order: int, i_table: Dict[Hashable, int]
) -> RamificationProfile:
    """Build the filtration, Herbrand pair, jumps and different from an i-table.

    ``i_table`` maps every non-identity element of a totally ramified group of
    the given order to its i-value.
    """
    if len(i_table) != order - 1:
        raise InvalidInput(f"i-table has {len(i_table)} entries for a group of order {order}")
    if any(i < 0 for i in i_table.values()):
        raise InvalidInput("i-values of a totally ramified extension are >= 0")
    jumps = sorted(set(i_table.values()))

    def size(t: int) -> int:
        return 1 + sum(1 for i in i_table.values() if i >= t)

    breaks: List[int] = [0]
    slopes: List[Fraction] = [Fraction(1)]
    for j in jumps:
        if j > 0:
            breaks.append(j)
            slopes.append(Fraction(size(j), order))
    slopes.append(Fraction(1, order))
    phi = PiecewiseLinearFn.from_slopes((-1, -1), breaks, slopes)
    upper = tuple(phi(j) for j in jumps)
    return RamificationProfile(
        label=tuple(label),
        order=order,
        i_table=dict(i_table),
        lower_jumps=tuple(jumps),
        upper_jumps=upper,
        phi=phi,
        psi=phi.inverse(),
        conductor=int(math.floor(upper[-1])) + 1 if upper else 0,
        different_degree=sum(i + 1 for i in i_table.values()),
    )


def i_value(sigma: GaloisElement, base: int, prec: int = DEFAULT_PRECISION) -> int:
    """i of sigma in Gal(L^top | L^base), evaluated on the generator lambda_top.

    Raises:
        TrivialElement: For the identity.
    """
    top = sigma.level.m
    if not 0 <= base < top:
        raise LevelMismatch(f"need 0 <= base < top, got base {base}, top {top}")
    if not sigma.fixes_level(base):
        raise InvalidInput(f"sigma_{sigma.a} does not fix L^{base}")
    if sigma.is_identity():
        raise TrivialElement("i of the identity is +infinity")
    generator = lam(sigma.level.p, top, prec)
    return (sigma.apply(generator) - generator).valuation - 1


@lru_cache(maxsize=64)
def _filtration(p: int, base: int, top: int, prec: int) -> RamificationProfile:
    level = tower_level(p, top)
    group = level.galois_group(base)
    table = {s.a: i_value(s, base, prec) for s in group if not s.is_identity()}
    profile = profile_from_i_table((p, base, top), len(group), table)
    if not profile.hasse_arf:
        raise HasseArfViolation(
            f"non-integral upper jump {profile.upper_jumps} in an abelian extension"
        )
    return profile


@track_call(level=LogLevel.DEBUG, source="filtration")
def filtration(
    p: int, base: int, top: int, prec: int = DEFAULT_PRECISION
) -> RamificationProfile:
    """Profile of L^top | L^base; base 0 is Q_p."""
    if not 0 <= base < top:
        raise LevelMismatch(f"need 0 <= base < top, got {base}, {top}")
    return _filtration(p, base, top, prec)


def different_from_minpoly(
    p: int, base: int, top: int, prec: int = DEFAULT_PRECISION
) -> int:
    """nu_top(f'(lambda_top)) for f the minimal polynomial of lambda_top over L^base."""
    f = minimal_polynomial_of_generator(p, base, top, prec)
    return poly_eval(poly_derivative(f), lam(p, top, prec)).valuation


def quotient_upper_group(profile: RamificationProfile, k: int, s) -> Set[int]:
    """Image of G^s in Gal(L^k | L^base), as residues mod p^k."""
    p, base, top = profile.label
    if not base < k < top:
        raise LevelMismatch(f"quotient level {k} must lie strictly between {base} and {top}")
    modulus = p**k
    return {1 if key is None else key % modulus for key in profile.upper_group(s)}


def quotient_compatible(
    profile: RamificationProfile, k: int, grid: Iterable
) -> bool:
    """Whether (G/H)^s = G^s H / H at every s in ``grid``, H = Gal(L^top | L^k)."""
    p, base, _ = profile.label
    below = filtration(p, base, k)
    for s in grid:
        direct = {1 if key is None else key for key in below.upper_group(s)}
        if quotient_upper_group(profile, k, s) != direct:
            return False
    return True


def apf_first_jump(p: int, m: int, prec: int = DEFAULT_PRECISION) -> Fraction:
    """i(L | L^m): the first upper jump of L^(m+1) | L^m."""
    if m < 1:
        raise LevelMismatch("i(L|L^m) is taken for m >= 1")
    return filtration(p, m, m + 1, prec).upper_jumps[0]


def r_of_level(p: int, m: int, prec: int = DEFAULT_PRECISION) -> int:
    """r(m) = ceil((p - 1)/p * i(L | L^m))."""
    return math.ceil(Fraction(p - 1, p) * apf_first_jump(p, m, prec))


def herbrand_grid(profile: RamificationProfile, points: int = 100) -> List[Fraction]:
    """``points`` rationals spread over [-1, 2 * last breakpoint + 2]."""
    last = max(x for x, _ in profile.phi.breakpoints)
    right = 2 * last + 2
    step = (right + 1) / (points - 1)
    return [Fraction(-1) + k * step for k in range(points)]
