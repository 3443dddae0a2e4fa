"""Field-of-norms arithmetic at finite depth.

An element of the field of norms of the cyclotomic tower is a sequence
``(alpha_m)`` with ``N(alpha_{m+1}) = alpha_m``. Here sequences only exist on
a finite range ``[m_lo, m_hi]``; the limit addition is evaluated at an explicit
probe depth ``M`` and reports how much of it is certified.

Congruence windows are ``r(m) = ceil((p - 1)/p * i(L | L^m))``, in units of
``nu_m``.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from normslab.core.cyclotomic import COERCION_MARGIN, CycloElement, lam, tower_level
from normslab.core.errors import (
    CoercionFailure,
    CompatibilityFailure,
    InvalidInput,
    LevelMismatch,
    PrecisionExhausted,
    RangeMismatch,
)
from normslab.core.logging import LogLevel, LogManager, track_call
from normslab.core.padics import DEFAULT_PRECISION, check_prime, teichmuller_int
from normslab.core.ramification import r_of_level
from normslab.models.documents import SequenceDocument
from normslab.models.reports import (
    CompatibilityReport,
    CongruenceReport,
    FonAddReport,
    LevelAgreement,
    PairWitness,
    StabilityReport,
)


class NormSequence:
    """Components ``alpha_m`` for ``m_lo <= m <= m_hi``, all at the same prime.

    With ``verify`` the norm relations are checked on construction and the
    per-pair witnesses recorded; a failure raises CompatibilityFailure.
    """

    __slots__ = ("p", "m_lo", "components", "witnesses")

    def __init__(
        self,
        p: int,
        m_lo: int,
        components: Sequence[CycloElement],
        witnesses: Optional[Sequence[Optional[int]]] = None,
        margin: int = COERCION_MARGIN,
        verify: bool = True,
    ):
        check_prime(p)
        if m_lo < 1:
            raise RangeMismatch(f"sequences start at level 1 or above, got {m_lo}")
        if not components:
            raise RangeMismatch("a sequence needs at least one component")
        for k, x in enumerate(components):
            if x.level != tower_level(p, m_lo + k):
                raise LevelMismatch(
                    f"component {k} lives at {x.level}, expected level {m_lo + k}"
                )
        self.p = p
        self.m_lo = m_lo
        self.components: Tuple[CycloElement, ...] = tuple(components)
        self.witnesses: Tuple[Optional[int], ...] = tuple(witnesses or ())
        if verify:
            report = check_compatibility(self, margin=margin)
            if not report.passed:
                raise CompatibilityFailure(
                    f"norm relation fails between levels {report.first_failure} "
                    f"and {report.first_failure + 1}"
                    if report.first_failure is not None
                    else "components have different valuations"
                )
            self.witnesses = tuple(pair.witness for pair in report.pairs)

    @property
    def m_hi(self) -> int:
        return self.m_lo + len(self.components) - 1

    @property
    def depth_range(self) -> Tuple[int, int]:
        return self.m_lo, self.m_hi

    def __getitem__(self, m: int) -> CycloElement:
        if not self.m_lo <= m <= self.m_hi:
            raise RangeMismatch(f"level {m} outside {self.depth_range}")
        return self.components[m - self.m_lo]

    def levels(self) -> range:
        return range(self.m_lo, self.m_hi + 1)

    def restrict(self, lo: int, hi: int) -> "NormSequence":
        if not self.m_lo <= lo <= hi <= self.m_hi:
            raise RangeMismatch(f"[{lo}, {hi}] is not inside {self.depth_range}")
        comps = [self[m] for m in range(lo, hi + 1)]
        witnesses = self.witnesses[lo - self.m_lo : hi - self.m_lo]
        return NormSequence(self.p, lo, comps, witnesses, verify=False)

    @property
    def valuation(self):
        """The common nu_m of the components."""
        return self.components[0].valuation

    def __eq__(self, other):
        if not isinstance(other, NormSequence):
            return NotImplemented
        return (self.p, self.m_lo, self.components) == (
            other.p,
            other.m_lo,
            other.components,
        )

    __hash__ = None

    def __repr__(self):
        return f"NormSequence(p={self.p}, range={self.depth_range})"

    def to_document(self) -> SequenceDocument:
        return SequenceDocument(
            p=self.p,
            depth_range=self.depth_range,
            components=[x.to_document() for x in self.components],
            witnesses=list(self.witnesses),
        )

    @classmethod
    def from_document(
        cls, doc: SequenceDocument, verify: bool = False, margin: int = COERCION_MARGIN
    ) -> "NormSequence":
        lo, hi = doc.depth_range
        if hi - lo + 1 != len(doc.components):
            raise InvalidInput(
                f"range {doc.depth_range} does not match {len(doc.components)} components"
            )
        comps = [CycloElement.from_document(c) for c in doc.components]
        return cls(doc.p, lo, comps, doc.witnesses, verify=verify, margin=margin)


# -- checks --------------------------------------------------------------


def _certified_norm(x: CycloElement, margin: int) -> CycloElement:
    """N(x) one level down, refusing results with fewer than ``margin`` digits."""
    try:
        return x.norm_down(margin)
    except CoercionFailure as error:
        raise PrecisionExhausted(
            f"norm of the level {x.m} component cannot be coerced to level {x.m - 1}: {error}"
        ) from error


def _pair_witness(
    upper: CycloElement, lower: CycloElement, strictness, margin: int
) -> PairWitness:
    m = lower.m
    diff = _certified_norm(upper, margin) - lower
    if diff.is_exact_zero():
        return PairWitness(level=m, witness=None, exact=True, passed=True)
    if diff.is_zero():
        bound = diff.valuation_lower_bound()
        return PairWitness(level=m, witness=bound, exact=False, passed=True)
    v = diff.valuation
    passed = strictness is not None and v >= strictness
    return PairWitness(level=m, witness=v, exact=True, passed=passed)


def _safe_valuation(x: CycloElement) -> Optional[int]:
    if x.is_zero():
        return None
    return x.valuation


def check_compatibility(
    alpha: NormSequence,
    strictness: Optional[int] = None,
    margin: int = COERCION_MARGIN,
) -> CompatibilityReport:
    """Witness ``N(alpha_{m+1}) - alpha_m`` for each adjacent pair.

    A pair passes when the difference vanishes at the tracked precision, or,
    given ``strictness``, when its nu_m is at least that. The witness is the
    certified nu_m of the difference (None for an exact zero). A norm with
    fewer than ``margin`` relative digits raises PrecisionExhausted.
    """
    pairs = [
        _pair_witness(alpha[m + 1], alpha[m], strictness, margin)
        for m in range(alpha.m_lo, alpha.m_hi)
    ]
    valuations = [_safe_valuation(x) for x in alpha.components]
    known = {v for v in valuations if v is not None}
    first = next((pair.level for pair in pairs if not pair.passed), None)
    passed = first is None and len(known) <= 1
    return CompatibilityReport(
        p=alpha.p,
        depth_range=alpha.depth_range,
        passed=passed,
        pairs=pairs,
        valuations=valuations,
        common_valuation=known.pop() if len(known) == 1 else None,
        first_failure=first,
    )


def _agreement(x: CycloElement, y: CycloElement, window: int) -> LevelAgreement:
    diff = x - y
    if diff.is_exact_zero():
        return LevelAgreement(
            level=x.m, agreement=None, exact=True, window=window, certified=True
        )
    if diff.is_zero():
        bound = diff.valuation_lower_bound()
        if bound < window:
            raise PrecisionExhausted(
                f"agreement at level {x.m} known only to {bound}, window is {window}"
            )
        return LevelAgreement(
            level=x.m, agreement=bound, exact=False, window=window, certified=True
        )
    v = diff.valuation
    return LevelAgreement(
        level=x.m, agreement=v, exact=True, window=window, certified=v >= window
    )


# -- constructors --------------------------------------------------------


def uniformizer_sequence(
    p: int, m_lo: int, m_hi: int, prec: int = DEFAULT_PRECISION
) -> NormSequence:
    """The uniformizer pi = (lambda_m)."""
    if not 1 <= m_lo <= m_hi:
        raise RangeMismatch(f"need 1 <= m_lo <= m_hi, got [{m_lo}, {m_hi}]")
    return NormSequence(p, m_lo, [lam(p, m, prec) for m in range(m_lo, m_hi + 1)])


def teichmuller_embed(
    p: int, r: int, m_lo: int, m_hi: int, prec: int = DEFAULT_PRECISION
) -> NormSequence:
    """The constant sequence tau(r); residue 0 gives the zero sequence."""
    if not 1 <= m_lo <= m_hi:
        raise RangeMismatch(f"need 1 <= m_lo <= m_hi, got [{m_lo}, {m_hi}]")
    check_prime(p)
    tau = teichmuller_int(r, p, prec)
    comps = []
    for m in range(m_lo, m_hi + 1):
        level = tower_level(p, m)
        if tau == 0:
            comps.append(CycloElement.zero(level))
        else:
            comps.append(CycloElement.from_rational(level, tau, prec))
    return NormSequence(p, m_lo, comps)


def _common_range(alpha: NormSequence, beta: NormSequence) -> Tuple[int, int]:
    if alpha.p != beta.p:
        raise InvalidInput(f"mixing p={alpha.p} and p={beta.p}")
    lo = max(alpha.m_lo, beta.m_lo)
    hi = min(alpha.m_hi, beta.m_hi)
    if lo > hi:
        raise RangeMismatch(
            f"ranges {alpha.depth_range} and {beta.depth_range} do not overlap"
        )
    return lo, hi


def fon_mul(alpha: NormSequence, beta: NormSequence) -> NormSequence:
    """Componentwise product on the common range."""
    lo, hi = _common_range(alpha, beta)
    comps = [alpha[m] * beta[m] for m in range(lo, hi + 1)]
    return NormSequence(alpha.p, lo, comps)


def _norm_cascade(top_value: CycloElement, lo: int, margin: int) -> List[CycloElement]:
    """``[N(x) at lo, ..., x]``."""
    out = [top_value]
    while out[-1].m > lo:
        out.append(_certified_norm(out[-1], margin))
    return out[::-1]


@dataclass(frozen=True)
class LimitSum:
    """A limit sum with its certificates."""

    sequence: NormSequence
    stability: StabilityReport
    congruence: CongruenceReport

    def to_report(self) -> FonAddReport:
        return FonAddReport(
            result=self.sequence.to_document(),
            stability=self.stability,
            congruence=self.congruence,
        )


def _sum_at_depth(
    alpha: NormSequence, beta: NormSequence, lo: int, M: int, top: int, margin: int
) -> NormSequence:
    comps = _norm_cascade(alpha[M] + beta[M], lo, margin)
    return NormSequence(alpha.p, lo, comps[: top - lo + 1], verify=False)


@track_call(level=LogLevel.DEBUG, source="fon_add")
def fon_add(
    alpha: NormSequence,
    beta: NormSequence,
    probe_depth: int,
    top: Optional[int] = None,
    margin: int = COERCION_MARGIN,
) -> LimitSum:
    """``gamma_m = N_{L^M | L^m}(alpha_M + beta_M)`` for m in [lo, top].

    ``top`` defaults to the probe depth. The sum is also formed at depth M - 1
    and the two are compared level by level against r(m); the congruence
    ``gamma_m = alpha_m + beta_m mod m^{r(m)}`` is checked on every level.
    """
    M = probe_depth
    lo, hi = _common_range(alpha, beta)
    if not lo <= M <= hi:
        raise RangeMismatch(f"probe depth {M} outside the common range [{lo}, {hi}]")
    top = M if top is None else top
    if not lo <= top <= M:
        raise RangeMismatch(f"result depth {top} must lie in [{lo}, {M}]")

    gamma = NormSequence(
        alpha.p, lo, _sum_at_depth(alpha, beta, lo, M, top, margin).components, margin=margin
    )
    p = alpha.p

    windows = {m: r_of_level(p, m) for m in range(lo, top + 1)}
    stable_levels = []
    if M - 1 >= lo:
        shallow_top = min(top, M - 1)
        shallow = _sum_at_depth(alpha, beta, lo, M - 1, shallow_top, margin)
        stable_levels = [
            _agreement(gamma[m], shallow[m], windows[m])
            for m in range(lo, shallow_top + 1)
        ]
    stability = StabilityReport(
        probe_depths=(M - 1, M),
        levels=stable_levels,
        stable=all(a.certified for a in stable_levels),
    )
    congruent = [
        _agreement(gamma[m], alpha[m] + beta[m], windows[m]) for m in range(lo, top + 1)
    ]
    congruence = CongruenceReport(
        kind="approx_apf", levels=congruent, passed=all(a.certified for a in congruent)
    )
    if not stability.stable:
        LogManager.get_instance().warning(
            f"limit sum moved by less than r(m) between depths {M - 1} and {M}",
            source="fon_add",
        )
    return LimitSum(gamma, stability, congruence)


def _uniformizer_power(p: int, i: int, lo: int, hi: int, prec: int) -> NormSequence:
    comps = [lam(p, m, prec) ** i for m in range(lo, hi + 1)]
    return NormSequence(p, lo, comps, verify=False)


def evaluate_at_uniformizer(
    g: Dict[int, int], p: int, m: int, prec: int = DEFAULT_PRECISION
) -> CycloElement:
    """``sum tau(a_i) lambda_m^i``."""
    level = tower_level(p, m)
    pi = lam(p, m, prec)
    acc = CycloElement.zero(level)
    top = max(g, default=-1)
    for i in range(top, -1, -1):
        acc = acc * pi
        a = g.get(i, 0) % p
        if a:
            acc = acc + CycloElement.from_rational(level, teichmuller_int(a, p, prec), prec)
    return acc


def special_congruence(
    sequence: NormSequence, g: Dict[int, int], prec: int = DEFAULT_PRECISION
) -> CongruenceReport:
    """``alpha_m = g(lambda_m) mod m^{r(m)}`` at every level of the sequence."""
    levels = [
        _agreement(
            sequence[m],
            evaluate_at_uniformizer(g, sequence.p, m, prec),
            r_of_level(sequence.p, m),
        )
        for m in sequence.levels()
    ]
    return CongruenceReport(
        kind="special_congruence", levels=levels, passed=all(a.certified for a in levels)
    )


def _normalize_series(g: Dict[int, int], p: int) -> Dict[int, int]:
    out = {}
    for i, a in g.items():
        if i < 0:
            raise InvalidInput(f"negative exponent {i} in a series over F_p")
        if a % p:
            out[i] = a % p
    return out


@track_call(level=LogLevel.DEBUG, source="series_to_sequence")
def series_to_sequence(
    g: Dict[int, int],
    p: int,
    m_lo: int,
    m_hi: int,
    probe_depth: int,
    prec: int = DEFAULT_PRECISION,
) -> NormSequence:
    """The element g(pi) for a polynomial g over F_p given as ``{exponent: coeff}``.

    The terms ``tau(a_i) pi^i`` are summed by a chain of limit additions at the
    probe depth; the result on ``[m_lo, m_hi]`` is checked against
    ``g(lambda_m)`` modulo ``m^{r(m)}``.

    Raises:
        CompatibilityFailure: If that congruence fails at some level.
    """
    check_prime(p)
    if not 1 <= m_lo <= m_hi <= probe_depth:
        raise RangeMismatch(
            f"need 1 <= m_lo <= m_hi <= probe depth, got [{m_lo}, {m_hi}], M={probe_depth}"
        )
    terms = _normalize_series(g, p)
    M = probe_depth
    acc = teichmuller_embed(p, 0, m_lo, M, prec)
    for i in sorted(terms):
        term = fon_mul(
            teichmuller_embed(p, terms[i], m_lo, M, prec),
            _uniformizer_power(p, i, m_lo, M, prec),
        )
        acc = fon_add(acc, term, M).sequence
    result = acc.restrict(m_lo, m_hi)

    report = special_congruence(result, terms, prec)
    if not report.passed:
        bad = next(a.level for a in report.levels if not a.certified)
        raise CompatibilityFailure(f"g(pi) is not congruent to g(lambda_{bad}) mod r({bad})")
    return result


def teichmuller_digits(x: CycloElement, count: int) -> Dict[int, int]:
    """Residues d_i with ``x = sum tau(d_i) lambda^i mod lambda^count``.

    Raises:
        InvalidInput: If x is not integral or lives on Q_p.
        PrecisionExhausted: If x is not known to lambda^count.
    """
    if x.m < 1:
        raise LevelMismatch("digits along lambda_m need m >= 1")
    p, m = x.p, x.m
    if x.valuation_lower_bound() < 0:
        raise InvalidInput("only integral elements have Teichmuller digits")
    if not x.is_exact_zero() and x.level.degree * x.absprec < count:
        raise PrecisionExhausted(f"{x!r} is not known modulo lambda^{count}")
    prec = x.absprec if not x.is_exact_zero() else DEFAULT_PRECISION
    pi = lam(p, m, prec)
    digits: Dict[int, int] = {}
    rest = x
    while not rest.is_zero():
        t, r = rest.leading_term()
        if t >= count:
            break
        digits[t] = r
        tau = CycloElement.from_rational(x.level, teichmuller_int(r, p, prec), prec)
        rest = rest - tau * pi**t
    return digits


def approximate_lift(
    x: CycloElement, m_lo: int, m_hi: int, probe_depth: int
) -> Tuple[NormSequence, CongruenceReport]:
    """A sequence whose component at x's level agrees with x modulo m^{r(m)}."""
    m = x.m
    if not m_lo <= m <= m_hi:
        raise RangeMismatch(f"level {m} of x is outside [{m_lo}, {m_hi}]")
    window = r_of_level(x.p, m)
    digits = teichmuller_digits(x, window)
    prec = x.absprec if not x.is_exact_zero() else DEFAULT_PRECISION
    lifted = series_to_sequence(digits, x.p, m_lo, m_hi, probe_depth, prec)
    agreement = _agreement(lifted[m], x, window)
    report = CongruenceReport(
        kind="approximate_lift", levels=[agreement], passed=agreement.certified
    )
    return lifted, report


__all__ = [
    "LimitSum",
    "NormSequence",
    "approximate_lift",
    "check_compatibility",
    "evaluate_at_uniformizer",
    "fon_add",
    "fon_mul",
    "series_to_sequence",
    "special_congruence",
    "teichmuller_digits",
    "teichmuller_embed",
    "uniformizer_sequence",
]
