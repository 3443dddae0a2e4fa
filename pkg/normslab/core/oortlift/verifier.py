"""End-to-end verification of the p-cyclic lifting on the uniformizer net."""

import logging
from typing import Dict, List, Optional, Sequence

from normslab.core.errors import InvalidInput, NormsLabError, PrecisionExhausted
from normslab.core.logging import LogLevel, LogManager, track_call
from normslab.core.padics import INFINITY
from normslab.core.oortlift.crosscheck import cross_check as kummer_cross_check
from normslab.core.oortlift.kummer import (
    KummerCoverSpec,
    composite_pthpower_check,
    eisenstein_check,
    generic_different,
    kummer_reduce,
    pthpower_check,
    specialize_unit,
    threshold_level,
)
from normslab.models.reports import CompositeRecord, LevelRecord, OortReport

logger = logging.getLogger(__name__)

CROSS_CHECK_PRIMES = (3,)
CROSS_CHECK_MAX_LEVEL = 2


def _finite(value) -> Optional[int]:
    return None if value == INFINITY else value


def _level_record(
    spec: KummerCoverSpec, m: int, m_0: int, cross_check: bool
) -> LevelRecord:
    record = LevelRecord(m=m, m_0=m_0)
    try:
        u = specialize_unit(spec, m)
        record.unit_index = u.principal_unit_index().value
        reduction = kummer_reduce(u)
        record.conductor = reduction.conductor
        record.d_m = reduction.conductor * (spec.p - 1)
        record.eisenstein_ok = eisenstein_check(spec, m)
        if cross_check and spec.p in CROSS_CHECK_PRIMES and m <= CROSS_CHECK_MAX_LEVEL:
            record.cross_check = kummer_cross_check(reduction.unit, record.d_m)
    except PrecisionExhausted:
        raise
    except NormsLabError as e:
        record.error = f"{type(e).__name__}: {e}"
    return record


def _first_failure(
    records: List[LevelRecord], composite: List[CompositeRecord], m_0: int, d_eta: int
) -> Optional[str]:
    for record in records:
        if record.m < m_0:
            continue
        m = record.m
        if record.error:
            return f"level {m}: {record.error}"
        if record.d_m != d_eta:
            return f"level {m}: d_m = {record.d_m} differs from d_eta = {d_eta}"
        if not record.eisenstein_ok:
            return f"level {m}: fiber equation is not Eisenstein"
        if record.pthpower_ok is False:
            return (
                f"levels {m}, {m + 1}: p-th power index {record.pthpower_index} "
                f"does not exceed {record.pthpower_bound}"
            )
        if record.cross_check is not None and not record.cross_check.agrees:
            return (
                f"level {m}: explicit extension has different "
                f"{record.cross_check.different_degree}, expected {record.d_m}"
            )
    for item in composite:
        if item.m >= m_0 and not item.passed:
            return f"levels {item.m}, {item.m + 2}: composite p-th power check fails"
    return None


@track_call(level=LogLevel.INFO, source="oort_verify")
def verify(
    spec: KummerCoverSpec,
    levels: Optional[Sequence[int]] = None,
    extra: int = 2,
    cross_check: bool = False,
    max_level: int = 5,
    margin: int = 5,
) -> OortReport:
    """Run every check on the levels given, by default ``m_0 .. m_0 + extra``.

    The default range stops at ``max_level``; the report's ``level_cap`` is
    set when that cut something off. Failures of checks are recorded in the
    report; only precision exhaustion raises.
    """
    generic = generic_different(spec)
    m_0 = threshold_level(spec, max_level)
    level_cap = None
    if levels is None:
        if m_0 + extra > max_level:
            level_cap = max_level
            LogManager.get_instance().info(
                f"levels {m_0}..{m_0 + extra} capped at the maximum level {max_level}",
                source="oort_verify",
            )
        levels = range(m_0, min(m_0 + extra, max_level) + 1)
    levels = sorted(set(levels))
    if not levels:
        raise InvalidInput("no levels to verify")
    if levels[0] < 1 or levels[-1] > max_level:
        raise InvalidInput(f"levels must lie in 1..{max_level}, got {levels}")

    logger.debug("verifying p=%s c=%s at levels %s (m_0=%s)", spec.p, spec.c, levels, m_0)
    records: Dict[int, LevelRecord] = {
        m: _level_record(spec, m, m_0, cross_check) for m in levels
    }

    for m in levels:
        if m + 1 in records and records[m].error is None and records[m + 1].error is None:
            check = pthpower_check(spec, m, margin=margin)
            records[m].pthpower_ok = check.passed
            records[m].pthpower_index = _finite(check.index.value)
            records[m].pthpower_bound = check.bound

    composite: List[CompositeRecord] = []
    for m in levels:
        if m + 2 in records and records[m].error is None and records[m + 2].error is None:
            check = composite_pthpower_check(spec, m, margin=margin)
            composite.append(
                CompositeRecord(
                    m=m, index=_finite(check.index.value), bound=check.bound, passed=check.passed
                )
            )

    ordered = [records[m] for m in levels]
    conductors = {r.conductor for r in ordered if r.m >= m_0}
    conductor_stable = len(conductors) == 1 and None not in conductors
    first_failure = _first_failure(ordered, composite, m_0, generic.d_eta)
    if first_failure:
        LogManager.get_instance().warning(
            f"verification failed: {first_failure}", source="oort_verify"
        )

    return OortReport(
        p=spec.p,
        c=spec.c,
        W=spec.W.render(),
        precision=spec.prec,
        d_eta=generic.d_eta,
        branch_count=generic.branch_count,
        m_0=m_0,
        levels=ordered,
        composite=composite,
        conductor_stable=conductor_stable,
        verdict="fail" if first_failure else "pass",
        first_failure=first_failure,
        level_cap=level_cap,
    )
