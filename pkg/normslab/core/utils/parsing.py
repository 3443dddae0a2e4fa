"""Parsers for the short text formats accepted on the command line.

Polynomials are written in one variable (``Z`` or ``z``) with integer
coefficients, e.g. ``"1 + Z^4"``, ``"3*Z + Z^2 - 2Z^5"`` or ``"z + z^2"``.
Level ranges are ``auto``, ``auto+k`` or ``a..b``.
"""

import re
from typing import Dict, NamedTuple, Optional

from normslab.core.errors import InvalidInput

_TERM_RE = re.compile(
    r"^(?P<coef>\d+)?\s*\*?\s*(?P<var>[Zz])?(?:\^(?P<exp>\d+))?$"
)


def parse_polynomial(text: str) -> Dict[int, int]:
    """Parse a polynomial into ``{exponent: coefficient}``.

    Raises:
        InvalidInput: If a term is malformed.
    """
    compact = text.strip()
    if not compact:
        raise InvalidInput("empty polynomial")
    compact = re.sub(r"\s+", "", compact)
    if compact[0] not in "+-":
        compact = "+" + compact

    terms: Dict[int, int] = {}
    for sign, body in re.findall(r"([+-])([^+-]*)", compact):
        match = _TERM_RE.match(body)
        if not body or not match or (match.group("coef") is None and match.group("var") is None):
            raise InvalidInput(f"bad polynomial term {sign}{body!r} in {text!r}")
        if match.group("var") is None and match.group("exp") is not None:
            raise InvalidInput(f"exponent without variable in {text!r}")
        coef = int(match.group("coef")) if match.group("coef") else 1
        if match.group("var") is None:
            exp = 0
        else:
            exp = int(match.group("exp")) if match.group("exp") else 1
        terms[exp] = terms.get(exp, 0) + (coef if sign == "+" else -coef)
    return {k: v for k, v in terms.items() if v}


def format_polynomial(terms: Dict[int, int], var: str = "Z") -> str:
    """Inverse of ``parse_polynomial`` up to term order."""
    if not terms:
        return "0"
    parts = []
    for exp in sorted(terms):
        coef = terms[exp]
        if exp == 0:
            body = str(abs(coef))
        else:
            power = var if exp == 1 else f"{var}^{exp}"
            body = power if abs(coef) == 1 else f"{abs(coef)}*{power}"
        sign = "-" if coef < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class LevelRange(NamedTuple):
    """A parsed ``--levels`` value; ``start`` is None for ``auto``."""

    start: Optional[int]
    extra: int
    stop: Optional[int]

    def resolve(self, auto_start: int) -> range:
        if self.start is None:
            return range(auto_start, auto_start + self.extra + 1)
        return range(self.start, self.stop + 1)


def parse_levels(text: str) -> LevelRange:
    """Parse ``auto``, ``auto+k`` or ``a..b``."""
    value = text.strip().lower()
    if value == "auto":
        return LevelRange(None, 0, None)
    match = re.fullmatch(r"auto\+(\d+)", value)
    if match:
        return LevelRange(None, int(match.group(1)), None)
    match = re.fullmatch(r"(\d+)\.\.(\d+)", value)
    if match:
        start, stop = int(match.group(1)), int(match.group(2))
        if start < 1 or stop < start:
            raise InvalidInput(f"bad level range {text!r}")
        return LevelRange(start, 0, stop)
    raise InvalidInput(f"levels must be auto, auto+k or a..b, got {text!r}")
