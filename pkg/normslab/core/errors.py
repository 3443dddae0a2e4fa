"""Exception hierarchy for norms-lab.

Every error carries the CLI exit code it maps to. Library callers can also
catch them by the builtin they subclass.
"""

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_PRECISION_EXHAUSTED = 3


class NormsLabError(Exception):
    """Base class for all norms-lab errors."""

    exit_code = EXIT_INPUT_ERROR


class InvalidInput(NormsLabError, ValueError):
    """Malformed document, bad option, or a type invariant violated at construction."""


class LevelMismatch(NormsLabError, ValueError):
    """Operands live at different tower levels, or a level moved the wrong way."""


class RangeMismatch(NormsLabError, ValueError):
    """Norm sequences whose depth ranges do not overlap as required."""


class LevelTooSmall(NormsLabError, ValueError):
    """The requested level is below the threshold an estimate needs."""


class OutsideDisc(NormsLabError, ValueError):
    """A specialization point of non-positive valuation."""


class TrivialElement(NormsLabError, ValueError):
    """i_L of the identity is +infinity, not an integer."""


class WeierstrassDegreeMismatch(NormsLabError, ValueError):
    """The Kummer branch polynomial has an unexpected Weierstrass degree."""


class PrecisionExhausted(NormsLabError, ArithmeticError):
    """Not enough digits are left to answer the question asked."""

    exit_code = EXIT_PRECISION_EXHAUSTED


class DivisionByApparentZero(NormsLabError, ZeroDivisionError):
    """Divisor is zero at its precision."""


class HenselHypothesisFailed(NormsLabError, ArithmeticError):
    """nu(f(x0)) <= 2 nu(f'(x0))."""


class ReducesToZero(NormsLabError, ArithmeticError):
    """Every coefficient up to the truncation order lies in the maximal ideal."""


class DenominatorVanishes(NormsLabError, ArithmeticError):
    """The denominator of a rational section vanishes at the point."""


class CoercionFailure(NormsLabError, ArithmeticError):
    """An element does not lie in the requested subfield at precision."""


class CompatibilityFailure(NormsLabError, ArithmeticError):
    """Components of a sequence are not norm-compatible."""


class IsPthPower(NormsLabError, ArithmeticError):
    """The unit is a p-th power; the Kummer extension is trivial."""


class ReductionStuck(NormsLabError, ArithmeticError):
    """Standard-form reduction reached the bound with index divisible by p."""


class HasseArfViolation(NormsLabError, ArithmeticError):
    """An abelian extension produced a non-integral upper jump."""

    exit_code = EXIT_VERIFICATION_FAILED
