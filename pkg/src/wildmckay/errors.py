"""Exception hierarchy shared by all modules.

Two broad classes matter for the command line: hypothesis failures (the
user asked for a group that does not exist under the stated divisibility
conditions) and internal check failures (an exact identity that must hold
did not, which means a bug, not bad input).
"""


class WildMcKayError(Exception):
    """Base class for all package errors."""


class HypothesisFailure(WildMcKayError):
    """A theorem hypothesis or user-facing precondition does not hold."""


class DivisibilityError(HypothesisFailure):
    """q - 1 is not divisible by l (resp. 2l) as the family requires."""


class NoTwistError(HypothesisFailure):
    """No exponent e with e^2 + e + 1 = 0 mod l exists (l != 1 mod 3)."""


class UnsupportedFamilyError(HypothesisFailure):
    """The requested family is outside the four supported ones."""


class WildElementError(HypothesisFailure):
    """Age requested for an element of order divisible by 3."""


class InternalCheckError(WildMcKayError):
    """An exact internal consistency assertion failed."""


class SmallnessError(InternalCheckError):
    """A constructed group contains a pseudo-reflection."""


class ClosureCapError(InternalCheckError):
    """Group closure exceeded the configured element cap."""


class NonPolynomialResultError(InternalCheckError):
    """A stratum sum did not cancel to a polynomial in q."""


class DivergentSeriesError(InternalCheckError):
    """A progression stratum has a nonnegative effective exponent slope."""


class NonIntegerCoefficientError(InternalCheckError):
    """A point-count polynomial has a non-integer coefficient."""
