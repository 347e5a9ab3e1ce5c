"""Exception hierarchy."""


class ErgocapError(Exception):
    """Base class for all errors raised by ergocap."""


class InputError(ErgocapError, ValueError):
    """Malformed or inconsistent input (lengths, ranges, parse failures)."""


class ConditioningError(ErgocapError, ValueError):
    """Conditioning on an event of zero probability."""


class ResourceError(ErgocapError):
    """A computation was refused because the instance exceeds a configured cap."""


class HypothesisUnmet(ErgocapError):
    """The hypotheses of a result do not hold for the given instance."""


class TheoremViolation(ErgocapError, AssertionError):
    """A conclusion failed although its hypotheses were verified."""
