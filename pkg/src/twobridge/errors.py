"""Error types shared across the package.

The CLI maps these to exit codes: OutOfFamily -> 2, ParseError -> 3,
InternalCheckFailed (including ConstructionFailed) -> 4.
"""


class OutOfFamily(ValueError):
    """The (c1, c2) pair is not in the supported knot family."""


class ParseError(ValueError):
    """Malformed word, continued fraction, or CLI input."""


class InternalCheckFailed(AssertionError):
    """A checked postcondition failed: an implementation bug, never
    valid-input behavior."""


class ConstructionFailed(InternalCheckFailed):
    """An exact identity required of a constructed object did not hold."""


class ZeroDenominator(ValueError):
    """A nested continued-fraction denominator vanished."""


class NotNormalized(ValueError):
    """A Laurent polynomial was not in symmetric normalized form."""
