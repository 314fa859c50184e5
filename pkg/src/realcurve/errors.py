"""Exceptions shared across the toolkit.

Every alarm a caller can act on is a distinct class; anything else is a plain
ValueError at the offending call site.
"""


class RealCurveError(Exception):
    """Base class for all toolkit-specific errors."""


class CurveError(RealCurveError):
    """The defining polynomial or component list violates a curve invariant."""


class ParseError(RealCurveError):
    """Syntax error in the expression language, with a source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RatFuncError(RealCurveError):
    """Invalid rational function on a curve (e.g. denominator vanishes on a component)."""


class PositiveDimensional(RealCurveError):
    """A system expected to have finitely many solutions has a common component."""


class UnsupportedCenter(RealCurveError):
    """Local analysis requested at a point the kernel cannot expand around."""


class UnsupportedExtension(RealCurveError):
    """Branch data would need a coefficient field beyond a quadratic extension."""


class PrecisionExhausted(RealCurveError):
    """A certified answer was not reached within the truncation ceiling."""


class ManifestError(RealCurveError):
    """A curve manifest file is missing, malformed, or inconsistent."""
