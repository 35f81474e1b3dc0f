"""Exception hierarchy for the plat toolkit.

Every domain error derives from PlatError so the CLI can map them to
exit status 1 and print the error class name verbatim.
"""

from __future__ import annotations


class PlatError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidGrid(PlatError):
    """A grid failed shape validation; carries the violation records."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        detail = "; ".join(f"{v.kind}: {v.message}" for v in self.violations)
        super().__init__(detail or "invalid grid")


class HypothesesNotMet(PlatError):
    """The bridge-distance formula was asked for outside its hypotheses."""


class EvenPlatUnsupported(PlatError):
    """Symmetry and canonical-form operations require a standard closure."""


class NotStandardForm(PlatError):
    """A braid word does not factor into alternating-parity row blocks."""

    def __init__(self, message, letter_index):
        super().__init__(f"{message} (letter {letter_index})")
        self.letter_index = letter_index


class AmbiguousLength(PlatError):
    """The grid length cannot be inferred from a braid word alone."""


class BraidSyntaxError(PlatError):
    """Malformed braid text; carries the character position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (position {position})")
        self.position = position


class NotASphere(PlatError):
    """A coefficient vector violates the sphere range or adjacency rule."""


class NotAlmostVertical(PlatError):
    """Boundary contacts do not match any almost-vertical level pattern."""


class ExtremeRegion(PlatError):
    """No isolating pair of (almost) vertical spheres exists for the region."""


class IndexOutOfRange(PlatError):
    """A twist-region index does not address a box of the grid."""


class DegenerateFraction(PlatError):
    """The corner continued fraction 1/(a + 1/b) is undefined."""


class EmptyDiagram(PlatError):
    """The grid has no crossings, so no planar diagram code exists."""


class NotAKnot(PlatError):
    """A knots-only operation was applied to a multi-component closure."""
