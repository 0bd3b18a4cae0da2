"""Exception hierarchy shared by the library and the command line tool.

Two broad families: bad input (ValidationError) and computations that
ran but could not deliver a trustworthy answer (NumericalError).  The
CLI maps these to distinct exit codes, so library code should raise the
most specific subclass that applies.
"""


class PTWalkError(Exception):
    """Base class for everything raised deliberately by this package."""


class ValidationError(PTWalkError):
    """Input outside the documented domain of an operation."""


class NumericalError(PTWalkError):
    """A computation failed to converge or produced an inconsistent result."""


class PhaseBoundaryError(ValidationError):
    """Parameters sit on (or too close to) a gap-closing line.

    Winding numbers and geometric phases are undefined there: the
    planar vector built from the unit-cell operator vanishes at some
    momentum, so its angle has no continuous lift.
    """


class NoLocalizedSolutionError(ValidationError):
    """The boundary-state ansatz has no normalizable solution here.

    Raised when a decay-rate equation falls inside [-1, 1] (no
    evanescent branch) or when the coin selection rules out both
    internal coin states for the requested gap.
    """


class RefinementError(NumericalError):
    """Grid refinement hit its cap without meeting the accuracy target."""
