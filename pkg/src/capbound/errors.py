"""Exception taxonomy shared across the package.

Every error raised on purpose derives from :class:`CapboundError`, so callers
can catch one base class.  The subclasses mirror the kinds of failure the
library distinguishes: malformed input bytes, bad arguments, parameter sets
that admit no graph, numerical non-convergence, and bound methods applied to
graphs that do not satisfy their hypotheses.
"""


class CapboundError(Exception):
    """Base class for all deliberate errors raised by this package."""


class ArgumentError(CapboundError, ValueError):
    """An argument is out of the documented range or of the wrong shape."""


class Graph6Error(CapboundError, ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InfeasibleParametersError(CapboundError, ValueError):
    """A parameter set (e.g. strongly-regular) fails its feasibility checks."""


class NumericalError(CapboundError, RuntimeError):
    """An iterative routine failed to converge within its iteration cap."""


class InapplicableError(CapboundError, ValueError):
    """A bound method's hypotheses do not hold for the given input.

    ``detail`` carries the specific failed hypothesis, e.g. the walk length
    at which a diagonal-constancy check failed.
    """

    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail


class FormatError(CapboundError, ValueError):
    """A structured text file (solver output, CSV) is missing a field."""
