"""Exception types raised by mfbounds."""


class MFBoundsError(Exception):
    """Base class for all library errors."""


class EmptyInput(MFBoundsError, ValueError):
    pass


class BadLabel(MFBoundsError, ValueError):
    pass


class ParseError(MFBoundsError, ValueError):
    """A facet file could not be parsed."""


class NotAFace(MFBoundsError, ValueError):
    pass


class LinkConditionViolated(MFBoundsError, ValueError):
    """Contracting the edge would change the topology (or break flagness)."""


class IsSimplex(MFBoundsError, ValueError):
    pass


class BadParams(MFBoundsError, ValueError):
    pass


class NotSymmetric(MFBoundsError, ValueError):
    pass


class DegreeTooHigh(MFBoundsError, ValueError):
    pass


class TooFewVertices(MFBoundsError, ValueError):
    pass


class RecurrenceClosedFormMismatch(MFBoundsError, AssertionError):
    """Recurrence and closed form disagree; this is an implementation bug."""


class NotInFamily(MFBoundsError, ValueError):
    pass


class ScaleGuard(MFBoundsError, ValueError):
    """Requested enumeration is beyond desk scale."""


class ConstructionError(MFBoundsError, AssertionError):
    """A constructed complex failed its own post-hoc membership check."""
