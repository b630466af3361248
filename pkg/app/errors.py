"""Exception hierarchy shared by every tanglekit module.

Family bases derive from ``ValueError`` so callers that only know about
the builtin still catch domain errors.
"""


class TanglekitError(Exception):
    """Base class for all domain errors."""


class ArgumentRangeError(TanglekitError, ValueError):
    """A numeric argument lies outside the domain of a count or class."""


# Diagrams

class DiagramError(TanglekitError, ValueError):
    """A tangled diagram or inflated matching is malformed."""


class DegreeExceededError(DiagramError):
    pass


class BadFlagError(DiagramError):
    pass


class OutOfRangeError(DiagramError):
    pass


class DuplicateArcError(DiagramError):
    pass


class NotAPartitionError(DiagramError):
    pass


class NotDeflatableError(DiagramError):
    pass


class NotTwoRegularPartitionError(DiagramError):
    pass


class NotBraidError(DiagramError):
    pass


class InvalidMatchingError(DiagramError):
    pass


class DiagramSyntaxError(DiagramError):
    pass


# Enumeration

class EnumerationError(TanglekitError, ValueError):
    """An exhaustive enumeration was asked for something it refuses."""


class TooLargeError(EnumerationError):
    pass


class OddGroundSetError(EnumerationError):
    pass


# Tableaux

class TableauError(TanglekitError, ValueError):
    """A tableau or shape sequence is malformed."""


class DuplicateEntryError(TableauError):
    pass


class NotACornerError(TableauError):
    pass


class InconsistentTableauError(TableauError):
    pass


# Counting and recurrences

class CountingError(TanglekitError, ValueError):
    """An exact count could not be formed."""


class OddLengthError(CountingError):
    pass


class InexactDivisionError(CountingError):
    pass


class RecurrenceError(TanglekitError, ValueError):
    """A polynomial recurrence cannot be evaluated."""


class LeadingZeroError(RecurrenceError):
    pass


class InconsistentSeedsError(RecurrenceError):
    pass


class RecurrenceSyntaxError(RecurrenceError):
    pass


# Asymptotics

class AsymptoticsError(TanglekitError, ValueError):
    """The recurrence falls outside the supported formal-series case."""


class UnequalDegreesError(AsymptoticsError):
    pass


class NoDominantRationalRootError(AsymptoticsError):
    pass


class NonSimpleRootError(AsymptoticsError):
    pass


class SingularSystemError(AsymptoticsError):
    pass


class InsufficientTermsError(AsymptoticsError):
    pass


# Output

class RenderError(TanglekitError, OSError):
    """Writing a rendered diagram failed."""
