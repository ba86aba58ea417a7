"""Shared exception types.

Every error carries enough data to reconstruct the failing call; batch
drivers convert them into report entries instead of crashing.
"""


class CocontraError(Exception):
    """Base class for all package errors."""


class MismatchedSignature(CocontraError):
    """Two maps that must share (co)domains do not."""


class BaseMismatch(CocontraError):
    """Structures over different base sets were combined."""


class CoalgebraMismatch(CocontraError):
    """Structures over different coalgebras were combined."""


class NotCounital(CocontraError):
    """A candidate structure map violates the counit axiom."""


class NotCoalgebraMorphism(CocontraError):
    """A map fails the comultiplication/counit compatibility squares."""


class RelationFailure(CocontraError):
    """A structure family violates its composition relations.

    Carries the witnessing index pair in ``args[1]`` when available.
    """


class EmptyFiber(CocontraError):
    """A product construction received an empty factor."""


class EmptyCarrier(CocontraError):
    """An operation that needs a base point got the empty carrier."""


class BudgetExceeded(CocontraError):
    """An enumeration would exceed its budget.

    ``projected`` holds the exact count that would have been enumerated.
    """

    def __init__(self, message, projected=None):
        super().__init__(message)
        self.projected = projected


class BoundExceeded(CocontraError):
    """A hard size precondition was violated."""


class IncompatibleTriple(CocontraError):
    """Hom objects passed to composition do not share endpoints."""


class ParseError(CocontraError):
    """A manifest or declaration file failed to parse.

    ``where`` names the offending location (file, declaration, field).
    """

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class UnknownJob(CocontraError):
    """A manifest job names a command that does not exist."""
