"""Exception vocabulary shared by every module in the toolkit."""


class PosetKitError(Exception):
    """Base class for all toolkit errors."""


class CycleDetected(PosetKitError):
    """Relation closure produced x <= y and y <= x for distinct x, y."""


class UnknownElement(PosetKitError):
    """A label was used that is not part of the ground set."""


class DuplicateElement(PosetKitError):
    """Ground-set labels must be pairwise distinct."""


class SizeLimitExceeded(PosetKitError):
    """Input exceeds the configured cap for this operation (see limits)."""


class InvalidRealizer(PosetKitError):
    """A claimed realizer does not intersect to the order it was given."""


class NotAnExtension(PosetKitError):
    """A linear order does not extend the partial order it was paired with."""


class NotNonSeparating(PosetKitError):
    """An operation required a non-separating extension but got a separating one."""


class NotALattice(PosetKitError):
    """Some pair of elements lacks a join or a meet."""


class NotDistributive(PosetKitError):
    """The lattice fails the distributive law."""


class PreconditionViolated(PosetKitError):
    """Caller-supplied arguments do not satisfy the operation's contract."""


class InternalInconsistency(PosetKitError):
    """Two independent routes to the same fact disagreed; this is a bug, not bad input."""


class UnknownSuite(PosetKitError):
    """verify was asked for a suite name it does not know."""


class ParseError(PosetKitError):
    """Malformed document text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
