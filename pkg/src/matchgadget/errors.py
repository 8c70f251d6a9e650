"""Exception types shared across the package."""


class MatchGadgetError(Exception):
    """Base class for every error raised by this package."""


class SelfLoopError(MatchGadgetError):
    """An edge joins a vertex to itself."""


class OutOfRangeVertexError(MatchGadgetError):
    """An edge endpoint is not in the declared vertex range."""


class NotAugmentingError(MatchGadgetError):
    """The given path does not augment the given matching."""


class EnumerationDivergesError(MatchGadgetError):
    """A lazy-graph neighbor enumeration exceeded its step budget."""


class CapExceededError(MatchGadgetError):
    """An enumeration or count went past its configured cap."""


class NoNodeError(MatchGadgetError):
    """No partial matching covers the requested initial segment of vertices."""


class BudgetExceededError(MatchGadgetError):
    """A lazy-graph search exceeded its adjacency-probe budget."""


class NotAPathError(MatchGadgetError):
    """The given node sequence is not a root path of the tree."""


class RootUncoveredError(MatchGadgetError):
    """The matching leaves the doubling-tree root unmatched."""


class StuckError(MatchGadgetError):
    """The matching pairs a traced vertex inconsistently with the tree structure."""


class CoveredStartError(MatchGadgetError):
    """Augmenting-path search started from a vertex the matching already covers."""


class NotPerfectComponentError(MatchGadgetError):
    """A component matching does not perfectly match its component graph."""


class PreconditionViolatedError(MatchGadgetError):
    """A checked precondition of the operation does not hold."""


class MalformedCodingGraphError(MatchGadgetError):
    """The marked graph violates the coding-graph shape invariants."""


class EmptyListError(MatchGadgetError):
    """An existential gadget needs at least one branch."""


class ContextTooLargeError(MatchGadgetError):
    """The oracle context is too wide to compile (exponential blowup guard)."""


class NotPrefixClosedError(MatchGadgetError):
    """The node set is not a prefix-closed tree."""


class EvenLengthError(MatchGadgetError):
    """Separation paths must have an odd number of edges."""


class UnboundAtomError(MatchGadgetError):
    """A formula atom index has no binding in the environment."""


class FormulaSyntaxError(MatchGadgetError):
    """The formula text does not match the DSL grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnbalancedParensError(FormulaSyntaxError):
    """A parenthesis or bracket is missing or unmatched."""
