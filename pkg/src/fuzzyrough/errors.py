"""Exception types shared by every module in the package."""


class FuzzyRoughError(Exception):
    """Base class for all errors raised by this package."""


class UnknownElementError(FuzzyRoughError):
    """An element symbol is not part of the universe."""


class OverlapError(FuzzyRoughError):
    """Two partition blocks share an element."""


class CoverageError(FuzzyRoughError):
    """Some universe element belongs to no partition block."""


class EmptyBlockError(FuzzyRoughError):
    """A partition block is empty."""


class UniverseMismatchError(FuzzyRoughError):
    """Two operands are defined over different universes."""


class ContextMismatchError(FuzzyRoughError):
    """Two fuzzy rough relations do not share a fuzzy rough set context."""


class GradeRangeError(FuzzyRoughError):
    """A membership grade falls outside the closed interval [0, 1]."""


class NotRoughError(FuzzyRoughError):
    """The subset is definable (lower approximation equals upper)."""


class ConditionViolation(FuzzyRoughError):
    """A membership map breaks one of the region conditions.

    ``condition`` is one of ``"i"``, ``"ii"``, ``"iii"`` or ``"dominance"``;
    ``witness`` is the element or ordered pair where the check failed.
    """

    def __init__(self, condition: str, witness, message: str):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class NotSimilitudeError(FuzzyRoughError):
    """The relation is not a similitude relation of any order."""


class ZeroSupportError(FuzzyRoughError):
    """The requested anchor element has membership grade zero."""


class InternalInvariantError(FuzzyRoughError):
    """An operation produced a result that violates a guaranteed invariant."""


class BoundsError(FuzzyRoughError):
    """A size or denominator parameter is outside its supported range."""


class EmptyGridError(FuzzyRoughError):
    """No grid value is admissible for some boundary cell."""


class ArityError(FuzzyRoughError):
    """A proposition received a bundle of the wrong size."""


class UnknownPropositionError(FuzzyRoughError):
    """A proposition id is not in the catalog."""


class InstanceFormatError(FuzzyRoughError):
    """An instance file does not conform to the schema."""
