"""Exception hierarchy shared by every module."""


class FredpairsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(FredpairsError, ValueError):
    """Shapes or ambient dimensions do not fit together."""


class ContainmentError(FredpairsError, ValueError):
    """A subspace that was required to lie inside another does not."""


class NotGeneralizedInverseError(FredpairsError, ValueError):
    """A matrix offered as a generalized inverse fails ``A G A = A``."""


class NotAComplexError(FredpairsError, ValueError):
    """Consecutive boundaries of a chain do not compose to zero."""


class SpecValidationError(FredpairsError, ValueError):
    """A synthesis spec or generator request cannot be realized."""


class InconsistencyError(FredpairsError, RuntimeError):
    """An identity guaranteed by the theory failed; this signals a bug."""


class InfeasibleComplementError(InconsistencyError):
    """No complement exists inside the requested pool."""


class TheoremViolation(InconsistencyError):
    """A structural claim checked on a concrete pair or chain failed.

    ``claim`` names the violated statement so reports can list it.
    """

    def __init__(self, claim, detail=""):
        self.claim = claim
        self.detail = detail
        super().__init__(f"{claim}: {detail}" if detail else claim)
