"""Exception types shared across the package."""


class ConfBesselError(ValueError):
    """Base class for all domain-specific errors."""


class DomainError(ConfBesselError):
    """Argument outside the domain of an operation (typically x <= 0)."""


class AlignmentError(ConfBesselError):
    """Two series cannot be combined because alpha or offset disagree."""


class PoleError(ConfBesselError):
    """Gamma evaluated at 0 or a negative integer."""


class OrderCaseError(ConfBesselError):
    """An order was passed to a constructor that handles a different case."""


class EvaluationError(ConfBesselError):
    """A user-supplied function returned a non-finite value."""
