"""Exception types raised across the package."""


class BicoeffError(ValueError):
    """Base class for all errors raised by :mod:`bicoeff`."""


class OrderMismatchError(BicoeffError):
    """Two truncated series with different truncation orders were combined."""


class CompositionDomainError(BicoeffError):
    """The inner series of a composition has a nonzero constant term."""


class NormalizationError(BicoeffError):
    """A series expected to satisfy f(0)=0, f'(0)=1 does not."""


class FeasibilityError(BicoeffError):
    """Coefficients lie outside the Caratheodory (or Schwarz) coefficient body."""


class ValidationError(BicoeffError):
    """A family parameter or bound input is out of range (e.g. B1 <= 0)."""


class ParameterError(BicoeffError):
    """A search or sampling parameter is invalid (budget, atom count, id)."""
