"""Exception types raised across the package."""


class TrivSourceError(Exception):
    pass


class OrderCapExceeded(TrivSourceError):
    """Group closure grew past the configured order cap."""


class NotNormal(TrivSourceError):
    pass


class NotFixed(TrivSourceError):
    """Möbius function requested at arguments not normalized by g."""


class DivisionByZero(TrivSourceError, ZeroDivisionError):
    pass


class Singular(TrivSourceError):
    pass


class ShapeMismatch(TrivSourceError, ValueError):
    pass


class ChopBudgetExceeded(TrivSourceError):
    """The randomized submodule search ran out of attempts; retry with another seed."""


class InternalInconsistency(TrivSourceError):
    """An internal consistency check failed. This indicates a bug, not bad input."""


class SizeMismatch(InternalInconsistency):
    pass


class SingularSystem(InternalInconsistency):
    pass


class ParseError(TrivSourceError, ValueError):
    pass
