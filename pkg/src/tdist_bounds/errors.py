"""Exception hierarchy shared by all modules."""


class TDistError(Exception):
    """Base class for every error raised by this package."""


class DomainError(TDistError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class DegenerateInputError(DomainError):
    """The two degrees of freedom coincide, so there is nothing to compare."""


class OrderingError(DomainError):
    """A pair (p, q) was given with p > q."""


class TheoremDomainError(DomainError):
    """The requested bound is only proven above a threshold in p."""


class NumericError(TDistError, ArithmeticError):
    """A numerical procedure failed (no bracket, no convergence, bad sign)."""


class ConvergenceError(NumericError):
    pass
