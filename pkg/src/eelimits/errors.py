"""Exception types raised by eelimits."""


class InvalidArgumentError(ValueError):
    """An input violates the documented domain of an operation or type."""


class DomainError(InvalidArgumentError):
    """Argument lies outside the domain of a special function."""


class ConvergenceError(ArithmeticError):
    """An iterative solver ran out of iterations.

    The last iterate is kept on ``last_iterate`` so callers can decide
    whether it is still usable.
    """

    def __init__(self, message, last_iterate):
        super().__init__(message)
        self.last_iterate = last_iterate


class DegenerateOptimumError(ValueError):
    """The EE objective has a supremum but no finite maximizer.

    Raised when the per-Hz circuit power is zero, so the EE keeps growing as
    P/B -> 0. ``supremum`` holds the limiting EE value in bit/Joule.
    """

    no_finite_maximizer = True

    def __init__(self, message, supremum):
        super().__init__(message)
        self.supremum = supremum
