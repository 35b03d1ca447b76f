"""Exception hierarchy shared by every module of the package."""


class ImpedanceError(Exception):
    """Base class for all errors raised by :mod:`acimpedance`."""


class NetworkValidationError(ImpedanceError, ValueError):
    """The graph or one of its edge parameters violates the network contract."""


class NonPositiveWeightError(NetworkValidationError):
    """An ordered-field operation was requested on a graph with a weight that is not positive."""


class PoleError(ImpedanceError, ArithmeticError):
    """A rational function was evaluated at (numerically) a root of its denominator."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class ConvergenceError(ImpedanceError, ArithmeticError):
    """An iterative numerical method stopped before reaching its tolerance.

    ``best`` holds the last iterate and ``residual`` its backward error.
    """

    def __init__(self, message, best=None, residual=None):
        super().__init__(message)
        self.best = best
        self.residual = residual


class NetlistSyntaxError(ImpedanceError, ValueError):
    """Malformed netlist text; ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
