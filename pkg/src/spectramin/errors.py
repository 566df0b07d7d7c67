class SpectraminError(Exception):
    """Base class for errors raised by this package."""


class GraphError(SpectraminError, ValueError):
    """Invalid graph data or an operation outside the supported size range."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class InfeasibleError(SpectraminError, ValueError):
    """Parameters violate a construction's or a regime's preconditions."""


class ConvergenceError(SpectraminError, ArithmeticError):
    """An iterative numeric routine failed to converge."""


class InconsistencyError(SpectraminError, AssertionError):
    """Two computations that must agree did not (a finding, not a usage error)."""


class RootNotFoundError(SpectraminError, ValueError):
    """No real root in the requested bracket."""
