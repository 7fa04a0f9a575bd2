"""Exception hierarchy shared by every solver module."""


class ReliapathError(Exception):
    """Base class for all library errors."""


class InputError(ReliapathError, ValueError):
    """An argument does not describe a valid object (unknown edge, broken path, bad width)."""


class StructureError(ReliapathError):
    """The graph cannot be ordered from the source (cycle or edge entering the source)."""


class PrecisionError(ReliapathError):
    """A log-reliability does not sit on the requested integer grid."""


class ResourceLimitError(ReliapathError):
    """A configurable size guard (path count, table entries) was exceeded."""


class DecompositionError(ReliapathError):
    """A flow could not be split into positive paths although residual flow remains."""


class InfeasibleFlowError(InputError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(v.detail for v in self.violations)
        super().__init__(f"infeasible flow: {lines}")
