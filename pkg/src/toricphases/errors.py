"""Exception hierarchy.

Validation errors (bad input data) and computational errors (the input is
well formed but the requested object does not exist or cannot be found
within the given bounds) are kept apart so the CLI can map them to
different exit codes.
"""


class ToricError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ToricError, ValueError):
    pass


class ComputationError(ToricError):
    pass


# lattice
class NoIntegerSolution(ComputationError):
    pass


# models
class NotCalabiYau(ValidationError):
    pass


class RankDeficient(ValidationError):
    pass


class NotSmooth(ValidationError):
    pass


class NotComplete(ValidationError):
    pass


class TorsionPicard(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, *, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.field = field


# secondary fan
class DegenerateCharges(ComputationError):
    pass


class OnWall(ComputationError):
    pass


class OutsideSupport(ComputationError):
    pass


class NotAdjacent(ComputationError):
    pass


class NoGeometricPhase(ComputationError):
    pass


class NotGeometricPhase(ComputationError):
    pass


# matrix factorizations
class InhomogeneousInput(ValidationError):
    pass


class NoSolutionAtOrder(ComputationError):
    def __init__(self, order, message=None):
        super().__init__(message or f"recursive homotopy system infeasible at order {order}")
        self.order = tuple(order)


class NotFinitelySupported(ComputationError):
    pass
