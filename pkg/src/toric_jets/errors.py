"""Exception hierarchy shared by every module of the package."""


class ToricError(Exception):
    """Base class for all errors raised by :mod:`toric_jets`."""


class DimensionError(ToricError, ValueError):
    pass


class ShapeError(ToricError, ValueError):
    pass


class ZeroVectorError(ToricError, ValueError):
    pass


class NotUnimodularError(ToricError, ValueError):
    pass


class ParameterError(ToricError, ValueError):
    pass


class FanError(ToricError, ValueError):
    """Raised when ray/cone data does not describe a smooth complete fan."""


class NonPrimitiveRay(FanError):
    pass


class NonUnimodularCone(FanError):
    pass


class DanglingWall(FanError):
    pass


class IncompleteFan(FanError):
    pass


class UnusedRay(FanError):
    pass


class ConeError(ToricError, ValueError):
    pass


class FanMismatchError(ToricError, ValueError):
    pass


class NotConvexError(ToricError, ValueError):
    pass


class NotKConvexError(ToricError, ValueError):
    pass


class NotASectionError(ToricError, ValueError):
    pass


class SpecError(ToricError, ValueError):
    pass


class PreconditionError(ToricError, ValueError):
    pass


class InconsistencyError(ToricError, AssertionError):
    """Two computations that must agree did not. Always a bug, never bad input."""


class ParseError(ToricError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
