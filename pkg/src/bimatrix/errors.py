"""Exception hierarchy shared by the library and the command-line tool."""


class BimatrixError(Exception):
    """Base class for every error raised by this package."""


class ParseError(BimatrixError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class DimMismatch(BimatrixError):
    """Operand dimensions are incompatible for the requested operation."""


class ShapeError(BimatrixError):
    """The bimatrix has the wrong shape class for the requested operation."""


class RingError(BimatrixError):
    """The operation is not defined over the operand's scalar ring."""


class IndexOutOfRange(BimatrixError):
    """A 1-based index or index set is empty, unsorted or out of bounds."""


class DegenerateCollapse(BimatrixError):
    """Both components came out equal and nonzero, so the result is not a bimatrix."""


class SingularMatrix(BimatrixError):
    """A plain matrix has no inverse."""


class Bisingular(BimatrixError):
    """Both components are singular."""


class SemiBisingular(BimatrixError):
    """Exactly one component is singular.

    ``singular`` names it (1 or 2); ``partial_inverse`` holds the inverse of
    the other component.
    """

    def __init__(self, singular: int, partial_inverse):
        self.singular = singular
        self.partial_inverse = partial_inverse
        which = "first" if singular == 1 else "second"
        super().__init__(f"{which} component is singular")


class Inconsistent(BimatrixError):
    def __init__(self, component: int):
        self.component = component
        which = "first" if component == 1 else "second"
        super().__init__(f"{which} component system has no solution")


class NotDiagonalizable(BimatrixError):
    def __init__(self, component: int, reason: str):
        self.component = component
        self.reason = reason
        super().__init__(f"component {component} is not diagonalizable over Q: {reason}")


class SingularWitness(BimatrixError):
    """Similarity witness is singular in both components."""
