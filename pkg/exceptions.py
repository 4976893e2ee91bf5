"""
Custom exceptions for the tropical matrix toolkit

Provides clear error types for different failure scenarios.
"""


class TropicalAlgebraError(Exception):
    """Base exception for all tropical algebra errors"""
    pass


class ValidationError(TropicalAlgebraError):
    """Raised when input validation fails"""
    def __init__(self, message: str, field: str = None):
        self.message = message
        self.field = field
        super().__init__(self.message)


class ShapeMismatchError(TropicalAlgebraError):
    """Raised when operand shapes are incompatible"""
    def __init__(self, operation: str, left: tuple, right: tuple = None):
        self.operation = operation
        self.left = left
        self.right = right
        if right is None:
            self.message = f"Invalid shape {left} for {operation}"
        else:
            self.message = f"Shape mismatch in {operation}: {left} vs {right}"
        super().__init__(self.message)


class NonSquareError(TropicalAlgebraError):
    """Raised when an operation needs a square matrix"""
    def __init__(self, operation: str, shape: tuple):
        self.operation = operation
        self.shape = shape
        self.message = f"{operation} requires a square matrix, got {shape[0]}x{shape[1]}"
        super().__init__(self.message)


class IndexOutOfRangeError(TropicalAlgebraError):
    """Raised when a 1-based index is outside the matrix"""
    def __init__(self, index: int, upper: int, axis: str = "index"):
        self.index = index
        self.upper = upper
        self.axis = axis
        self.message = f"{axis.capitalize()} {index} out of range 1..{upper}"
        super().__init__(self.message)


class SizeGuardError(TropicalAlgebraError):
    """Raised when an exponential algorithm is asked for a size beyond its cap"""
    def __init__(self, operation: str, size: int, limit: int):
        self.operation = operation
        self.size = size
        self.limit = limit
        self.message = f"{operation} is limited to size {limit}, got {size}"
        super().__init__(self.message)


class NegInfDivisionError(TropicalAlgebraError):
    """Raised when dividing by -inf"""
    def __init__(self):
        self.message = "Division by -inf is undefined"
        super().__init__(self.message)


class SingularMatrixError(TropicalAlgebraError):
    """Raised when a nonsingular matrix is required"""
    def __init__(self, determinant: str = None):
        self.determinant = determinant
        self.message = "Matrix is tropically singular"
        if determinant is not None:
            self.message += f" (determinant {determinant})"
        super().__init__(self.message)


class NonsingularMatrixError(TropicalAlgebraError):
    """Raised when a singular matrix is required"""
    def __init__(self, determinant: str = None):
        self.determinant = determinant
        self.message = "Matrix is tropically nonsingular"
        if determinant is not None:
            self.message += f" (determinant {determinant})"
        super().__init__(self.message)


class NotDependentError(TropicalAlgebraError):
    """Raised when a witness is requested for independent vectors"""
    def __init__(self, count: int = None):
        self.count = count
        self.message = "Vectors are tropically independent"
        if count is not None:
            self.message = f"The {count} vectors are tropically independent"
        super().__init__(self.message)


class GhostEntryError(TropicalAlgebraError):
    """Raised when a real matrix is required but a ghost entry is present"""
    def __init__(self, row: int, col: int):
        self.row = row
        self.col = col
        self.message = f"Ghost entry at ({row}, {col}); a real matrix is required"
        super().__init__(self.message)


class WitnessValidationError(TropicalAlgebraError):
    """Raised when a constructed dependence witness fails validation (internal bug)"""
    def __init__(self, message: str = "Constructed witness failed validation"):
        self.message = message
        super().__init__(self.message)


class MatrixParseError(TropicalAlgebraError):
    """Raised when matrix text cannot be parsed"""
    def __init__(self, message: str, line: int = None, column: int = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        self.message = f"{location}{message}"
        super().__init__(self.message)


class MatrixShapeError(MatrixParseError):
    """Raised when a parsed row disagrees with the declared shape"""
    def __init__(self, expected: int, got: int, line: int = None):
        self.expected = expected
        self.got = got
        super().__init__(f"Shape mismatch: expected {expected} entries, got {got}", line=line)
