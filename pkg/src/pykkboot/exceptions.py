"""
Exceptions raised by pykkboot

"""


class KKBootError(Exception):
    """Base class for all package errors"""


class InvalidPoint(KKBootError, ValueError):
    """Integer that is neither 0 nor a prime number used as a point of Spec Z"""


class BoundExceeded(KKBootError):
    """Brute-force computation asked to enumerate a group above the bound"""


class IllFormedMorphism(KKBootError):
    """Matrices that do not respect the source/target presentations"""


class NotSpecializationClosed(KKBootError):
    """Subset of Spec Z containing 0 without being all of Spec Z"""


class NonCompactInput(KKBootError):
    """Object with non-finitely generated K-theory where compact is required"""


class UnknownSuite(KKBootError):
    """Verification suite name that does not exist"""


class ParseError(KKBootError):
    """
    Object expression that does not match the grammar

    Attributes:
        line (int) : Line of the offending character (1-based)
        column (int) : Column of the offending character (1-based)
        expected (list) : Tokens that would have been accepted

    """

    def __init__(self, message, line=None, column=None, expected=None):
        self.line     = line
        self.column   = column
        self.expected = sorted(expected or [])
        where = '' if column is None else f' at line {line}, column {column}'
        super().__init__(f'{message}{where}')
