"""Exception hierarchy shared by every part of the package."""


class WordGFError(Exception):
    """Base class for all package errors."""


class ValidationError(WordGFError, ValueError):
    """Invalid input: alphabets, forbidden sets, documents, corpora."""


class UnknownLetter(ValidationError):
    pass


class OneLetterForbiddenWord(ValidationError):
    pass


class NotReduced(ValidationError):
    pass


class NotASuffix(ValidationError):
    pass


class SchemaError(ValidationError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class UnsupportedVariant(ValidationError):
    pass


class CapExceeded(ValidationError):
    pass


class EmptyCorpus(ValidationError):
    pass


class UnknownSymbol(ValidationError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class DuplicateWord(ValidationError):
    pass


class SolverError(WordGFError, ArithmeticError):
    """Failures of the exact linear algebra."""


class SingularSystem(SolverError):
    pass


class SubstitutionPole(SolverError):
    pass


class SeriesNotNormalized(SolverError):
    pass


class DivisionByZero(SolverError, ZeroDivisionError):
    pass
