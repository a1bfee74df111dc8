"""Exception types shared across the package."""


class NcfiltError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(NcfiltError):
    pass


class SingularMatrix(NcfiltError):
    pass


class ZeroPolynomial(NcfiltError):
    pass


class NonInvertibleDenominator(NcfiltError):
    pass


class NonQuadraticInput(NcfiltError):
    pass


class NonMonomialInput(NcfiltError):
    pass


class NonQuadraticMonomialInput(NcfiltError):
    pass


class InsufficientGBBound(NcfiltError):
    pass


class DegreeOutOfRange(NcfiltError):
    pass


class NotSingleDegreeGenerated(NcfiltError):
    pass


class ColonNotSubsetGenerated(NcfiltError):
    pass


class SearchLimitExceeded(NcfiltError):
    pass


class GenericityFailure(NcfiltError):
    """A random sample over F_p failed a rank condition that holds generically."""


class SingularSystem(NcfiltError):
    pass


class NonHomogeneousRelation(NcfiltError):
    pass


class UnknownGenerator(NcfiltError):
    pass


class ParseError(NcfiltError):
    """Syntax error in a presentation file; carries line/column."""

    def __init__(self, line, col, expected):
        self.line = line
        self.col = col
        self.expected = expected
        super().__init__(f"line {line}, col {col}: expected {expected}")
