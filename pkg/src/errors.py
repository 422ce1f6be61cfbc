"""Exception hierarchy for field, algebra, graph and CLI failures."""


class OkuboError(Exception):
    """Base class for every error raised by this package."""


# --- Field ---


class NonPrimeP(OkuboError, ValueError):
    pass


class ReducibleModulus(OkuboError, ValueError):
    pass


class UnsupportedDegree(OkuboError, ValueError):
    pass


class DivisionByZero(OkuboError, ZeroDivisionError):
    pass


class MixedFields(OkuboError, TypeError):
    pass


class InfiniteField(OkuboError):
    pass


class FieldParseError(OkuboError, ValueError):
    pass


# --- Linear algebra ---


class DimensionMismatch(OkuboError, ValueError):
    pass


# --- Algebra ---


class MixedAlgebras(OkuboError, TypeError):
    pass


class NotZeroDivisor(OkuboError, ValueError):
    pass


class NotIdempotent(OkuboError, ValueError):
    pass


class NotChar3(OkuboError):
    pass


class NotSplit(OkuboError):
    pass


class NotTypeC(OkuboError, ValueError):
    pass


class NotChar3Split(OkuboError):
    pass


class NoCubeRoot(OkuboError):
    """The field has no primitive cube root of unity."""


class Char3(OkuboError):
    """The construction needs division by 3."""


# --- Graphs ---


class TooLargeForExact(OkuboError):
    pass


class TooLarge(OkuboError):
    pass


class Disconnected(OkuboError):
    pass


class NoZeroSquareSubspace(OkuboError):
    pass


# --- CLI ---


class ParseError(OkuboError, ValueError):
    pass


class IncompatibleSuite(OkuboError):
    pass


class ConfigurationError(OkuboError, ValueError):
    pass
