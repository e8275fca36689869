"""Exception hierarchy shared by every module of the package."""


class ChiYError(Exception):
    """Base class for all errors raised by chiygenus."""


class DistinctNodesError(ChiYError, ValueError):
    pass


class ArityError(ChiYError, ValueError):
    pass


class SingularMatrixError(ChiYError, ArithmeticError):
    pass


class DimensionError(ChiYError, ValueError):
    pass


class SeriesDomainError(ChiYError, ValueError):
    pass


class UnsupportedModelError(ChiYError, TypeError):
    pass


class ModelConstraintError(ChiYError, ValueError):
    pass


class ParseError(ChiYError, ValueError):
    pass


class SchemaError(ChiYError, ValueError):
    pass


class ParityError(ChiYError, ValueError):
    pass


class MissingDataError(ChiYError, KeyError):
    pass
