"""Exception hierarchy shared by every module.

Each exception carries a stable ``kind`` string which the command line
front end copies into its ``error.kind`` field.
"""


class FFCoversError(Exception):
    kind = "Error"


class NotPrime(FFCoversError, ValueError):
    kind = "NotPrime"


class DegreeZero(FFCoversError, ValueError):
    kind = "DegreeZero"


class NotIrreducible(FFCoversError, ValueError):
    kind = "NotIrreducible"


class DivisionByZero(FFCoversError, ZeroDivisionError):
    kind = "DivisionByZero"


class MixedContexts(FFCoversError, TypeError):
    kind = "MixedContexts"


class IncompatibleFields(FFCoversError, ValueError):
    kind = "IncompatibleFields"


class OutOfRange(FFCoversError, ValueError):
    kind = "OutOfRange"


class TooLarge(FFCoversError, ValueError):
    kind = "TooLarge"


class WildCover(FFCoversError, ValueError):
    kind = "WildCover"


class Imprimitive(FFCoversError, ValueError):
    kind = "Imprimitive"


class UnsupportedModel(FFCoversError, ValueError):
    kind = "UnsupportedModel"


class RootsNotRational(FFCoversError, ValueError):
    kind = "RootsNotRational"


class NonIntegerCoefficient(FFCoversError, ValueError):
    kind = "NonIntegerCoefficient"


class NumericalFailure(FFCoversError, ArithmeticError):
    kind = "NumericalFailure"


class NotClosed(FFCoversError, ValueError):
    kind = "NotClosed"


class NotMonomialStable(FFCoversError, ValueError):
    kind = "NotMonomialStable"


class ParseError(FFCoversError, ValueError):
    kind = "ParseError"
