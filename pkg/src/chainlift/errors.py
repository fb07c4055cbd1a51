"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all errors raised by chainlift."""


class UnknownVariable(AlgebraError):
    def __init__(self, name: str, position: int | None = None):
        self.name = name
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown variable {name!r}{where}")


class PolynomialSyntaxError(AlgebraError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class BadCharacteristic(AlgebraError):
    """A fraction whose denominator vanishes in the coefficient field."""


class ArityMismatch(AlgebraError):
    pass


class RingMismatch(AlgebraError):
    pass


class ZeroPolynomialError(AlgebraError):
    """Raised where a nonzero polynomial is required (divisors, saturation, degrees)."""


class MissingCofactors(AlgebraError):
    pass


class IllDefinedMap(AlgebraError):
    def __init__(self, relation):
        self.relation = relation
        super().__init__(f"source relation {relation} does not map into the target relations")


class WitnessNotOutside(AlgebraError):
    def __init__(self, level: int, witness):
        self.level = level
        self.witness = witness
        super().__init__(f"witness {witness} lies in the level-{level} prime")


class LengthMismatch(AlgebraError):
    pass


class ChainError(AlgebraError):
    """A proposed prime chain is not strictly ascending or contains a non-prime."""


class SessionError(AlgebraError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = "" if line is None else f"line {line}: "
        super().__init__(prefix + message)


class ResolutionError(SessionError):
    pass
