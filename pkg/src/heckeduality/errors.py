"""Exception types raised across the package."""


class HeckeDualityError(Exception):
    """Base class for all errors raised here."""


class NonInvertibleCoefficient(HeckeDualityError):
    pass


class IllegalParameter(HeckeDualityError):
    pass


class UnsupportedType(HeckeDualityError):
    pass


class NotARoot(HeckeDualityError):
    pass


class InconsistentParameters(HeckeDualityError):
    pass


class NotSaturated(HeckeDualityError):
    pass


class NotInNormalizer(HeckeDualityError):
    pass


class NotASubgroup(HeckeDualityError):
    pass


class ParameterMismatch(HeckeDualityError):
    pass


class NonPolynomialQuotient(HeckeDualityError):
    pass


class IllegalCharacter(HeckeDualityError):
    pass


class NotAModule(HeckeDualityError):
    pass


class AssumptionViolated(HeckeDualityError):
    pass


class NoGoodRepresentative(HeckeDualityError):
    pass


class EmptySphere(HeckeDualityError):
    pass


__all__ = [name for name in dir() if name[0].isupper()]
