"""Exception hierarchy.

Input problems derive from :class:`InputError` (CLI exit code 2); a
construction whose own theorem check fails raises
:class:`TheoremViolation` (exit code 3).
"""


class CodeError(Exception):
    """Base class for every error raised by this package."""


class InputError(CodeError, ValueError):
    """Bad parameters or malformed input."""


class NonPrimeModulus(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class FieldMismatch(InputError):
    pass


class ZeroInverse(CodeError, ZeroDivisionError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class NotDivisible(InputError):
    pass


class BudgetExceeded(CodeError):
    pass


class NotADivisor(InputError):
    pass


class NotInSubfield(InputError):
    pass


class CoefficientNotInBase(InputError):
    pass


class ZeroConstantTerm(InputError):
    pass


class NotCoprime(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class NotASquareField(InputError):
    pass


class BadLength(InputError):
    pass


class LengthMismatch(InputError):
    pass


class BadParameters(InputError):
    pass


class NotDualContaining(InputError):
    pass


class OddCharacteristic(InputError):
    pass


class EvenLength(InputError):
    pass


class BadLambda(InputError):
    pass


class WrongResidue(InputError):
    pass


class NoSquareRoot(InputError):
    pass


class TheoremViolation(CodeError):
    """A construction failed the property its theorem guarantees."""
