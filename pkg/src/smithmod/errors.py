"""Exception hierarchy shared by every smithmod module."""


class SmithModError(Exception):
    """Base class for all errors raised by smithmod."""


class InvalidInput(SmithModError, ValueError):
    """Malformed or inconsistent input data."""


# exact arithmetic
class DivisionByZero(SmithModError, ZeroDivisionError):
    pass


class NotDivisible(SmithModError, ArithmeticError):
    pass


class ZeroLeading(InvalidInput):
    pass


class ZeroPolynomial(InvalidInput):
    pass


class NotSplit(SmithModError):
    """A polynomial that must split over the rationals does not."""


# multisets and the order
class NotSubmultiset(InvalidInput):
    pass


class NotARoot(InvalidInput):
    pass


class NotAMember(InvalidInput):
    pass


class StarUndefined(SmithModError):
    pass


# algebra data
class ZeroG(InvalidInput):
    pass


class ConstantU(InvalidInput):
    pass


class NotConstant(SmithModError):
    """p(h+1)q(h) - u(h) is not a constant."""


class RelationViolated(SmithModError):
    pass


class NotMonic(InvalidInput):
    pass


class ZeroTwist(InvalidInput):
    pass


# enumeration
class CapExceeded(SmithModError):
    pass


class ConsistencyError(SmithModError, AssertionError):
    """An internal cross-check between two independent computations failed."""


# rank n
class SizeMismatch(InvalidInput):
    pass


class DualUnsupported(SmithModError):
    pass


class WrongX(InvalidInput):
    pass


class WrongDegree(InvalidInput):
    pass


class GridTooSmall(UserWarning):
    """The oracle search grid cannot contain every minimal element."""
