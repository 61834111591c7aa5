"""Exception hierarchy shared by all bellkit modules."""


class BellkitError(Exception):
    """Base class for every error raised by bellkit."""


class NonIntegerResult(BellkitError, ArithmeticError):
    """A scaling that was required to stay integral produced a fraction."""


class NotDivisible(BellkitError, ArithmeticError):
    """Exact division by a variable or monomial failed for some term."""


class MissingVariable(BellkitError, KeyError):
    """A polynomial was evaluated without a value for one of its variables."""


class ZeroPolynomial(BellkitError, ValueError):
    pass


class InvalidIndex(BellkitError, ValueError):
    """An (n, k) pair lies outside an algorithm's domain."""


class InvalidSplit(BellkitError, ValueError):
    pass


class ZeroLeadingCoefficient(BellkitError, ValueError):
    pass


class ZeroFirstCoefficient(BellkitError, ValueError):
    pass


class IrrationalPower(BellkitError, ValueError):
    """f0 ** k has no exact rational value."""


class InvalidExponent(BellkitError, ValueError):
    pass


class UnsupportedK(BellkitError, ValueError):
    pass
