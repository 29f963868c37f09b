"""Exception types raised by quadgen."""


class FieldError(ValueError):
    """Base class for all arithmetic and input errors in quadgen."""


class NotOddPrime(FieldError):
    pass


class ZeroInverse(FieldError, ZeroDivisionError):
    pass


class ZeroElement(FieldError):
    """A group operation on F_p* or F_{p^2}* received the zero element."""


class DividesModulus(FieldError):
    pass


class NotNonresidue(FieldError):
    """The value chosen for n is a square mod p, so F_p(sqrt n) is not a field."""


class NotInGroup(FieldError):
    """x**group_order is not the identity."""


class ContextMismatch(FieldError):
    pass
