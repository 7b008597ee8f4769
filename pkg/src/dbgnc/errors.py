class DBGNCError(Exception):
    """Base class for cryptographic failures raised by this package."""


class NotOnCurveError(DBGNCError, ValueError):
    pass


class RetryExhaustedError(DBGNCError):
    """A randomized search hit its retry bound."""


class RangeTooLargeError(DBGNCError, ValueError):
    pass


class DecryptionError(DBGNCError):
    """The discrete log of a (projected) ciphertext is not in the message range."""


class DegenerateError(DBGNCError):
    """A protocol value landed on the identity or on a point with a zero coordinate."""


class InsufficientSharesError(DBGNCError):
    pass
