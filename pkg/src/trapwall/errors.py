"""Exception types shared across the package."""


class TrapwallError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TrapwallError, ValueError):
    """Input text does not match the sexagesimal or rational grammar."""


class DomainError(TrapwallError, ValueError):
    """An argument violates an operation's precondition."""


class NonTerminatingError(TrapwallError):
    """The value has no finite base-60 expansion (denominator not regular)."""


class PlacesExceededError(TrapwallError):
    """The value terminates in base 60 but needs more fractional places than allowed."""


class NotRegularError(TrapwallError):
    """The integer has a prime factor other than 2, 3 or 5."""


class IrrationalRootsError(TrapwallError):
    """The quadratic's roots are irrational (discriminant kernel not a perfect square)."""
