"""Exception types shared across the package."""


class McycleError(Exception):
    """Base class for errors raised by cycle construction and conversion."""


class BadPattern(McycleError):
    """A difference class has no usable value of multiplicity one, so no
    unambiguous representative can be chosen for it."""


class NotEulerian(McycleError):
    """The transition graph admits no eulerian circuit."""


class NotCoprimeShift(McycleError):
    """The per-block shift shares a factor with the ground-set size, so
    repeating the block would revisit starting symbols before covering
    them all."""


class NotAUcycle(McycleError):
    """The input sequence is not a valid universal cycle for t-subsets."""


class BudgetExceeded(McycleError):
    """The requested exhaustive search is larger than the configured budget."""


class Infeasible(McycleError):
    """No cycle with the requested parameters can exist, or the requested
    method does not cover them."""
