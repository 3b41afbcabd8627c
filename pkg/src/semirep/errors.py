"""Exception hierarchy shared by every module of the package."""


class SemirepError(Exception):
    """Base class for all errors raised by semirep."""


# core
class IndexOutOfRange(SemirepError, ValueError):
    pass


class NonAssociative(SemirepError, ValueError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")


class EmptyGeneratorSet(SemirepError, ValueError):
    pass


# green
class NotRegular(SemirepError, ValueError):
    pass


class NotIdempotentInClass(SemirepError, ValueError):
    pass


class NoLinkingPair(SemirepError, RuntimeError):
    """Raised when two idempotents of a regular J-class cannot be linked.

    This cannot happen in a finite semigroup and signals an internal bug.
    """


# congruence
class SizeMismatch(SemirepError, ValueError):
    pass


# grouptheory
class NotClosed(SemirepError, ValueError):
    pass


class NoIdentity(SemirepError, ValueError):
    pass


class NoInverse(SemirepError, ValueError):
    pass


class ElementOutsideGroup(SemirepError, ValueError):
    pass


class NotNormal(SemirepError, ValueError):
    pass


class NotAbelian(SemirepError, ValueError):
    pass


class NotElementaryAbelian(SemirepError, ValueError):
    pass


class NotPrimeOrZero(SemirepError, ValueError):
    pass


class ConsistencyError(SemirepError, AssertionError):
    """Two independent routes to the same quantity disagreed."""


# constructions
class NoMeet(SemirepError, ValueError):
    def __init__(self, x, y):
        self.witness = (x, y)
        super().__init__(f"elements {x} and {y} have no greatest lower bound")


class NotAPartialOrder(SemirepError, ValueError):
    pass


class NotProperNontrivial(SemirepError, ValueError):
    pass


class TooLarge(SemirepError, ValueError):
    pass


class UnsupportedFieldSize(SemirepError, ValueError):
    pass


class UnknownName(SemirepError, ValueError):
    pass


# oracle
class NotASemilattice(SemirepError, ValueError):
    pass
