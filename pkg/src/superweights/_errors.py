"""Exception hierarchy shared by every module."""


class SuperweightsError(ValueError):
    """Base class for invalid input to the library."""


class ParseError(SuperweightsError):
    pass


class NotDominant(SuperweightsError):
    pass


class NotIncomparable(SuperweightsError):
    pass


class RootNotSimpleInBase(SuperweightsError):
    pass


class NotIsoSet(SuperweightsError):
    pass


class InvalidAtomIndexSet(SuperweightsError):
    pass


class NotDaggerDiagram(SuperweightsError):
    pass


class TooManyStars(SuperweightsError):
    pass


class EnumerationTooLarge(SuperweightsError):
    pass
