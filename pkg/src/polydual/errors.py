"""Exception types shared across the package."""


class PolydualError(Exception):
    """Base class for every error raised by this package."""


class CapExceeded(PolydualError):
    """An exhaustive computation grew past its configured cap.

    This is the honest answer for groups that are too large (or infinite);
    it is never a claim about the group itself.
    """

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap of {cap}")
        self.what = what
        self.cap = cap


class DegreeMismatch(PolydualError):
    pass


class ParseError(PolydualError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SggiError(PolydualError):
    """A generating list fails the string-group-of-involutions axioms."""


class NotInvolution(SggiError):
    def __init__(self, i: int):
        super().__init__(f"generator {i} is not an involution")
        self.i = i


class IdentityGenerator(SggiError):
    def __init__(self, i: int):
        super().__init__(f"generator {i} is the identity")
        self.i = i


class NotCommuting(SggiError):
    def __init__(self, i: int, j: int):
        super().__init__(f"generators {i} and {j} do not commute")
        self.i = i
        self.j = j


class NotInGroup(PolydualError):
    pass


class NotStringCGroup(PolydualError):
    pass


class NotACovering(PolydualError):
    pass


class NotPolytopal(PolydualError):
    pass


class NotInternallySelfDual(PolydualError):
    pass


class RankMismatch(PolydualError):
    pass


class BadParameter(PolydualError, ValueError):
    pass


class DegeneratePetrie(PolydualError):
    pass


class InfiniteCoxeterGroup(PolydualError):
    """Raised instead of enumerating a string Coxeter group known to be infinite.

    A self-dual polytope with such a group can only be externally self-dual,
    so no enumeration is attempted.
    """
