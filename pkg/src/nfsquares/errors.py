"""Typed errors raised across the library."""


class NFSquaresError(Exception):
    """Base class for all library errors."""


class ParseError(NFSquaresError):
    pass


class NonMonic(NFSquaresError):
    pass


class ReduciblePolynomial(NFSquaresError):
    pass


class FieldMismatch(NFSquaresError):
    pass


class DivisionByZero(NFSquaresError):
    pass


class ZeroInput(NFSquaresError):
    pass


class NonMaximalOrderAtP(NFSquaresError):
    """The equation order Z[theta] is not maximal at some prime we touched."""

    def __init__(self, p, message=None):
        self.p = p
        super().__init__(message or f"Z[theta] is not maximal at p = {p}")


class DiscriminantTooLarge(NFSquaresError):
    pass


class DimensionMismatch(NFSquaresError):
    pass


class DimensionTooSmall(NFSquaresError):
    pass


class NotANorm(NFSquaresError):
    """Norm equation is locally unsolvable; carries a witness place."""

    def __init__(self, place, message=None):
        self.place = place
        super().__init__(message or f"no local solution at {place}")


class SearchBoundExceeded(NFSquaresError):
    pass


class NotASumOfSquares(NFSquaresError):
    """Element is negative at some real place; carries the witness."""

    def __init__(self, place, message=None):
        self.place = place
        super().__init__(
            message or f"element is negative at the real place {place}"
        )


class LengthMismatch(NFSquaresError):
    pass


class LevelMismatch(NFSquaresError):
    pass


class PrimeSearchExhausted(NFSquaresError):
    pass
