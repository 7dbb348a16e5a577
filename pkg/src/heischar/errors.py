"""Exception types shared across the package."""


class NotPrimePower(ValueError):
    """Raised when a field order is not a prime power."""


class TooLarge(ValueError):
    """Raised when a field order exceeds the supported maximum."""


class FieldMismatch(ValueError):
    """Raised when elements of different fields are combined."""


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting the zero element of a field."""


class DimensionMismatch(ValueError):
    """Raised when matrices, group elements or functionals of different
    sizes (or over different fields) are combined."""


class NotAPartition(ValueError):
    """Raised when a block family does not partition {1, ..., n}."""


class UnknownFamily(ValueError):
    """Raised for an unrecognized path or partition family name."""


class NotInFamily(ValueError):
    """Raised when a lattice path lies outside the family a map expects."""


class NotClassX(ValueError):
    """Raised when a functional is not of class X, i.e. some block of its
    upper form is not of type (a), (b) or (c).  ``block_index`` records the
    first offending block (0-based)."""

    def __init__(self, block_index: int, message: str | None = None):
        self.block_index = block_index
        super().__init__(message or f"block {block_index} has no valid type")


class NonIntegralDivision(ArithmeticError):
    """Raised when a polynomial division that must be exact leaves a
    remainder.  Always indicates an internal inconsistency."""


class SpaceTooLarge(RuntimeError):
    """Raised when an enumeration or orbit search would exceed its size
    guard.  ``bound`` is the active limit, ``needed`` the (estimated or
    reached) demand."""

    def __init__(self, bound: int, needed: int | None = None, what: str = "state space"):
        self.bound = bound
        self.needed = needed
        detail = f" (needs {needed})" if needed is not None else ""
        super().__init__(f"{what} exceeds the size guard of {bound}{detail}; "
                         "raise the limit argument or set HEISCHAR_SPACE_LIMIT")
