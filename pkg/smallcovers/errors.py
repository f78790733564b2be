"""The exceptions raised by this package."""
import typing


class SmallCoversException(Exception):
    """The base of every exception raised by this package."""


class DimensionError(SmallCoversException, ValueError):
    """Raised on shape mismatches, out of range indices and dimension caps."""


class SingularMatrixError(SmallCoversException, ArithmeticError):
    """Raised when an inverse is requested for a matrix that is singular over GF(2)."""


class MembershipError(SmallCoversException, ValueError):
    """Raised when a value falls outside the set an operation is defined on."""


class CycleError(MembershipError):
    """
    Raised when a digraph that must be acyclic has a directed cycle.

    Attributes:
        cycle (tuple): The nodes of one directed cycle, each with an edge to the next and the last to the first.
    """

    def __init__(self, cycle: typing.Sequence[int]) -> None:
        """
        Args:
            cycle (sequence): A witness cycle.
        """
        self.cycle = tuple(cycle)
        super().__init__(f"Digraph has a directed cycle: {' -> '.join(map(str, self.cycle + self.cycle[:1]))}")


class CapExceededError(SmallCoversException):
    """
    Raised when an exhaustive search is requested beyond its configured cap.

    Attributes:
        what (str): The search that was refused.
        requested (int): The requested size.
        cap (int): The configured cap.
    """

    def __init__(self, what: str, requested: int, cap: int) -> None:
        """
        Args:
            what (str): The search that was refused.
            requested (int): The requested size.
            cap (int): The configured cap.
        """
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what} at size {requested} exceeds the cap of {cap} (allow long runs to raise it)")


class ConsistencyError(SmallCoversException, AssertionError):
    """Raised when two exact computations that must agree don't."""


def check_cap(what: str, requested: int, cap: int) -> None:
    """
    Raise if a requested search size is over its cap.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `requested > cap`.
    """
    if requested > cap:
        raise CapExceededError(what, requested, cap)


__all__ = [
    "SmallCoversException",
    "DimensionError",
    "SingularMatrixError",
    "MembershipError",
    "CycleError",
    "CapExceededError",
    "ConsistencyError",
    "check_cap",
]
