"""Domain errors raised by the jet kernel.

Every error is a ``ValueError`` so that callers treating bad input generically
keep working; the CLI maps ``MalformedInput`` to exit status 1 and every other
``JetError`` to exit status 2.
"""

from typing import Any


class JetError(ValueError):
    """Base class for all domain errors."""

    def payload(self) -> dict[str, Any]:
        """JSON-ready details attached to the CLI error document."""
        return {}

    def to_json(self) -> dict[str, Any]:
        return {
            "name": type(self).__name__,
            "message": str(self),
            "payload": self.payload(),
        }


class MalformedInput(JetError):
    pass


# series


class InsufficientOrder(JetError):
    pass


class CenterMismatch(JetError):
    pass


class DivisionByZeroSeries(JetError):
    pass


class NotInvertibleGerm(JetError):
    pass


class ResidueObstruction(JetError):
    pass


class UnsupportedConstantTerm(JetError):
    pass


# moebius


class InvalidMoebius(JetError):
    pass


class BranchedJetNotOsculable(JetError):
    pass


class NotABiholomorphismGerm(JetError):
    pass


# schwarzian / branching


class BranchOrderMismatch(JetError):
    def __init__(self, message: str, expected: int | None = None):
        super().__init__(message)
        self.expected = expected

    def payload(self) -> dict[str, Any]:
        return {"expected": self.expected}


class CoordinateNotInvertible(JetError):
    pass


class NotInRZero(JetError):
    pass


class OrderMismatch(JetError):
    def __init__(self, left: int, right: int):
        super().__init__(f"Branch orders differ: {left} != {right}")
        self.left = left
        self.right = right

    def payload(self) -> dict[str, Any]:
        return {"left": self.left, "right": self.right}


class DivisorMismatch(JetError):
    pass


# fuchs


class IndicialMismatch(JetError):
    def __init__(self, n: int, expected: Any, found: Any):
        super().__init__(
            f"Double-pole coefficient must be {expected} for branch order {n}, "
            f"got {found}"
        )
        self.n = n
        self.expected = expected
        self.found = found

    def payload(self) -> dict[str, Any]:
        from jetmoeb.codec import encode_scalar

        return {
            "n": self.n,
            "expected": encode_scalar(self.expected),
            "found": encode_scalar(self.found),
        }


class ObstructionViolated(JetError):
    def __init__(self, value: Any):
        super().__init__(f"Obstruction polynomial does not vanish: {value}")
        self.value = value

    def payload(self) -> dict[str, Any]:
        from jetmoeb.codec import encode_scalar

        return {"value": encode_scalar(self.value)}


class DegreeBoundExceeded(JetError):
    def __init__(self, n: int, bound: int):
        super().__init__(f"Branch order {n} exceeds the configured bound {bound}")
        self.n = n
        self.bound = bound

    def payload(self) -> dict[str, Any]:
        return {"n": self.n, "bound": self.bound}


# connections


class SectionsIntersect(JetError):
    pass


class NonProportionalResult(JetError):
    pass


class CorrespondenceViolated(JetError):
    def __init__(self, index: int):
        super().__init__(f"Section and connection differences disagree at w^{index}")
        self.index = index

    def payload(self) -> dict[str, Any]:
        return {"index": self.index}
