"""
Truncated power series and Laurent jets over an exact (or float) field.

All jets live in a centered coordinate u = z - z0; the base point itself is
bookkept by the callers. A jet carries the index of its last valid coefficient
(its order). Every operation propagates the order pessimistically, and reading
a coefficient beyond it raises InsufficientOrder instead of returning zero.
"""

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from jetmoeb.errors import (
    CenterMismatch,
    DivisionByZeroSeries,
    InsufficientOrder,
    JetError,
    NotInvertibleGerm,
    ResidueObstruction,
    UnsupportedConstantTerm,
)
from jetmoeb.scalars import EXACT, Backend, ComplexExact, ComplexFloat, Scalar

_SCALAR_TYPES = (ComplexExact, ComplexFloat, int, Fraction)


def _convolve(a: Sequence[Scalar], b: Sequence[Scalar], length: int, zero) -> list:
    """First ``length`` coefficients of the Cauchy product of two lists."""
    out = []
    for m in range(length):
        acc = zero
        lo = max(0, m - len(b) + 1)
        hi = min(m, len(a) - 1)
        for i in range(lo, hi + 1):
            ai = a[i]
            if ai.is_zero():
                continue
            acc = acc + ai * b[m - i]
        out.append(acc)
    return out


def _first_nonzero(coeffs: Sequence[Scalar]) -> int:
    for i, c in enumerate(coeffs):
        if not c.is_zero():
            return i
    return len(coeffs)


class PowerJet:
    """Truncated power series c_0 + c_1 u + ... + c_K u^K."""

    __slots__ = ("coeffs",)

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Scalar]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise InsufficientOrder("A power jet needs at least a constant term")
        self.coeffs = coeffs

    @classmethod
    def from_values(cls, values: Iterable, backend: Backend = EXACT) -> "PowerJet":
        return cls(backend.scalars(values))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerJet":
        return cls([value] + [value * 0] * order)

    @classmethod
    def variable(cls, order: int, like: Scalar | None = None) -> "PowerJet":
        """The identity germ u, known to ``order``."""
        one = (like * 0 + 1) if like is not None else ComplexExact(1)
        zero = one * 0
        if order < 1:
            raise InsufficientOrder("The identity germ needs order >= 1")
        return cls([zero, one] + [zero] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def zero(self) -> Scalar:
        return self.coeffs[0] * 0

    def __getitem__(self, k: int) -> Scalar:
        if k > self.order:
            raise InsufficientOrder(
                f"Coefficient u^{k} requested from a jet of order {self.order}"
            )
        if k < 0:
            return self.zero
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, order + 1 if none."""
        return _first_nonzero(self.coeffs)

    def is_zero(self) -> bool:
        return self.valuation() > self.order

    def truncate(self, order: int) -> "PowerJet":
        if order > self.order:
            raise InsufficientOrder(
                f"Cannot extend a jet of order {self.order} to order {order}"
            )
        return PowerJet(self.coeffs[: order + 1])

    def to_laurent(self) -> "LaurentJet":
        return LaurentJet(self.coeffs, pole=0)

    def agrees_with(self, other: "PowerJet | LaurentJet", upto: int | None = None):
        """Coefficientwise equality up to the common (or given) order."""
        return self.to_laurent().agrees_with(other, upto)

    def evaluate_derivatives(self, k: int) -> list[Scalar]:
        """Derivatives f(0), f'(0), ..., f^(k)(0)."""
        return [self[i] * factorial(i) for i in range(k + 1)]

    # ring operations

    def __add__(self, other):
        if isinstance(other, PowerJet):
            order = min(self.order, other.order)
            return PowerJet(
                self.coeffs[i] + other.coeffs[i] for i in range(order + 1)
            )
        if isinstance(other, LaurentJet):
            return NotImplemented
        if isinstance(other, _SCALAR_TYPES):
            return PowerJet((self.coeffs[0] + other,) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "PowerJet":
        return PowerJet(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (PowerJet,) + _SCALAR_TYPES):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerJet):
            va, vb = self.valuation(), other.valuation()
            order = min(self.order + vb, other.order + va)
            return PowerJet(_convolve(self.coeffs, other.coeffs, order + 1, self.zero))
        if isinstance(other, LaurentJet):
            return NotImplemented
        if isinstance(other, _SCALAR_TYPES):
            return PowerJet(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerJet):
            return self * reciprocal(other)
        if isinstance(other, _SCALAR_TYPES):
            return PowerJet(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, exponent: int) -> "PowerJet":
        if exponent < 0:
            return reciprocal(self) ** -exponent
        result = PowerJet.constant(self.zero + 1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerJet):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PowerJet(order={self.order}, {[str(c) for c in self.coeffs]})"

    # calculus

    def derivative(self) -> "PowerJet":
        if self.order < 1:
            raise InsufficientOrder("Cannot differentiate a jet of order 0")
        return PowerJet(self.coeffs[k] * k for k in range(1, self.order + 1))

    def integrate(self) -> "PowerJet":
        return PowerJet(
            [self.zero] + [c / (k + 1) for k, c in enumerate(self.coeffs)]
        )


class LaurentJet:
    """
    Laurent jet c_{-p} u^{-p} + ... + c_K u^K with finite principal part.

    The pole order is normalized: a leading zero coefficient is stripped until
    the leading coefficient is nonzero or p = 0.
    """

    __slots__ = ("coeffs", "pole")

    coeffs: tuple
    pole: int

    def __init__(self, coeffs: Iterable[Scalar], pole: int = 0):
        coeffs = tuple(coeffs)
        if pole < 0:
            raise ValueError("Pole order must be nonnegative")
        if len(coeffs) < pole + 1:
            raise InsufficientOrder("A Laurent jet needs an order of at least 0")
        strip = 0
        while strip < pole and coeffs[strip].is_zero():
            strip += 1
        self.coeffs = coeffs[strip:]
        self.pole = pole - strip

    @classmethod
    def from_values(
        cls, values: Iterable, pole: int = 0, backend: Backend = EXACT
    ) -> "LaurentJet":
        return cls(backend.scalars(values), pole)

    @property
    def order(self) -> int:
        return len(self.coeffs) - self.pole - 1

    @property
    def zero(self) -> Scalar:
        return self.coeffs[0] * 0

    def __getitem__(self, k: int) -> Scalar:
        if k > self.order:
            raise InsufficientOrder(
                f"Coefficient u^{k} requested from a jet of order {self.order}"
            )
        if k < -self.pole:
            return self.zero
        return self.coeffs[k + self.pole]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, order + 1 if none."""
        return _first_nonzero(self.coeffs) - self.pole

    def is_zero(self) -> bool:
        return self.valuation() > self.order

    def residue(self) -> Scalar:
        return self[-1]

    def principal_part(self) -> list[Scalar]:
        """Coefficients of u^{-p} .. u^{-1}."""
        return list(self.coeffs[: self.pole])

    def coefficients(self, lo: int, hi: int) -> list[Scalar]:
        return [self[k] for k in range(lo, hi + 1)]

    def to_power(self) -> PowerJet:
        if self.pole:
            raise JetError(f"Laurent jet has a pole of order {self.pole}")
        return PowerJet(self.coeffs)

    def to_laurent(self) -> "LaurentJet":
        return self

    def truncate(self, order: int) -> "LaurentJet":
        if order > self.order:
            raise InsufficientOrder(
                f"Cannot extend a jet of order {self.order} to order {order}"
            )
        return LaurentJet(self.coeffs[: order + self.pole + 1], self.pole)

    def agrees_with(self, other: "PowerJet | LaurentJet", upto: int | None = None):
        other = other.to_laurent()
        top = min(self.order, other.order) if upto is None else upto
        lo = -max(self.pole, other.pole)
        return all(self[k] == other[k] for k in range(lo, top + 1))

    # ring operations

    @staticmethod
    def _lift(other) -> "LaurentJet | None":
        if isinstance(other, LaurentJet):
            return other
        if isinstance(other, PowerJet):
            return other.to_laurent()
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, _SCALAR_TYPES):
                return self + PowerJet.constant(self.zero + other, self.order)
            return NotImplemented
        pole = max(self.pole, o.pole)
        order = min(self.order, o.order)
        return LaurentJet(
            (self[k] + o[k] for k in range(-pole, order + 1)), pole=pole
        )

    __radd__ = __add__

    def __neg__(self) -> "LaurentJet":
        return LaurentJet((-c for c in self.coeffs), self.pole)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, _SCALAR_TYPES):
                return self + (-other)
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, _SCALAR_TYPES):
                return LaurentJet((c * other for c in self.coeffs), self.pole)
            return NotImplemented
        va, vb = self.valuation(), o.valuation()
        order = min(self.order + vb, o.order + va)
        pole = self.pole + o.pole
        if order < 0:
            raise InsufficientOrder(f"Product is only valid to order {order}")
        coeffs = _convolve(self.coeffs, o.coeffs, order + pole + 1, self.zero)
        return LaurentJet(coeffs, pole)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, _SCALAR_TYPES):
                return LaurentJet((c / other for c in self.coeffs), self.pole)
            return NotImplemented
        return self * laurent_reciprocal(o)

    def __pow__(self, exponent: int) -> "LaurentJet":
        if exponent < 0:
            return laurent_reciprocal(self) ** -exponent
        result = PowerJet.constant(self.zero + 1, self.order).to_laurent()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentJet):
            return NotImplemented
        return self.pole == other.pole and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"LaurentJet(pole={self.pole}, order={self.order}, "
            f"{[str(c) for c in self.coeffs]})"
        )

    # calculus

    def derivative(self) -> "LaurentJet":
        if self.order < 1:
            raise InsufficientOrder("Cannot differentiate a jet of order 0")
        if self.pole == 0:
            return self.to_power().derivative().to_laurent()
        # u^k -> k u^(k-1); the constant term lands on index -1 as zero
        coeffs = [c * (i - self.pole) for i, c in enumerate(self.coeffs)]
        return LaurentJet(coeffs, self.pole + 1)

    def integrate(self) -> "LaurentJet":
        if self.pole >= 1 and not self[-1].is_zero():
            raise ResidueObstruction(
                f"Cannot integrate a jet with residue {self[-1]}"
            )
        if self.pole == 0:
            return self.to_power().integrate().to_laurent()
        out = []
        for i, c in enumerate(self.coeffs):
            k = i - self.pole
            if k == -1:
                out.append(self.zero)  # constant of integration
            else:
                out.append(c / (k + 1))
        # indices shift up by one; the old index -1 slot now holds u^0
        return LaurentJet(out, self.pole - 1)


Jet = Union[PowerJet, LaurentJet]


def derivative(j: Jet) -> Jet:
    return j.derivative()


def integrate(j: Jet) -> Jet:
    return j.integrate()


def compose(outer: PowerJet, inner: PowerJet) -> PowerJet:
    """
    Coefficients of outer(inner(u)).

    Args:
        outer: Jet expanded about inner(0), i.e. already re-centered
        inner: Jet with zero constant term

    Returns:
        The composite jet, valid to min(K_inner, (K_outer + 1) * v - 1) where
        v is the valuation of inner
    """
    if not inner[0].is_zero():
        raise CenterMismatch(
            f"Inner jet has value {inner[0]}; re-center the outer jet first"
        )
    v = inner.valuation()
    order = min(inner.order, (outer.order + 1) * v - 1)
    zero = outer.zero
    result = [outer[0]] + [zero] * order
    inner_coeffs = inner.coeffs[: order + 1]
    power = [zero + 1]
    for k in range(1, min(outer.order, order // v) + 1):
        power = _convolve(power, inner_coeffs, order + 1, zero)
        ok = outer[k]
        if ok.is_zero():
            continue
        for i, p in enumerate(power):
            result[i] = result[i] + ok * p
    return PowerJet(result)


def reciprocal(j: PowerJet) -> PowerJet:
    """1/j for a jet with nonzero constant term, same order."""
    c0 = j[0]
    if c0.is_zero():
        raise DivisionByZeroSeries("Power jet with zero constant term")
    inv0 = 1 / c0
    out = [inv0]
    for m in range(1, j.order + 1):
        acc = j.zero
        for k in range(1, m + 1):
            acc = acc + j.coeffs[k] * out[m - k]
        out.append(-acc * inv0)
    return PowerJet(out)


def laurent_reciprocal(j: LaurentJet | PowerJet) -> LaurentJet:
    """1/j for any jet with a nonzero known coefficient."""
    j = j.to_laurent()
    v = j.valuation()
    if v > j.order:
        raise DivisionByZeroSeries("Laurent jet is zero to its order")
    unit = PowerJet(j[k] for k in range(v, j.order + 1))
    inv = reciprocal(unit)
    order = j.order - 2 * v
    if order < 0:
        raise InsufficientOrder(f"Reciprocal is only valid to order {order}")
    if v >= 0:
        return LaurentJet(inv.coeffs[: order + v + 1], pole=v)
    return LaurentJet([j.zero] * (-v) + list(inv.coeffs[: order + v + 1]), pole=0)


def compositional_inverse(j: PowerJet) -> PowerJet:
    """Series reversion: the jet g with j(g(u)) = g(j(u)) = u."""
    if not j[0].is_zero() or j[1].is_zero():
        raise NotInvertibleGerm(
            "Reversion needs a zero constant term and a nonzero linear term"
        )
    c1 = j[1]
    zero = j.zero
    g = [zero, 1 / c1] + [zero] * (j.order - 1)
    for m in range(2, j.order + 1):
        trial = compose(j, PowerJet(g[: m + 1]))
        g[m] = -trial[m] / c1
    return PowerJet(g)


def exp(j: PowerJet) -> PowerJet:
    """exp(j) for a jet with zero constant term."""
    if not j[0].is_zero():
        raise UnsupportedConstantTerm(
            f"exp of a nonzero constant term {j[0]} is not exact"
        )
    out = [j.zero + 1]
    for m in range(1, j.order + 1):
        acc = j.zero
        for k in range(1, m + 1):
            jk = j.coeffs[k]
            if not jk.is_zero():
                acc = acc + jk * k * out[m - k]
        out.append(acc / m)
    return PowerJet(out)
