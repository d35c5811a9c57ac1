"""
Coefficient fields for jets.

Two interchangeable scalar types share one interface (ring operations,
division, ``is_zero``, ``==``):

- ComplexExact: Gaussian rationals, re + im*i with ``fractions.Fraction`` parts.
  Every acceptance check runs on this field.
- ComplexFloat: machine complex numbers compared with a relative tolerance,
  for speed experiments.

Jets never mix the two; ``Backend`` converts literal input into the scalar
type of the selected field.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class ComplexExact:
    """Exact complex number with arbitrary-precision rational parts."""

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: RationalLike | str = 0, im: RationalLike | str = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "ComplexExact":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def parse(cls, literal: str) -> "ComplexExact":
        """
        Parse a literal such as ``"3/2"``, ``"-i"``, ``"1/2-3/4i"``.

        Raises:
            ValueError: If the literal is not a Gaussian rational
        """
        text = literal.replace(" ", "")
        if not text:
            raise ValueError("Empty complex literal")
        if not text.endswith("i"):
            return cls(Fraction(text))
        body = text[:-1]
        split = max(body.rfind("+"), body.rfind("-"))
        if split > 0:
            re_text, im_text = body[:split], body[split:]
        else:
            re_text, im_text = "0", body
        if im_text in ("", "+"):
            im_text = "1"
        elif im_text == "-":
            im_text = "-1"
        return cls(Fraction(re_text), Fraction(im_text))

    @staticmethod
    def _coerce(other) -> "ComplexExact | None":
        if isinstance(other, ComplexExact):
            return other
        if isinstance(other, (int, Fraction)):
            return ComplexExact._make(Fraction(other), Fraction(0))
        return None

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "ComplexExact":
        return ComplexExact._make(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexExact._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexExact._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexExact._make(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ComplexExact._make(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.im == 0 and o.im == 0:
            return ComplexExact._make(self.re * o.re, Fraction(0))
        return ComplexExact._make(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("ComplexExact division by zero")
        if o.im == 0:
            return ComplexExact._make(self.re / o.re, self.im / o.re)
        norm = o.re * o.re + o.im * o.im
        return ComplexExact._make(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self) -> "ComplexExact":
        return ComplexExact._make(-self.re, -self.im)

    def __pos__(self) -> "ComplexExact":
        return self

    def __pow__(self, exponent: int) -> "ComplexExact":
        if exponent < 0:
            return ComplexExact(1) / self**-exponent
        result = ComplexExact(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"ComplexExact({self})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


class ComplexFloat:
    """Machine complex number whose equality is tolerance-based."""

    __slots__ = ("value", "tolerance")

    value: complex
    tolerance: float

    def __init__(self, value: complex | float | int, tolerance: float):
        self.value = complex(value)
        self.tolerance = tolerance

    def _coerce(self, other) -> "complex | None":
        if isinstance(other, ComplexFloat):
            return other.value
        if isinstance(other, ComplexExact):
            return other.to_complex()
        if isinstance(other, (int, float, complex)):
            return complex(other)
        if isinstance(other, Fraction):
            return complex(float(other))
        return None

    def _wrap(self, value: complex) -> "ComplexFloat":
        return ComplexFloat(value, self.tolerance)

    @property
    def re(self) -> float:
        return self.value.real

    @property
    def im(self) -> float:
        return self.value.imag

    def is_zero(self) -> bool:
        return abs(self.value) <= self.tolerance

    def is_real(self) -> bool:
        return abs(self.value.imag) <= self.tolerance

    def conjugate(self) -> "ComplexFloat":
        return self._wrap(self.value.conjugate())

    def to_complex(self) -> complex:
        return self.value

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if abs(o) <= self.tolerance:
            raise ZeroDivisionError("ComplexFloat division by zero")
        return self._wrap(self.value / o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            raise ZeroDivisionError("ComplexFloat division by zero")
        return self._wrap(o / self.value)

    def __neg__(self) -> "ComplexFloat":
        return self._wrap(-self.value)

    def __pos__(self) -> "ComplexFloat":
        return self

    def __pow__(self, exponent: int) -> "ComplexFloat":
        return self._wrap(self.value**exponent)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        scale = max(1.0, abs(self.value), abs(o))
        return abs(self.value - o) <= self.tolerance * scale

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ComplexFloat({self.value!r})"

    def __str__(self) -> str:
        return str(self.value)


Scalar = Union[ComplexExact, ComplexFloat]


@dataclass(frozen=True)
class Backend:
    """
    Selected coefficient field.

    Args:
        name: ``"exact"`` or ``"float"``
        tolerance: Relative tolerance, used by the float field only
    """

    name: str = "exact"
    tolerance: float = 1e-10

    def __post_init__(self):
        if self.name not in ("exact", "float"):
            raise ValueError(f"Unknown backend: {self.name}")

    def scalar(self, value: "Scalar | RationalLike | str | complex") -> Scalar:
        """Convert a literal or a scalar of either field into this field."""
        if isinstance(value, str):
            value = ComplexExact.parse(value)
        if self.name == "exact":
            if isinstance(value, ComplexExact):
                return value
            if isinstance(value, (int, Fraction)):
                return ComplexExact(value)
            raise TypeError(f"Cannot represent {value!r} exactly")
        if isinstance(value, ComplexFloat):
            return ComplexFloat(value.value, self.tolerance)
        if isinstance(value, ComplexExact):
            return ComplexFloat(value.to_complex(), self.tolerance)
        if isinstance(value, Fraction):
            return ComplexFloat(float(value), self.tolerance)
        return ComplexFloat(value, self.tolerance)

    def scalars(self, values) -> list[Scalar]:
        return [self.scalar(v) for v in values]


EXACT = Backend("exact")


def exact(value: "RationalLike | str | ComplexExact") -> ComplexExact:
    """Shorthand for an exact scalar."""
    result = EXACT.scalar(value)
    assert isinstance(result, ComplexExact)
    return result
