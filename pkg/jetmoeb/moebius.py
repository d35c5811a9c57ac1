"""
The Möbius group PSL(2, C) acting on CP^1 and on jets of map-germs.

Matrices are never normalized to determinant 1 (that needs square roots);
two matrices are equal when one is a nonzero multiple of the other. A germ
whose value is infinity is stored through its reciprocal chart: the power jet
of 1/F together with the point at infinity.
"""

from dataclasses import dataclass

from jetmoeb.errors import (
    BranchedJetNotOsculable,
    CenterMismatch,
    InsufficientOrder,
    InvalidMoebius,
    NotABiholomorphismGerm,
)
from jetmoeb.scalars import ComplexExact, Scalar
from jetmoeb.series import PowerJet, compose, compositional_inverse


@dataclass(frozen=True)
class PointCP1:
    """A point of CP^1; ``z is None`` is the point at infinity."""

    z: Scalar | None = None

    @classmethod
    def finite(cls, z: Scalar) -> "PointCP1":
        return cls(z)

    @property
    def is_infinity(self) -> bool:
        return self.z is None

    def __str__(self) -> str:
        return "inf" if self.z is None else str(self.z)


INFINITY = PointCP1(None)


@dataclass(frozen=True, eq=False)
class Moebius:
    """Projective 2x2 matrix (a, b; c, d) acting by z -> (az + b) / (cz + d)."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        if self.determinant().is_zero():
            raise InvalidMoebius(
                f"Degenerate matrix ({self.a}, {self.b}; {self.c}, {self.d})"
            )

    @classmethod
    def identity(cls, like: Scalar | None = None) -> "Moebius":
        one = (like * 0 + 1) if like is not None else ComplexExact(1)
        zero = one * 0
        return cls(one, zero, zero, one)

    @classmethod
    def translation(cls, shift: Scalar) -> "Moebius":
        one = shift * 0 + 1
        return cls(one, shift, one * 0, one)

    @classmethod
    def inversion(cls, like: Scalar | None = None) -> "Moebius":
        """z -> 1/z."""
        one = (like * 0 + 1) if like is not None else ComplexExact(1)
        zero = one * 0
        return cls(zero, one, one, zero)

    def entries(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)

    def determinant(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Moebius":
        return Moebius(self.d, -self.b, -self.c, self.a)

    def __mul__(self, other: "Moebius") -> "Moebius":
        """Composition: (g * h)(z) = g(h(z))."""
        if not isinstance(other, Moebius):
            return NotImplemented
        return Moebius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __call__(self, p: PointCP1) -> PointCP1:
        return apply_point(self, p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Moebius):
            return NotImplemented
        mine, theirs = self.entries(), other.entries()
        # proportional iff every 2x2 minor of the stacked rows vanishes
        return all(
            (mine[i] * theirs[j] - mine[j] * theirs[i]).is_zero()
            for i in range(4)
            for j in range(i + 1, 4)
        )

    def __hash__(self) -> int:
        entries = self.entries()
        lead = next(e for e in entries if not e.is_zero())
        return hash(tuple(e / lead for e in entries))


@dataclass(frozen=True)
class Sl2Field:
    """The vector field (p0 + p1 t + p2 t^2) d/dt on CP^1."""

    p0: Scalar
    p1: Scalar
    p2: Scalar

    def components(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.p0, self.p1, self.p2)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components())

    def __add__(self, other: "Sl2Field") -> "Sl2Field":
        return Sl2Field(self.p0 + other.p0, self.p1 + other.p1, self.p2 + other.p2)

    def __sub__(self, other: "Sl2Field") -> "Sl2Field":
        return Sl2Field(self.p0 - other.p0, self.p1 - other.p1, self.p2 - other.p2)

    def scale(self, k) -> "Sl2Field":
        return Sl2Field(self.p0 * k, self.p1 * k, self.p2 * k)

    @classmethod
    def vanishing_twice(cls, value: Scalar, t0) -> "Sl2Field":
        """value * (t - t0)^2 / 2 d/dt, expanded in t."""
        half = value / 2
        return cls(half * t0 * t0, -(value * t0), half)


@dataclass(frozen=True)
class VectorJet2:
    """2-jet (a(0), a'(0), a''(0)) of the coefficient of a vector field a d/dz."""

    a0: Scalar
    a1: Scalar
    a2: Scalar

    def components(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.a0, self.a1, self.a2)


def apply_point(g: Moebius, p: PointCP1) -> PointCP1:
    if p.z is None:
        if g.c.is_zero():
            return INFINITY
        return PointCP1(g.a / g.c)
    den = g.c * p.z + g.d
    if den.is_zero():
        return INFINITY
    return PointCP1((g.a * p.z + g.b) / den)


def act_on_powerjet(
    g: Moebius, f: PowerJet, value: PointCP1
) -> tuple[PowerJet, PointCP1]:
    """
    Postcompose a map-germ by a Möbius transformation.

    Args:
        g: The transformation
        f: Jet of the map if ``value`` is finite (then f(0) = value), jet of
            the reciprocal map if ``value`` is infinity (then f(0) = 0)
        value: The value of the map at the center

    Returns:
        Tuple of (jet, value) describing g composed with the map, in the same
        two-chart convention
    """
    one = PowerJet.constant(f.zero + 1, f.order)
    if value.z is None:
        if not f[0].is_zero():
            raise CenterMismatch("Reciprocal-chart jet must vanish at the center")
        num, den = one, f
    else:
        if f[0] != value.z:
            raise CenterMismatch(f"Jet value {f[0]} differs from the point {value}")
        num, den = f, one
    p = num * g.a + den * g.b
    q = num * g.c + den * g.d
    image = apply_point(g, value)
    if image.is_infinity:
        return q / p, image
    return p / q, image


def moebius_jet(g: Moebius, point: Scalar, order: int) -> PowerJet:
    """Power jet of g at a finite point with finite image."""
    u = PowerJet.variable(order, like=point)
    jet, image = act_on_powerjet(g, u + point, PointCP1(point))
    if image.is_infinity:
        raise CenterMismatch(f"Möbius map has a pole at {point}")
    return jet


def osculating_moebius(jet: tuple[Scalar, Scalar, Scalar], t0: Scalar = 0) -> Moebius:
    """
    The Möbius map sharing the 2-jet (f(t0), f'(t0), f''(t0)).

    Raises:
        BranchedJetNotOsculable: If f'(t0) = 0
    """
    f0, f1, f2 = jet
    if f1.is_zero():
        raise BranchedJetNotOsculable("Cannot osculate a jet with f'(t0) = 0")
    a = f0 * f2 - 2 * f1 * f1
    b = -2 * f0 * f1 - a * t0
    c = f2
    d = -2 * f1 - f2 * t0
    return Moebius(a, b, c, d)


def osculating_derivative(f: PowerJet, t0: Scalar | int = 0) -> Sl2Field:
    """
    Derivative at t0 of the family t -> osculating Möbius map of f at t.

    The family g(t) = (a, b; c, d)(t) is differentiated entrywise and read as a
    vector field through g^{-1} g' with (alpha, beta; gamma, delta) ->
    (beta + (alpha - delta) t - gamma t^2) d/dt.

    Args:
        f: Jet of f in the coordinate t - t0, known to order 3
        t0: The point, in the absolute coordinate t

    Returns:
        The field in the absolute coordinate t
    """
    if f.order < 3:
        raise InsufficientOrder("Osculating derivative needs a jet of order 3")
    f0, f1, f2, f3 = f.evaluate_derivatives(3)
    if f1.is_zero():
        raise BranchedJetNotOsculable("Cannot osculate a jet with f'(t0) = 0")
    a = f0 * f2 - 2 * f1 * f1
    da = f0 * f3 - 3 * f1 * f2
    b = -2 * f0 * f1 - a * t0
    db = -2 * f1 * f1 - 2 * f0 * f2 - a - da * t0
    c = f2
    dc = f3
    d = -2 * f1 - f2 * t0
    dd = -3 * f2 - f3 * t0
    det = a * d - b * c
    return Sl2Field(
        (db * d - dd * b) / det,
        (da * d - b * dc - a * dd + db * c) / det,
        (da * c - a * dc) / det,
    )


def pushforward_vectorjet(phi: PowerJet, v: VectorJet2) -> VectorJet2:
    """
    Image of a 2-jet of vector field under a local biholomorphism.

    Expressed in the source coordinate: the 2-jet of phi' * a.
    """
    if phi.order < 3:
        raise InsufficientOrder("Pushforward needs phi to order 3")
    _, p1, p2, p3 = phi.evaluate_derivatives(3)
    if p1.is_zero():
        raise NotABiholomorphismGerm("phi'(0) = 0")
    return VectorJet2(
        p1 * v.a0,
        p2 * v.a0 + p1 * v.a1,
        p3 * v.a0 + 2 * p2 * v.a1 + p1 * v.a2,
    )


def transport_vectorjet(phi: PowerJet, v: VectorJet2) -> VectorJet2:
    """
    Pushforward re-expressed in the target coordinate centered at phi(0).

    Unlike the source-coordinate form this is functorial under composition.
    """
    pushed = pushforward_vectorjet(phi, v)
    field = PowerJet([pushed.a0, pushed.a1, pushed.a2 / 2])
    back = compositional_inverse((phi - phi[0]).truncate(2))
    image = compose(field, back)
    return VectorJet2(image[0], image[1], image[2] * 2)


def sl2_bracket(v: Sl2Field, w: Sl2Field) -> Sl2Field:
    """[p d/dt, q d/dt] = (p q' - q p') d/dt; the cubic terms cancel."""
    return Sl2Field(
        v.p0 * w.p1 - w.p0 * v.p1,
        2 * (v.p0 * w.p2 - w.p0 * v.p2),
        v.p1 * w.p2 - w.p1 * v.p2,
    )
