"""
Branched jets, their G-orbits and the affine structure on branching classes.

A branched jet of order n is the 2(n+1)-jet a_0 + a_{n+1} z^{n+1} + ... +
a_{2(n+1)} z^{2(n+1)} of a map-germ to CP^1. PSL(2, C) acts on it by
postcomposition; the orbit space is C^n with coordinates

    c_i = a_{n+1+i} / a_{n+1},  i = 1..n,

read off the jet once its value has been moved to 0. The orbit
representative (0, 1, c_1, ..., c_n, 0) is the normal form.
"""

from dataclasses import dataclass
from typing import ClassVar, Literal, Sequence

from jetmoeb.errors import (
    BranchOrderMismatch,
    CenterMismatch,
    DivisorMismatch,
    InvalidMoebius,
    NotABiholomorphismGerm,
    NotInRZero,
    OrderMismatch,
)
from jetmoeb.moebius import INFINITY, Moebius, PointCP1, act_on_powerjet
from jetmoeb.scalars import ComplexExact, Scalar
from jetmoeb.series import PowerJet, compose

Mode = Literal["preschwarzian", "schwarzian"]
MODES: tuple[Mode, ...] = ("preschwarzian", "schwarzian")


@dataclass(frozen=True)
class BranchedJet:
    """
    Element of R_{x,n}.

    Args:
        n: Branch order, at least 1
        value: a_0; at infinity the coefficients are those of the reciprocal
            map, whose value is 0
        a: Coefficients a_{n+1} .. a_{2(n+1)}
    """

    n: int
    value: PointCP1
    a: tuple

    def __post_init__(self):
        if self.n < 1:
            raise BranchOrderMismatch(f"Branch order must be >= 1, got {self.n}")
        if len(self.a) != self.n + 2:
            raise BranchOrderMismatch(
                f"Branch order {self.n} needs {self.n + 2} coefficients, "
                f"got {len(self.a)}",
                expected=self.n,
            )
        if self.a[0].is_zero():
            raise BranchOrderMismatch(
                f"Leading coefficient a_{self.n + 1} vanishes", expected=self.n
            )

    @property
    def top(self) -> int:
        """Index 2(n+1) of the last coefficient."""
        return 2 * (self.n + 1)

    def coefficient(self, k: int) -> Scalar:
        """a_k for n+1 <= k <= 2(n+1)."""
        return self.a[k - self.n - 1]

    def to_powerjet(self) -> PowerJet:
        zero = self.a[0] * 0
        base = zero if self.value.z is None else self.value.z
        return PowerJet([base] + [zero] * self.n + list(self.a))

    @classmethod
    def from_powerjet(
        cls, f: PowerJet, value: PointCP1 | None = None, n: int | None = None
    ) -> "BranchedJet":
        """
        Read a branched jet from a power jet known to order >= 2(n+1).

        Args:
            f: Jet of the map, or of its reciprocal when ``value`` is infinity
            value: Value at the center; f(0) when omitted
            n: Expected branch order; inferred when omitted
        """
        if value is None:
            value = PointCP1(f[0])
        elif value.z is None:
            if not f[0].is_zero():
                raise CenterMismatch("Reciprocal-chart jet must vanish at the center")
        elif f[0] != value.z:
            raise CenterMismatch(f"Jet value {f[0]} differs from the point {value}")
        found = (f - f[0]).valuation() - 1
        if n is not None and found != n:
            raise BranchOrderMismatch(
                f"Jet has branch order {found}, expected {n}", expected=n
            )
        if found < 1:
            raise BranchOrderMismatch(f"Jet is unbranched (order {found})")
        return cls(found, value, tuple(f[k] for k in range(found + 1, 2 * found + 3)))


@dataclass(frozen=True)
class BranchingClass:
    """A point of C^n classifying G-orbits of branched jets."""

    n: int
    c: tuple

    def __post_init__(self):
        if self.n < 1:
            raise BranchOrderMismatch(f"Branch order must be >= 1, got {self.n}")
        if len(self.c) != self.n:
            raise BranchOrderMismatch(
                f"A class of order {self.n} has {self.n} coordinates, "
                f"got {len(self.c)}",
                expected=self.n,
            )


@dataclass(frozen=True)
class OneFormDelta:
    """Coefficients eta_0 .. eta_{n-1} of a holomorphic one-form jet."""

    n: int
    eta: tuple

    mode: ClassVar[Mode] = "preschwarzian"

    def __post_init__(self):
        _check_length(self.n, self.eta)

    @property
    def values(self) -> tuple:
        return self.eta

    def __add__(self, other: "OneFormDelta") -> "OneFormDelta":
        _check_orders(self.n, other.n)
        return OneFormDelta(self.n, tuple(x + y for x, y in zip(self.eta, other.eta)))

    def __neg__(self) -> "OneFormDelta":
        return OneFormDelta(self.n, tuple(-x for x in self.eta))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.eta)


@dataclass(frozen=True)
class QuadDiffDelta:
    """Coefficients beta_{-1} .. beta_{n-2} of a quadratic differential jet."""

    n: int
    beta: tuple

    mode: ClassVar[Mode] = "schwarzian"

    def __post_init__(self):
        _check_length(self.n, self.beta)

    @property
    def values(self) -> tuple:
        return self.beta

    def __add__(self, other: "QuadDiffDelta") -> "QuadDiffDelta":
        _check_orders(self.n, other.n)
        return QuadDiffDelta(
            self.n, tuple(x + y for x, y in zip(self.beta, other.beta))
        )

    def __neg__(self) -> "QuadDiffDelta":
        return QuadDiffDelta(self.n, tuple(-x for x in self.beta))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.beta)


Delta = OneFormDelta | QuadDiffDelta


@dataclass(frozen=True)
class DivisorClassData:
    """
    A branching class at each point of a divisor sum n_i y_i.

    Args:
        points: Pairs (label, class); labels are pairwise distinct
    """

    points: tuple[tuple[str, BranchingClass], ...] = ()

    def __post_init__(self):
        labels = [label for label, _ in self.points]
        if len(set(labels)) != len(labels):
            raise DivisorMismatch(f"Duplicate labels in {labels}")

    @property
    def degree(self) -> int:
        return sum(klass.n for _, klass in self.points)


@dataclass(frozen=True)
class DivisorDelta:
    """Per-point deltas; the total dimension is the degree of the divisor."""

    points: tuple[tuple[str, Delta], ...] = ()

    @property
    def dimension(self) -> int:
        return sum(len(delta.values) for _, delta in self.points)


def _check_orders(left: int, right: int) -> None:
    if left != right:
        raise OrderMismatch(left, right)


def _check_length(n: int, values: tuple) -> None:
    if len(values) != n:
        raise BranchOrderMismatch(
            f"Branch order {n} needs {n} coefficients, got {len(values)}", expected=n
        )


def recenter(j: BranchedJet) -> BranchedJet:
    """
    Move the value of a jet to 0.

    A finite value is translated away, which leaves a_{n+1}.. untouched. At
    infinity the stored reciprocal-chart jet is already the jet of the
    inversion z -> 1/z applied to the map.
    """
    zero = j.a[0] * 0
    return BranchedJet(j.n, PointCP1(zero), j.a)


def act(g: Moebius, j: BranchedJet) -> BranchedJet:
    """Postcompose a branched jet by a Möbius transformation."""
    jet, image = act_on_powerjet(g, j.to_powerjet(), j.value)
    return BranchedJet.from_powerjet(jet, image, n=j.n)


def h_act(alpha: Scalar, gamma: Scalar, delta: Scalar, j: BranchedJet) -> BranchedJet:
    """
    Action of z -> alpha z / (gamma z + delta), the stabilizer of 0, on R^0_{x,n}.

    Raises:
        NotInRZero: If the jet does not take the value 0
    """
    if j.value.z is None or not j.value.z.is_zero():
        raise NotInRZero(f"Jet takes the value {j.value}, not 0")
    if (alpha * delta).is_zero():
        raise InvalidMoebius("h_act needs alpha * delta != 0")
    ratio = alpha / delta
    lead = j.a[0]
    scaled = [ratio * x for x in j.a]
    scaled[-1] = scaled[-1] - alpha * gamma / (delta * delta) * lead * lead
    return BranchedJet(j.n, j.value, tuple(scaled))


def class_of(j: BranchedJet) -> BranchingClass:
    centered = recenter(j)
    lead = centered.a[0]
    return BranchingClass(j.n, tuple(x / lead for x in centered.a[1 : j.n + 1]))


def normal_form(c: BranchingClass) -> BranchedJet:
    """The orbit representative (0, 1, c_1, ..., c_n, 0)."""
    zero = c.c[0] * 0 if c.c else ComplexExact(0)
    return BranchedJet(c.n, PointCP1(zero), (zero + 1, *c.c, zero))


def h_orbit_representative(j: BranchedJet) -> tuple[Scalar, Scalar, Scalar]:
    """
    Parameters (alpha, gamma, delta) of the element of H taking the recentered
    jet to its normal form.
    """
    centered = recenter(j)
    lead = centered.a[0]
    one = lead * 0 + 1
    return one / lead, centered.a[-1] / (lead * lead), one


def class_from_affine_jet(f: PowerJet, n: int) -> BranchingClass:
    """
    Class of a branched germ from its (2n+1)-jet only.

    Affine maps already act transitively on the missing top coefficient, so
    a_{2(n+1)} is not needed.
    """
    for k in range(1, n + 1):
        if not f[k].is_zero():
            raise BranchOrderMismatch(
                f"Coefficient u^{k} of a branched jet of order {n} is nonzero",
                expected=n,
            )
    lead = f[n + 1]
    if lead.is_zero():
        raise BranchOrderMismatch(
            f"Coefficient u^{n + 1} vanishes; branch order exceeds {n}", expected=n
        )
    return BranchingClass(n, tuple(f[k] / lead for k in range(n + 2, 2 * n + 2)))


def postcompose_germ(j: BranchedJet, alpha: PowerJet) -> BranchedJet:
    """
    Jet of alpha composed with the germ of j.

    Args:
        j: The branched jet
        alpha: Biholomorphism germ expanded at j's value, known to order >= 2;
            at infinity it is written in the reciprocal charts and must fix
            infinity
    """
    if alpha[1].is_zero():
        raise NotABiholomorphismGerm("alpha'(value) = 0")
    f = j.to_powerjet()
    image = compose(alpha, f - f[0]).truncate(j.top)
    if j.value.z is None:
        if not alpha[0].is_zero():
            raise CenterMismatch("alpha must fix infinity")
        return BranchedJet.from_powerjet(image, INFINITY, n=j.n)
    if alpha[0] != j.value.z:
        raise CenterMismatch(
            f"alpha is expanded at {alpha[0]}, the jet takes the value {j.value}"
        )
    return BranchedJet.from_powerjet(image, n=j.n)


def diff_classes(
    c2: BranchingClass, c1: BranchingClass, mode: Mode = "preschwarzian"
) -> Delta:
    """
    c2 - c1 in the affine structure on classes.

    In preschwarzian mode this is the jet of [g, z] - [f, z] for germs g, f of
    class c2, c1; in schwarzian mode the jet of {g, z} - {f, z}.
    """
    from jetmoeb.fuchs import d_map, s_map

    _check_orders(c2.n, c1.n)
    if mode == "preschwarzian":
        left, right = d_map(c2), d_map(c1)
        return OneFormDelta(c1.n, tuple(x - y for x, y in zip(left, right)))
    if mode == "schwarzian":
        left, right = s_map(c2), s_map(c1)
        return QuadDiffDelta(c1.n, tuple(x - y for x, y in zip(left, right)))
    raise ValueError(f"Unknown mode: {mode}")


def translate_class(c: BranchingClass, d: Delta) -> BranchingClass:
    """The unique class c' with diff_classes(c', c) = d."""
    from jetmoeb.fuchs import d_inverse, d_map, s_inverse, s_map

    _check_orders(c.n, d.n)
    if isinstance(d, OneFormDelta):
        return d_inverse([x + y for x, y in zip(d_map(c), d.eta)], c.n)
    return s_inverse([x + y for x, y in zip(s_map(c), d.beta)], c.n)


def _matched(
    left: Sequence[tuple[str, object]], right: Sequence[tuple[str, object]]
) -> list[tuple[str, object, object]]:
    left_labels = [label for label, _ in left]
    right_labels = [label for label, _ in right]
    if left_labels != right_labels:
        raise DivisorMismatch(f"Labels differ: {left_labels} != {right_labels}")
    return [(label, a, b) for (label, a), (_, b) in zip(left, right)]


def divisor_diff(
    a: DivisorClassData, b: DivisorClassData, mode: Mode = "preschwarzian"
) -> DivisorDelta:
    points = []
    for label, c2, c1 in _matched(a.points, b.points):
        assert isinstance(c2, BranchingClass) and isinstance(c1, BranchingClass)
        if c2.n != c1.n:
            raise DivisorMismatch(f"Orders differ at {label}: {c2.n} != {c1.n}")
        points.append((label, diff_classes(c2, c1, mode)))
    return DivisorDelta(tuple(points))


def divisor_translate(a: DivisorClassData, d: DivisorDelta) -> DivisorClassData:
    points = []
    for label, klass, delta in _matched(a.points, d.points):
        assert isinstance(klass, BranchingClass)
        assert isinstance(delta, (OneFormDelta, QuadDiffDelta))
        if klass.n != delta.n:
            raise DivisorMismatch(f"Orders differ at {label}: {klass.n} != {delta.n}")
        points.append((label, translate_class(klass, delta)))
    return DivisorClassData(tuple(points))
