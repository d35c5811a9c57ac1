"""
Local comparison of the connections attached to two disjoint sections.

Everything is computed in the affine chart where the first section sits at
infinity, the reference section is s = w and the second section is
z = lambda(w). Vector fields on the fibre are quadratic in z with coefficients
that are power jets in u = w - w0.
"""

from dataclasses import dataclass

from jetmoeb.errors import (
    CorrespondenceViolated,
    NonProportionalResult,
    SectionsIntersect,
)
from jetmoeb.scalars import Scalar
from jetmoeb.series import PowerJet, reciprocal


@dataclass(frozen=True)
class VFieldWSeries:
    """(q0(w) + q1(w) z + q2(w) z^2) d/dz."""

    q0: PowerJet
    q1: PowerJet
    q2: PowerJet

    @property
    def order(self) -> int:
        return min(self.q0.order, self.q1.order, self.q2.order)

    def __add__(self, other: "VFieldWSeries") -> "VFieldWSeries":
        return VFieldWSeries(self.q0 + other.q0, self.q1 + other.q1, self.q2 + other.q2)

    def scale(self, k: PowerJet) -> "VFieldWSeries":
        return VFieldWSeries(self.q0 * k, self.q1 * k, self.q2 * k)

    def derivative(self) -> "VFieldWSeries":
        """d/dw of each coefficient."""
        return VFieldWSeries(
            self.q0.derivative(), self.q1.derivative(), self.q2.derivative()
        )

    def is_zero(self) -> bool:
        return self.q0.is_zero() and self.q1.is_zero() and self.q2.is_zero()


@dataclass(frozen=True)
class OneFormWSeries:
    """coeff(w) dw, or coeff(w) d/dw when ``basis`` is ``"d/dw"``."""

    coeff: PowerJet
    basis: str = "dw"


@dataclass(frozen=True)
class CorrespondenceCertificate:
    order: int
    section: OneFormWSeries
    nabla: OneFormWSeries


def vf_bracket(v: VFieldWSeries, u: VFieldWSeries) -> VFieldWSeries:
    """[p d/dz, q d/dz] = (p dq/dz - q dp/dz) d/dz; the z^3 terms cancel."""
    return VFieldWSeries(
        v.q0 * u.q1 - u.q0 * v.q1,
        (v.q0 * u.q2 - u.q0 * v.q2) * 2,
        v.q1 * u.q2 - u.q1 * v.q2,
    )


def _w(lam: PowerJet, w0: Scalar | int) -> PowerJet:
    return PowerJet.variable(lam.order, like=lam[0]) + w0


def _gap(lam: PowerJet, w0: Scalar | int) -> PowerJet:
    """lambda(w) - w, which must not vanish at w0."""
    gap = lam - _w(lam, w0)
    if gap[0].is_zero():
        raise SectionsIntersect(f"lambda(w0) = w0 = {lam[0]}")
    return gap


def _square_about(center: PowerJet) -> VFieldWSeries:
    """(z - center(w))^2 d/dz."""
    one = PowerJet.constant(center.zero + 1, center.order)
    return VFieldWSeries(center * center, center * -2, one)


def connection_difference(lam: PowerJet, w0: Scalar | int = 0) -> VFieldWSeries:
    """
    lambda'(w) / (lambda(w) - w)^2 (z - w)^2 d/dz.

    Args:
        lam: Jet of lambda in u = w - w0
        w0: Base point
    """
    gap = _gap(lam, w0)
    inv = reciprocal(gap)
    k = lam.derivative() * inv * inv
    return _square_about(_w(lam, w0)).scale(k)


def nabla_difference(lam: PowerJet, w0: Scalar | int = 0) -> OneFormWSeries:
    """
    (nabla_2 - nabla_1)(d/dw)(d/dw), projected onto d/dw.

    The second section identifies d/dw with Y = (z - lambda)^2 / (w - lambda)^2
    d/dz. The difference is dY/dw + [X, Y] for X the connection difference,
    and has to be a multiple of (z - lambda)^2 d/dz.

    Raises:
        NonProportionalResult: If that field is not such a multiple
    """
    gap = _gap(lam, w0)
    inv = reciprocal(gap)
    y = _square_about(lam).scale(inv * inv)
    field = y.derivative() + vf_bracket(connection_difference(lam, w0), y)
    order = field.order
    lead = field.q2
    if not (
        field.q1.agrees_with(lead * lam * -2, order)
        and field.q0.agrees_with(lead * lam * lam, order)
    ):
        raise NonProportionalResult(
            "dY/dw + [X, Y] is not a multiple of (z - lambda)^2 d/dz"
        )
    return OneFormWSeries((lead * gap * gap).truncate(order), basis="d/dw")


def section_difference(lam: PowerJet, w0: Scalar | int = 0) -> OneFormWSeries:
    """-2 / (lambda(w) - w) dw."""
    return OneFormWSeries(reciprocal(_gap(lam, w0)) * -2)


def verify_correspondence(
    lam: PowerJet, w0: Scalar | int = 0
) -> CorrespondenceCertificate:
    """
    Check sigma_2 - sigma_1 = -(a_2 - a_1) coefficientwise.

    Raises:
        SectionsIntersect: If lambda(w0) = w0
        CorrespondenceViolated: At the first disagreeing coefficient
    """
    section = section_difference(lam, w0)
    nabla = nabla_difference(lam, w0)
    order = min(section.coeff.order, nabla.coeff.order)
    for k in range(order + 1):
        if section.coeff[k] != -nabla.coeff[k]:
            raise CorrespondenceViolated(k)
    return CorrespondenceCertificate(order, section, nabla)
