"""
Solving S(f) = phi at a cone point of branch order n.

Writing f''/f' = n/z + v with v = sum delta_k z^k turns S(f) = phi into the
Riccati recursion

    (m + 1 - n) delta_{m+1} - 1/2 sum_{i+j=m} delta_i delta_j = alpha_m,

m >= -1, provided alpha_{-2} = (1 - (n+1)^2) / 2. The equation at m = n - 1
does not involve delta_n: its residual is the obstruction polynomial P_n, and
delta_n is a free parameter.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, TypeVar

from sympy import QQ, Poly, symbols

from jetmoeb.branching import (
    BranchedJet,
    BranchingClass,
    class_from_affine_jet,
    normal_form,
)
from jetmoeb.config import MAX_OBSTRUCTION_ORDER
from jetmoeb.errors import (
    BranchOrderMismatch,
    DegreeBoundExceeded,
    IndicialMismatch,
    InsufficientOrder,
    ObstructionViolated,
)
from jetmoeb.scalars import Scalar
from jetmoeb.schwarzian import pre_schwarzian, schwarzian
from jetmoeb.series import LaurentJet, PowerJet, exp

T = TypeVar("T")


@dataclass(frozen=True)
class QuadDiffLaurent:
    """
    phi = sum_{k >= -2} alpha_k z^k, the right-hand side for branch order n.

    Args:
        n: Target branch order
        alpha: Coefficients alpha_{-2}, alpha_{-1}, ..., alpha_K
    """

    n: int
    alpha: tuple

    def __post_init__(self):
        if self.n < 0:
            raise BranchOrderMismatch(f"Branch order must be >= 0, got {self.n}")
        if len(self.alpha) < 2:
            raise InsufficientOrder("phi needs at least alpha_{-2} and alpha_{-1}")

    @property
    def order(self) -> int:
        return len(self.alpha) - 3

    @property
    def zero(self) -> Scalar:
        return self.alpha[0] * 0

    def __getitem__(self, m: int) -> Scalar:
        if m > self.order:
            raise InsufficientOrder(
                f"alpha_{m} requested from phi known to order {self.order}"
            )
        return self.alpha[m + 2]

    def to_laurent(self) -> LaurentJet:
        return LaurentJet(self.alpha, pole=2)


@dataclass(frozen=True)
class RiccatiSolution:
    """Coefficients delta_0 .. delta_{K+1} of f''/f' - n/z."""

    n: int
    delta: tuple
    free_param: Scalar

    def as_laurent(self) -> LaurentJet:
        """f''/f' itself."""
        zero = self.delta[0] * 0
        return LaurentJet((zero + self.n, *self.delta), pole=1)


@dataclass(frozen=True)
class ObstructionPoly:
    """P_n in the variables X_1 .. X_{n+1}, where X_k stands for alpha_{k-2}."""

    n: int
    poly: Poly

    @property
    def variables(self) -> list[str]:
        return [str(g) for g in self.poly.gens]

    def monomials(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """(exponents, coefficient) pairs in sympy's term order."""
        return [
            (
                tuple(int(e) for e in monom),
                Fraction(int(c.numerator), int(c.denominator)),
            )
            for monom, c in self.poly.terms()
        ]

    def evaluate(self, values: Sequence[Scalar]) -> Scalar:
        """P_n(alpha_{-1}, ..., alpha_{n-1})."""
        if len(values) != self.n + 1:
            raise InsufficientOrder(
                f"P_{self.n} takes {self.n + 1} values, got {len(values)}"
            )
        zero = values[0] * 0
        total = zero
        for exps, coeff in self.monomials():
            term = zero + coeff
            for v, e in zip(values, exps):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def __str__(self) -> str:
        return str(self.poly.as_expr())


def indicial_coefficient(n: int) -> Fraction:
    """The forced double-pole coefficient (1 - (n+1)^2) / 2."""
    return Fraction(1 - (n + 1) ** 2, 2)


def _check_indicial(phi: QuadDiffLaurent) -> None:
    expected = indicial_coefficient(phi.n)
    found = phi[-2]
    if found != expected:
        raise IndicialMismatch(phi.n, phi.zero + expected, found)


def _recurse(
    alpha: Callable[[int], T],
    n: int,
    top: int,
    delta_n: T,
    zero: T,
    scale: Callable[[T, Fraction], T],
) -> tuple[list[T], T | None]:
    """
    Run the Riccati recursion for delta_0 .. delta_top.

    Works over any ring with + and *, given ``scale`` for rational multiples.

    Returns:
        Tuple of (deltas, residual of the equation at m = n - 1, or None if
        top < n)
    """
    deltas: list[T] = []
    residual = None
    for k in range(top + 1):
        m = k - 1
        square = zero
        for i in range(m + 1):
            square = square + deltas[i] * deltas[m - i]
        rhs = alpha(m) + scale(square, Fraction(1, 2))
        if k == n:
            residual = rhs
            deltas.append(delta_n)
        else:
            deltas.append(scale(rhs, Fraction(1, k - n)))
    return deltas, residual


def _scale_scalar(x, r: Fraction):
    return x * r


def riccati_solve(
    phi: QuadDiffLaurent, delta_n: Scalar | None = None
) -> RiccatiSolution:
    """
    Solve the recursion for every m up to the order K of phi.

    Args:
        phi: Right-hand side, known at least through alpha_{n-1}
        delta_n: The free coefficient; 0 when omitted

    Raises:
        IndicialMismatch: If alpha_{-2} is not (1 - (n+1)^2) / 2
        ObstructionViolated: If P_n does not vanish on phi
    """
    _check_indicial(phi)
    n = phi.n
    if phi.order < n - 1:
        raise InsufficientOrder(
            f"Branch order {n} needs phi through alpha_{n - 1}, got alpha_{phi.order}"
        )
    zero = phi.zero
    free = zero if delta_n is None else delta_n
    deltas, residual = _recurse(
        phi.__getitem__, n, phi.order + 1, free, zero, _scale_scalar
    )
    if residual is not None and not residual.is_zero():
        raise ObstructionViolated(residual)
    return RiccatiSolution(n, tuple(deltas), free)


def obstruction_value(phi: QuadDiffLaurent) -> Scalar:
    """P_n(alpha_{-1}, ..., alpha_{n-1}); zero iff S(f) = phi has a solution."""
    _check_indicial(phi)
    n = phi.n
    zero = phi.zero
    _, residual = _recurse(phi.__getitem__, n, n, zero, zero, _scale_scalar)
    assert residual is not None
    return residual


def forced_alpha(phi: QuadDiffLaurent) -> Scalar:
    """The unique alpha_{n-1} making the obstruction vanish, from alpha_{-1}.."""
    _check_indicial(phi)
    n = phi.n
    zero = phi.zero

    def alpha(m: int) -> Scalar:
        return zero if m == n - 1 else phi[m]

    _, residual = _recurse(alpha, n, n, zero, zero, _scale_scalar)
    assert residual is not None
    return -residual


def obstruction_polynomial(
    n: int, bound: int = MAX_OBSTRUCTION_ORDER
) -> ObstructionPoly:
    """
    P_n as an exact polynomial over QQ.

    The recursion runs with polynomial coefficients; the residual at m = n - 1
    is P_n and carries X_{n+1} with coefficient 1.

    Raises:
        DegreeBoundExceeded: If n is larger than ``bound``
    """
    if n < 1:
        raise BranchOrderMismatch(f"Obstruction needs a branch order >= 1, got {n}")
    if n > bound:
        raise DegreeBoundExceeded(n, bound)
    gens = symbols(f"X1:{n + 2}")
    zero = Poly(0, *gens, domain=QQ)
    variables = [Poly(g, *gens, domain=QQ) for g in gens]

    def alpha(m: int) -> Poly:
        return variables[m + 1]

    def scale(p: Poly, r: Fraction) -> Poly:
        return p.mul_ground(QQ(r.numerator, r.denominator))

    _, residual = _recurse(alpha, n, n, zero, zero, scale)
    assert residual is not None
    return ObstructionPoly(n, residual)


def reconstruct_jet(sol: RiccatiSolution) -> PowerJet:
    """
    The map f with f(0) = 0 and f' = (n+1) z^n exp(integral of v).

    Returns:
        Jet of f, valid to order n + len(delta) + 1
    """
    n = sol.n
    v = PowerJet(sol.delta)
    unit = exp(v.integrate()) * (n + 1)
    zero = v.zero
    return PowerJet([zero] * n + list(unit.coeffs)).integrate()


def reconstruct_map(sol: RiccatiSolution) -> BranchedJet:
    """The branched jet of the solution, normalized to a_0 = 0, a_{n+1} = 1."""
    jet = reconstruct_jet(sol)
    return BranchedJet.from_powerjet(jet.truncate(2 * (sol.n + 1)), n=sol.n)


def solve_schwarzian(
    phi: QuadDiffLaurent, delta_n: Scalar | None = None
) -> BranchedJet:
    return reconstruct_map(riccati_solve(phi, delta_n))


def d_map(c: BranchingClass) -> list[Scalar]:
    """delta_0 .. delta_{n-1} of the pre-Schwarzian of the normal form of c."""
    u = pre_schwarzian(normal_form(c).to_powerjet(), c.n)
    return u.coefficients(0, c.n - 1)


def s_map(c: BranchingClass) -> list[Scalar]:
    """alpha_{-1} .. alpha_{n-2} of the Schwarzian of the normal form of c."""
    phi = schwarzian(normal_form(c).to_powerjet(), c.n)
    return phi.coefficients(-1, c.n - 2)


def d_inverse(delta: Sequence[Scalar], n: int) -> BranchingClass:
    """The class whose d_map is ``delta``."""
    if len(delta) != n:
        raise BranchOrderMismatch(
            f"Branch order {n} needs {n} coefficients, got {len(delta)}", expected=n
        )
    jet = reconstruct_jet(RiccatiSolution(n, tuple(delta), delta[0] * 0))
    return class_from_affine_jet(jet, n)


def s_inverse(alpha: Sequence[Scalar], n: int) -> BranchingClass:
    """The class whose s_map is ``alpha``."""
    if len(alpha) != n:
        raise BranchOrderMismatch(
            f"Branch order {n} needs {n} coefficients, got {len(alpha)}", expected=n
        )
    zero = alpha[0] * 0
    deltas, _ = _recurse(
        lambda m: alpha[m + 1], n, n - 1, zero, zero, _scale_scalar
    )
    return d_inverse(deltas, n)
