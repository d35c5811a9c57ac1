"""Seeded generators of random exact inputs for the verify suites."""

import random
from fractions import Fraction

from jetmoeb.branching import BranchedJet, BranchingClass
from jetmoeb.fuchs import QuadDiffLaurent, forced_alpha, indicial_coefficient
from jetmoeb.moebius import INFINITY, Moebius, PointCP1
from jetmoeb.scalars import EXACT, Backend, ComplexExact, Scalar
from jetmoeb.series import PowerJet

SPAN = 5
DENOMINATOR = 4


def rational(rng: random.Random, span: int = SPAN) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, DENOMINATOR))


def scalar(
    rng: random.Random, backend: Backend = EXACT, nonzero: bool = False
) -> Scalar:
    """A small Gaussian rational; purely real about half of the time."""
    while True:
        im = rational(rng) if rng.random() < 0.5 else Fraction(0)
        x = ComplexExact(rational(rng), im)
        if not (nonzero and x.is_zero()):
            return backend.scalar(x)


def scalars(rng: random.Random, k: int, backend: Backend = EXACT) -> list[Scalar]:
    return [scalar(rng, backend) for _ in range(k)]


def powerjet(
    rng: random.Random, order: int, backend: Backend = EXACT, valuation: int = 0
) -> PowerJet:
    """Random jet whose first nonzero coefficient sits at ``valuation``."""
    zero = backend.scalar(0)
    coeffs = [zero] * valuation + [scalar(rng, backend, nonzero=True)]
    coeffs += scalars(rng, order - valuation, backend)
    return PowerJet(coeffs)


def unbranched(
    rng: random.Random, order: int, backend: Backend = EXACT, centered: bool = False
) -> PowerJet:
    """Random germ with nonzero derivative; f(0) = 0 when ``centered``."""
    jet = powerjet(rng, order, backend, valuation=1)
    if centered:
        return jet
    return jet + scalar(rng, backend)


def branched(
    rng: random.Random, n: int, order: int, backend: Backend = EXACT
) -> PowerJet:
    """Random germ whose derivative vanishes to order exactly n."""
    return powerjet(rng, order, backend, valuation=n + 1) + scalar(rng, backend)


def moebius(rng: random.Random, backend: Backend = EXACT) -> Moebius:
    while True:
        entries = scalars(rng, 4, backend)
        a, b, c, d = entries
        if not (a * d - b * c).is_zero():
            return Moebius(a, b, c, d)


def branched_jet(
    rng: random.Random, n: int, backend: Backend = EXACT, infinity: float = 0.2
) -> BranchedJet:
    """Random element of R_{x,n}, valued at infinity with probability ``infinity``."""
    a = [scalar(rng, backend, nonzero=True)] + scalars(rng, n + 1, backend)
    value = INFINITY if rng.random() < infinity else PointCP1(scalar(rng, backend))
    return BranchedJet(n, value, tuple(a))


def branching_class(
    rng: random.Random, n: int, backend: Backend = EXACT
) -> BranchingClass:
    return BranchingClass(n, tuple(scalars(rng, n, backend)))


def admissible_phi(
    rng: random.Random, n: int, order: int, backend: Backend = EXACT
) -> QuadDiffLaurent:
    """
    Random right-hand side of S(f) = phi solvable at branch order n.

    alpha_{-2} is forced, alpha_{n-1} is set by forced_alpha and every other
    coefficient up to ``order`` is random.
    """
    alpha = [backend.scalar(indicial_coefficient(n))] + scalars(rng, order + 2, backend)
    head = QuadDiffLaurent(n, tuple(alpha[: n + 1]))
    alpha[n + 1] = forced_alpha(head)
    return QuadDiffLaurent(n, tuple(alpha))


def section(
    rng: random.Random, order: int, w0: Scalar, backend: Backend = EXACT
) -> PowerJet:
    """Random polynomial lambda, in u = w - w0, with lambda(w0) != w0."""
    while True:
        lam = PowerJet(scalars(rng, order + 1, backend))
        if lam[0] != w0:
            return lam
