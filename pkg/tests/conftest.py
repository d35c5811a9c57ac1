"""Shared hypothesis strategies and small constructors for the test modules."""

from fractions import Fraction

from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from jetmoeb.branching import BranchedJet, BranchingClass
from jetmoeb.moebius import INFINITY, Moebius, PointCP1
from jetmoeb.scalars import ComplexExact, exact
from jetmoeb.series import LaurentJet, PowerJet

settings.register_profile(
    "jetmoeb",
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("jetmoeb")


def jet(*values) -> PowerJet:
    """PowerJet from literals: ``jet(0, 1, "1/2")``."""
    return PowerJet.from_values(values)


def laurent(*values, pole: int = 0) -> LaurentJet:
    return LaurentJet.from_values(values, pole=pole)


def scalars(*values) -> tuple[ComplexExact, ...]:
    return tuple(exact(v) for v in values)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)

gaussians = st.builds(
    ComplexExact,
    rationals,
    st.one_of(st.just(Fraction(0)), rationals),
)

nonzero_gaussians = gaussians.filter(lambda x: not x.is_zero())


@st.composite
def powerjets(draw, order: int = 6, valuation: int = 0) -> PowerJet:
    """Jet of the given order whose first nonzero coefficient is at ``valuation``."""
    zero = ComplexExact(0)
    lead = draw(nonzero_gaussians)
    count = order - valuation
    tail = draw(st.lists(gaussians, min_size=count, max_size=count))
    return PowerJet([zero] * valuation + [lead] + tail)


@st.composite
def unbranched_jets(draw, order: int = 6) -> PowerJet:
    """Germ with f'(0) != 0 and arbitrary value."""
    return draw(powerjets(order, valuation=1)) + draw(gaussians)


@st.composite
def moebius_maps(draw) -> Moebius:
    a, b, c, d = draw(st.tuples(gaussians, gaussians, gaussians, gaussians))
    assume(not (a * d - b * c).is_zero())
    return Moebius(a, b, c, d)


@st.composite
def points(draw) -> PointCP1:
    if draw(st.integers(0, 4)) == 0:
        return INFINITY
    return PointCP1(draw(gaussians))


@st.composite
def branched_jets(draw, n: int | None = None) -> BranchedJet:
    if n is None:
        n = draw(st.integers(1, 3))
    lead = draw(nonzero_gaussians)
    rest = draw(st.lists(gaussians, min_size=n + 1, max_size=n + 1))
    return BranchedJet(n, draw(points()), (lead, *rest))


@st.composite
def classes(draw, n: int | None = None) -> BranchingClass:
    if n is None:
        n = draw(st.integers(1, 3))
    return BranchingClass(n, tuple(draw(st.lists(gaussians, min_size=n, max_size=n))))


@st.composite
def laurentjets(
    draw, order: int = 6, pole: int | None = None, residue_free: bool = False
) -> LaurentJet:
    """Laurent jet with a nonzero leading coefficient at u^{-pole}."""
    if pole is None:
        pole = draw(st.integers(0, 2))
    lead = draw(nonzero_gaussians)
    count = order + pole
    coeffs = [lead] + draw(st.lists(gaussians, min_size=count, max_size=count))
    if residue_free and pole >= 1:
        coeffs[pole - 1] = ComplexExact(0)
    return LaurentJet(coeffs, pole)


def truncation_consistent(op, f, k: int) -> bool:
    """
    op applied to f truncated at k is right as far as its reported order, as
    judged by op applied to the whole of f.
    """
    low = op(f.truncate(k))
    high = op(f)
    return high.order >= low.order and high.agrees_with(low, upto=low.order)
