from fractions import Fraction

import pytest
from conftest import (
    branched_jets,
    classes,
    gaussians,
    jet,
    moebius_maps,
    nonzero_gaussians,
    scalars,
)
from hypothesis import assume, given
from hypothesis import strategies as st

from jetmoeb.branching import (
    MODES,
    BranchedJet,
    BranchingClass,
    DivisorClassData,
    DivisorDelta,
    OneFormDelta,
    QuadDiffDelta,
    act,
    class_from_affine_jet,
    class_of,
    diff_classes,
    divisor_diff,
    divisor_translate,
    h_act,
    h_orbit_representative,
    normal_form,
    postcompose_germ,
    recenter,
    translate_class,
)
from jetmoeb.errors import (
    BranchOrderMismatch,
    DivisorMismatch,
    InvalidMoebius,
    NotABiholomorphismGerm,
    NotInRZero,
    OrderMismatch,
)
from jetmoeb.moebius import INFINITY, Moebius, PointCP1
from jetmoeb.scalars import exact

ZERO = PointCP1(exact(0))


def branched(n: int, *a, value=ZERO) -> BranchedJet:
    return BranchedJet(n, value, scalars(*a))


def klass(*c) -> BranchingClass:
    return BranchingClass(len(c), scalars(*c))


def test_branched_jet_validation():
    with pytest.raises(BranchOrderMismatch):
        branched(0, 1, 0)
    with pytest.raises(BranchOrderMismatch):
        branched(1, 1, 0)
    with pytest.raises(BranchOrderMismatch):
        branched(1, 0, 1, 1)


def test_branched_jet_from_powerjet():
    j = BranchedJet.from_powerjet(jet(7, 0, 2, 3, 5))
    assert j == branched(1, 2, 3, 5, value=PointCP1(exact(7)))
    assert j.to_powerjet() == jet(7, 0, 2, 3, 5)
    with pytest.raises(BranchOrderMismatch):
        BranchedJet.from_powerjet(jet(0, 1, 0, 0, 0))
    with pytest.raises(BranchOrderMismatch):
        BranchedJet.from_powerjet(jet(0, 0, 2, 3, 5), n=2)


@pytest.mark.parametrize(
    "alpha, gamma, delta, before, after",
    [
        (1, 1, 1, (1, 0, 0), (1, 0, -1)),
        (1, 0, 1, (1, 3, 5), (1, 3, 5)),
        (2, 0, 1, (1, 3, 5), (2, 6, 10)),
    ],
)
def test_h_act(alpha, gamma, delta, before, after):
    moved = h_act(exact(alpha), exact(gamma), exact(delta), branched(1, *before))
    assert moved == branched(1, *after)


def test_h_act_needs_value_zero():
    with pytest.raises(NotInRZero):
        h_act(exact(1), exact(0), exact(1), branched(1, 1, 0, 0, value=INFINITY))
    one = PointCP1(exact(1))
    with pytest.raises(NotInRZero):
        h_act(exact(1), exact(0), exact(1), branched(1, 1, 0, 0, value=one))
    with pytest.raises(InvalidMoebius):
        h_act(exact(0), exact(1), exact(1), branched(1, 1, 0, 0))


@given(branched_jets(), gaussians, nonzero_gaussians)
def test_h_act_agrees_with_the_moebius_action(j, gamma, alpha):
    j = recenter(j)
    one = exact(1)
    g = Moebius(alpha, exact(0), gamma, one)
    assert h_act(alpha, gamma, one, j) == act(g, j)


@pytest.mark.parametrize(
    "a, expected",
    [((1, 0, 0), (0,)), ((2, 3, 5), (Fraction(3, 2),)), ((1, 0, -1), (0,))],
)
def test_class_of(a, expected):
    assert class_of(branched(1, *a)) == klass(*expected)


def test_class_of_ignores_the_value():
    shifted = branched(1, 2, 3, 5, value=PointCP1(exact(7)))
    assert class_of(shifted) == klass(Fraction(3, 2))


def test_normal_form():
    assert normal_form(klass(0)) == branched(1, 1, 0, 0)
    assert normal_form(klass(Fraction(3, 2))) == branched(1, 1, Fraction(3, 2), 0)
    assert normal_form(klass(Fraction(3, 2))).to_powerjet() == jet(
        0, 0, 1, Fraction(3, 2), 0
    )


@given(branched_jets())
def test_normal_form_is_the_h_orbit_representative(j):
    c = class_of(j)
    alpha, gamma, delta = h_orbit_representative(j)
    assert h_act(alpha, gamma, delta, recenter(j)) == normal_form(c)
    assert class_of(normal_form(c)) == c


@given(branched_jets(), moebius_maps())
def test_class_is_moebius_invariant(j, g):
    assert class_of(act(g, j)) == class_of(j)


@given(branched_jets(), gaussians, nonzero_gaussians)
def test_h_action_is_free(j, gamma, alpha):
    one = exact(1)
    assume(not (alpha == one and gamma.is_zero()))
    j = recenter(j)
    assert h_act(alpha, gamma, one, j) != j


def test_class_from_affine_jet():
    assert class_from_affine_jet(jet(0, 0, 1, 0), 1) == klass(0)
    assert class_from_affine_jet(jet(7, 0, 2, 3), 1) == klass(Fraction(3, 2))
    with pytest.raises(BranchOrderMismatch):
        class_from_affine_jet(jet(0, 0, 0, 1), 1)
    with pytest.raises(BranchOrderMismatch):
        class_from_affine_jet(jet(0, 1, 1, 0), 1)


@given(branched_jets())
def test_affine_jet_gives_the_class(j):
    assume(not j.value.is_infinity)
    f = j.to_powerjet().truncate(2 * j.n + 1)
    assert class_from_affine_jet(f, j.n) == class_of(j)


def test_postcompose_germ():
    j = branched(1, 2, 3, 5)
    assert postcompose_germ(j, jet(0, 1, 0, 0, 0)) == j
    with pytest.raises(NotABiholomorphismGerm):
        postcompose_germ(j, jet(0, 0, 1, 0, 0))


@given(branched_jets(), st.data())
def test_class_is_biholomorphism_invariant(j, data):
    assume(not j.value.is_infinity)
    lead = data.draw(nonzero_gaussians)
    tail = data.draw(st.lists(gaussians, min_size=j.top - 1, max_size=j.top - 1))
    alpha = jet(j.value.z, lead, *tail)
    assert class_of(postcompose_germ(j, alpha)) == class_of(j)


def test_diff_classes():
    c, c2 = exact(1), exact(5)
    pre = diff_classes(klass(c2), klass(c), "preschwarzian")
    assert pre == OneFormDelta(1, scalars(6))
    sch = diff_classes(klass(c2), klass(c), "schwarzian")
    assert sch == QuadDiffDelta(1, scalars(-6))
    assert diff_classes(klass(c), klass(c)).is_zero()


def test_class_needs_a_positive_branch_order():
    with pytest.raises(BranchOrderMismatch):
        BranchingClass(0, ())
    with pytest.raises(BranchOrderMismatch):
        BranchingClass(2, scalars(1))


def test_diff_classes_needs_equal_orders():
    with pytest.raises(OrderMismatch):
        diff_classes(klass(1), klass(1, 2))


def test_translate_class():
    assert translate_class(klass(1), OneFormDelta(1, scalars(0))) == klass(1)
    assert translate_class(klass(1), OneFormDelta(1, scalars(3))) == klass(3)
    assert translate_class(klass(1), QuadDiffDelta(1, scalars(3))) == klass(-1)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(*(classes(n),) * 3)))
def test_torsor_axioms(triple):
    c1, c2, c3 = triple
    for mode in MODES:
        d21 = diff_classes(c2, c1, mode)
        assert diff_classes(c3, c2, mode) + d21 == diff_classes(c3, c1, mode)
        assert translate_class(c1, d21) == c2
        assert (d21 + -d21).is_zero()


def test_delta_length_is_checked():
    with pytest.raises(BranchOrderMismatch):
        OneFormDelta(2, scalars(1))
    with pytest.raises(OrderMismatch):
        OneFormDelta(1, scalars(1)) + OneFormDelta(2, scalars(1, 2))


def test_divisor_operations():
    a = DivisorClassData((("p", klass(1)), ("q", klass(0, 0))))
    b = DivisorClassData((("p", klass(5)), ("q", klass(0, 1))))
    assert a.degree == 3
    d = divisor_diff(b, a)
    assert d.dimension == 3
    assert d.points[0] == ("p", OneFormDelta(1, scalars(6)))
    assert divisor_translate(a, d) == b


def test_empty_divisor():
    empty = DivisorClassData()
    assert divisor_diff(empty, empty) == DivisorDelta()
    assert divisor_translate(empty, DivisorDelta()) == empty


def test_divisor_mismatch():
    a = DivisorClassData((("p", klass(1)),))
    b = DivisorClassData((("q", klass(1)),))
    with pytest.raises(DivisorMismatch):
        divisor_diff(a, b)
    with pytest.raises(DivisorMismatch):
        divisor_diff(a, DivisorClassData((("p", klass(1, 2)),)))
    with pytest.raises(DivisorMismatch):
        DivisorClassData((("p", klass(1)), ("p", klass(2))))
