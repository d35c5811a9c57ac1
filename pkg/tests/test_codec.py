from fractions import Fraction

import pytest
from conftest import jet, laurent, scalars

from jetmoeb import codec
from jetmoeb.branching import BranchingClass, OneFormDelta, QuadDiffDelta
from jetmoeb.errors import BranchOrderMismatch, InvalidMoebius, MalformedInput
from jetmoeb.fuchs import QuadDiffLaurent, obstruction_polynomial
from jetmoeb.moebius import INFINITY, Moebius, PointCP1
from jetmoeb.scalars import Backend, ComplexExact, exact


def test_scalars():
    assert codec.encode_scalar(exact(Fraction(3, 2))) == "3/2"
    assert codec.encode_scalar(ComplexExact(Fraction(1, 2), -1)) == {
        "re": "1/2",
        "im": "-1",
    }
    assert codec.decode_scalar("3/2") == Fraction(3, 2)
    assert codec.decode_scalar(7) == 7
    assert codec.decode_scalar({"re": "1/2", "im": "-1"}) == ComplexExact(
        Fraction(1, 2), -1
    )
    assert codec.decode_scalar("1-2i") == ComplexExact(1, -2)


def test_float_scalars():
    backend = Backend("float")
    assert codec.decode_scalar(0.25, backend) == 0.25
    assert codec.encode_scalar(backend.scalar("1/4")) == 0.25
    with pytest.raises(MalformedInput):
        codec.decode_scalar(0.25)
    with pytest.raises(MalformedInput):
        codec.decode_scalar("1e400", backend)
    with pytest.raises(MalformedInput):
        codec.decode_scalar(float("inf"), backend)


@pytest.mark.parametrize("raw", [True, None, [1], "x", "1/0"])
def test_bad_scalars(raw):
    with pytest.raises(MalformedInput):
        codec.decode_scalar(raw)


def test_points():
    assert codec.encode_point(INFINITY) == "inf"
    assert codec.decode_point("inf") == INFINITY
    assert codec.decode_point("2") == PointCP1(exact(2))


def test_jets():
    assert codec.encode_jet(laurent(1, 0, 2, pole=1)) == {
        "pole": 1,
        "order": 1,
        "coeffs": ["1", "0", "2"],
    }
    assert codec.decode_laurent({"pole": 1, "coeffs": ["1", "0", "2"]}) == laurent(
        1, 0, 2, pole=1
    )
    assert codec.decode_powerjet(["0", "1"]) == jet(0, 1)
    assert codec.decode_powerjet({"pole": 0, "coeffs": ["0", "1"]}) == jet(0, 1)


def test_bad_jets():
    with pytest.raises(MalformedInput):
        codec.decode_powerjet([])
    with pytest.raises(MalformedInput):
        codec.decode_powerjet({"pole": 1, "coeffs": ["1", "0"]})
    with pytest.raises(MalformedInput):
        codec.decode_laurent({"pole": 3, "coeffs": ["1"]})
    with pytest.raises(MalformedInput):
        codec.decode_laurent({"pole": -1, "coeffs": ["1"]})
    with pytest.raises(MalformedInput):
        codec.decode_powerjet("0, 1")


def test_jet_order_must_match_the_coefficients():
    doc = {"pole": 1, "order": 1, "coeffs": ["1", "0", "2"]}
    assert codec.decode_laurent(doc) == laurent(1, 0, 2, pole=1)
    with pytest.raises(MalformedInput):
        codec.decode_laurent({**doc, "order": 2})
    assert codec.decode_powerjet({"order": 1, "coeffs": ["0", "1"]}) == jet(0, 1)
    with pytest.raises(MalformedInput):
        codec.decode_powerjet({"order": 3, "coeffs": ["0", "1"]})


def test_moebius():
    g = codec.decode_moebius({"a": "1", "b": "2", "c": "3", "d": "4"})
    assert g == Moebius(*scalars(1, 2, 3, 4))
    assert codec.encode_moebius(g) == {"a": "1", "b": "2", "c": "3", "d": "4"}
    with pytest.raises(InvalidMoebius):
        codec.decode_moebius({"a": "1", "b": "2", "c": "2", "d": "4"})
    with pytest.raises(MalformedInput):
        codec.decode_moebius({"a": "1", "b": "2", "c": "3"})


def test_classes_and_deltas():
    assert codec.decode_class({"n": 1, "c": ["3/2"]}) == BranchingClass(
        1, scalars(Fraction(3, 2))
    )
    assert codec.decode_class({"n": 1, "class": ["3/2"]}) == BranchingClass(
        1, scalars(Fraction(3, 2))
    )
    assert codec.decode_delta({"n": 1, "eta": ["6"]}) == OneFormDelta(1, scalars(6))
    assert codec.decode_delta({"n": 1, "beta": ["6"]}) == QuadDiffDelta(1, scalars(6))
    assert codec.encode_delta(QuadDiffDelta(1, scalars(-6))) == {"n": 1, "beta": ["-6"]}
    with pytest.raises(MalformedInput):
        codec.decode_delta({"n": 1})
    with pytest.raises(MalformedInput):
        codec.decode_class({"n": -1, "c": []})
    with pytest.raises(BranchOrderMismatch):
        codec.decode_class({"n": 0, "c": []})


def test_branched_jet_round_trip():
    doc = {"n": 1, "value": "inf", "a": ["2", "3", {"re": "0", "im": "1"}]}
    assert codec.encode_branched(codec.decode_branched(doc)) == doc


def test_divisors():
    doc = {"points": [{"label": "p", "n": 1, "class": ["1"]}]}
    divisor = codec.decode_divisor(doc)
    assert divisor.degree == 1
    assert codec.encode_divisor(divisor) == doc
    with pytest.raises(MalformedInput):
        codec.decode_divisor({"points": [{"n": 1, "class": ["1"]}]})


def test_quaddiff():
    phi = codec.decode_quaddiff({"n": 1, "alpha": ["-3/2", "2", "1/2"]})
    assert phi == QuadDiffLaurent(1, scalars(Fraction(-3, 2), 2, Fraction(1, 2)))
    assert codec.encode_quaddiff(phi) == {"n": 1, "alpha": ["-3/2", "2", "1/2"]}
    assert codec.decode_quaddiff({"alpha": ["-4", "0"]}, n=2).n == 2


def test_obstruction():
    doc = codec.encode_obstruction(obstruction_polynomial(1))
    assert doc["n"] == 1
    assert doc["vars"] == ["X1", "X2"]
    monomials = {tuple(m["exps"]): m["coeff"] for m in doc["monomials"]}
    assert monomials == {(2, 0): "1/2", (0, 1): "1"}


def test_loads():
    assert codec.loads('{"n": 1}') == {"n": 1}
    with pytest.raises(MalformedInput):
        codec.loads("{n: 1}")
