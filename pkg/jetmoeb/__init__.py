"""Exact jet kernel for the Möbius group, Schwarzians and branching classes."""

from jetmoeb.branching import (
    BranchedJet,
    BranchingClass,
    DivisorClassData,
    OneFormDelta,
    QuadDiffDelta,
    class_of,
    diff_classes,
    normal_form,
    translate_class,
)
from jetmoeb.errors import JetError
from jetmoeb.fuchs import (
    QuadDiffLaurent,
    obstruction_polynomial,
    riccati_solve,
    solve_schwarzian,
)
from jetmoeb.moebius import INFINITY, Moebius, PointCP1
from jetmoeb.scalars import Backend, ComplexExact, ComplexFloat, exact
from jetmoeb.schwarzian import pre_schwarzian, relative_schwarzian, schwarzian
from jetmoeb.series import LaurentJet, PowerJet

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "Backend",
    "BranchedJet",
    "BranchingClass",
    "ComplexExact",
    "ComplexFloat",
    "DivisorClassData",
    "JetError",
    "LaurentJet",
    "Moebius",
    "OneFormDelta",
    "PointCP1",
    "PowerJet",
    "QuadDiffDelta",
    "QuadDiffLaurent",
    "class_of",
    "diff_classes",
    "exact",
    "normal_form",
    "obstruction_polynomial",
    "pre_schwarzian",
    "relative_schwarzian",
    "riccati_solve",
    "schwarzian",
    "solve_schwarzian",
    "translate_class",
]
