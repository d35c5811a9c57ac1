"""
Randomized property suites behind ``jetmoeb verify``.

Each suite is a list of named properties; a property draws its own inputs
from a ``random.Random`` seeded with (seed, suite, property, case), so any
single failing case can be replayed. Suites run one after another in name
order.
"""

import random
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from tqdm import tqdm

from jetmoeb import sampling
from jetmoeb.branching import (
    MODES,
    act,
    class_from_affine_jet,
    class_of,
    diff_classes,
    h_act,
    h_orbit_representative,
    normal_form,
    postcompose_germ,
    recenter,
    translate_class,
)
from jetmoeb.config import Settings
from jetmoeb.connections import connection_difference, verify_correspondence
from jetmoeb.errors import IndicialMismatch, JetError
from jetmoeb.fuchs import (
    QuadDiffLaurent,
    d_inverse,
    d_map,
    indicial_coefficient,
    obstruction_polynomial,
    obstruction_value,
    reconstruct_jet,
    riccati_solve,
    s_inverse,
    s_map,
    solve_schwarzian,
)
from jetmoeb.moebius import (
    PointCP1,
    Sl2Field,
    VectorJet2,
    act_on_powerjet,
    moebius_jet,
    osculating_derivative,
    osculating_moebius,
    pushforward_vectorjet,
    sl2_bracket,
    transport_vectorjet,
)
from jetmoeb.scalars import Backend
from jetmoeb.schwarzian import pre_schwarzian, relative_schwarzian, schwarzian
from jetmoeb.series import (
    PowerJet,
    compose,
    compositional_inverse,
    exp,
    reciprocal,
)

Property = Callable[[random.Random, Backend, int], bool]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
        }


# series


def _reciprocal_identity(rng: random.Random, backend: Backend, order: int) -> bool:
    j = sampling.powerjet(rng, order, backend)
    one = PowerJet.constant(backend.scalar(1), order)
    return (j * reciprocal(j)).agrees_with(one)


def _reversion_identity(rng: random.Random, backend: Backend, order: int) -> bool:
    j = sampling.unbranched(rng, order, backend, centered=True)
    u = PowerJet.variable(order, like=j[1])
    inv = compositional_inverse(j)
    return compose(j, inv).agrees_with(u) and compose(inv, j).agrees_with(u)


def _exp_derivative(rng: random.Random, backend: Backend, order: int) -> bool:
    j = sampling.unbranched(rng, order, backend, centered=True)
    e = exp(j)
    return e.derivative().agrees_with(e * j.derivative())


# moebius


def _action_composes(rng: random.Random, backend: Backend, order: int) -> bool:
    g1, g2 = sampling.moebius(rng, backend), sampling.moebius(rng, backend)
    f = sampling.unbranched(rng, order, backend)
    value = PointCP1(f[0])
    once = act_on_powerjet(g2 * g1, f, value)
    jet, image = act_on_powerjet(g1, f, value)
    twice = act_on_powerjet(g2, jet, image)
    return once[1] == twice[1] and once[0].agrees_with(twice[0])


def _osculation_idempotent(rng: random.Random, backend: Backend, order: int) -> bool:
    g = sampling.moebius(rng, backend)
    point = sampling.scalar(rng, backend)
    if (g.c * point + g.d).is_zero():
        return True
    jet = moebius_jet(g, point, 2).evaluate_derivatives(2)
    return osculating_moebius(jet, point) == g


def _osculating_derivative_is_schwarzian(
    rng: random.Random, backend: Backend, order: int
) -> bool:
    f = sampling.unbranched(rng, max(order, 3), backend)
    t0 = sampling.scalar(rng, backend)
    expected = Sl2Field.vanishing_twice(schwarzian(f, 0)[0], t0)
    return osculating_derivative(f, t0) == expected


def _pushforward_chain_rule(rng: random.Random, backend: Backend, order: int) -> bool:
    phi = sampling.unbranched(rng, 4, backend)
    psi = sampling.unbranched(rng, 4, backend, centered=True)
    v = VectorJet2(*sampling.scalars(rng, 3, backend))
    chi = compose(phi.derivative(), psi).integrate()
    left = pushforward_vectorjet(compose(phi, psi), v)
    right = pushforward_vectorjet(chi, pushforward_vectorjet(psi, v))
    return left == right


def _transport_functorial(rng: random.Random, backend: Backend, order: int) -> bool:
    phi = sampling.unbranched(rng, 4, backend)
    psi = sampling.unbranched(rng, 4, backend, centered=True)
    v = VectorJet2(*sampling.scalars(rng, 3, backend))
    left = transport_vectorjet(compose(phi, psi), v)
    right = transport_vectorjet(phi, transport_vectorjet(psi, v))
    return left == right


def _bracket_jacobi(rng: random.Random, backend: Backend, order: int) -> bool:
    x, y, z = (Sl2Field(*sampling.scalars(rng, 3, backend)) for _ in range(3))
    total = (
        sl2_bracket(x, sl2_bracket(y, z))
        + sl2_bracket(y, sl2_bracket(z, x))
        + sl2_bracket(z, sl2_bracket(x, y))
    )
    return total.is_zero() and (sl2_bracket(x, y) + sl2_bracket(y, x)).is_zero()


# schwarzian


def _indicial_coefficient(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(1, 5)
    f = sampling.branched(rng, n, n + 3 + order, backend)
    one = backend.scalar(1)
    return (
        schwarzian(f, n)[-2] == one * indicial_coefficient(n)
        and pre_schwarzian(f, n)[-1] == one * n
    )


def _cocycle(rng: random.Random, backend: Backend, order: int) -> bool:
    n = 0 if rng.random() < 0.5 else rng.randint(1, 3)
    top = max(order, 12)
    f1 = sampling.powerjet(rng, top, backend, valuation=n + 1)
    f2 = sampling.unbranched(rng, top, backend)
    left = schwarzian(compose(f2, f1))
    outer = compose(schwarzian(f2, 0).to_power(), f1)
    right = outer * f1.derivative() * f1.derivative() + schwarzian(f1)
    return left.agrees_with(right)


def _moebius_invariance(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(0, 3)
    f = sampling.branched(rng, n, n + 3 + order, backend)
    g = sampling.moebius(rng, backend)
    jet, image = act_on_powerjet(g, f, PointCP1(f[0]))
    if image.is_infinity:
        return True
    return schwarzian(jet, n).agrees_with(schwarzian(f, n))


def _relative_schwarzian_osculation(
    rng: random.Random, backend: Backend, order: int
) -> bool:
    top = max(order, 5)
    z1 = sampling.unbranched(rng, top, backend)
    z2 = sampling.unbranched(rng, top, backend)
    f = compose(z2, compositional_inverse(z1 - z1[0]))
    t0 = z1[0]
    expected = Sl2Field.vanishing_twice(relative_schwarzian(z2, z1)[0], t0)
    return osculating_derivative(f, t0) == expected


# branching


def _g_invariance(rng: random.Random, backend: Backend, order: int) -> bool:
    j = sampling.branched_jet(rng, rng.randint(1, 4), backend)
    g = sampling.moebius(rng, backend)
    return class_of(act(g, j)) == class_of(j)


def _biholomorphism_invariance(
    rng: random.Random, backend: Backend, order: int
) -> bool:
    j = sampling.branched_jet(rng, rng.randint(1, 4), backend, infinity=0.0)
    alpha = sampling.unbranched(rng, j.top, backend, centered=True) + j.value.z
    return class_of(postcompose_germ(j, alpha)) == class_of(j)


def _free_action(rng: random.Random, backend: Backend, order: int) -> bool:
    j = recenter(sampling.branched_jet(rng, rng.randint(1, 4), backend))
    alpha = sampling.scalar(rng, backend, nonzero=True)
    gamma = sampling.scalar(rng, backend)
    one = backend.scalar(1)
    if alpha == one and gamma.is_zero():
        return True
    return h_act(alpha, gamma, one, j) != j


def _normal_form_unique(rng: random.Random, backend: Backend, order: int) -> bool:
    j = sampling.branched_jet(rng, rng.randint(1, 4), backend)
    alpha, gamma, delta = h_orbit_representative(j)
    c = class_of(j)
    return (
        h_act(alpha, gamma, delta, recenter(j)) == normal_form(c)
        and class_of(normal_form(c)) == c
    )


def _affine_jet_agrees(rng: random.Random, backend: Backend, order: int) -> bool:
    j = sampling.branched_jet(rng, rng.randint(1, 4), backend, infinity=0.0)
    f = j.to_powerjet().truncate(2 * j.n + 1)
    return class_from_affine_jet(f, j.n) == class_of(j)


def _torsor_axioms(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(1, 4)
    c1, c2, c3 = (sampling.branching_class(rng, n, backend) for _ in range(3))
    for mode in MODES:
        d21 = diff_classes(c2, c1, mode)
        d32 = diff_classes(c3, c2, mode)
        if d32 + d21 != diff_classes(c3, c1, mode):
            return False
        if translate_class(c1, d21) != c2:
            return False
        if not diff_classes(c1, c1, mode).is_zero():
            return False
    return True


def _representative(rng: random.Random, backend: Backend, c) -> PowerJet:
    """Another germ of class c: H-moved normal form with a random tail."""
    alpha = sampling.scalar(rng, backend, nonzero=True)
    gamma = sampling.scalar(rng, backend)
    j = h_act(alpha, gamma, backend.scalar(1), normal_form(c))
    return PowerJet(list(j.to_powerjet().coeffs) + sampling.scalars(rng, 3, backend))


def _diff_well_defined(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(1, 4)
    c1, c2 = (sampling.branching_class(rng, n, backend) for _ in range(2))
    f, g = _representative(rng, backend, c1), _representative(rng, backend, c2)
    eta = (pre_schwarzian(g, n) - pre_schwarzian(f, n)).coefficients(0, n - 1)
    beta = (schwarzian(g, n) - schwarzian(f, n)).coefficients(-1, n - 2)
    return (
        tuple(eta) == diff_classes(c2, c1, "preschwarzian").values
        and tuple(beta) == diff_classes(c2, c1, "schwarzian").values
    )


# fuchs


def _round_trip(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(1, 4)
    phi = sampling.admissible_phi(rng, n, max(order, n - 1), backend)
    f = reconstruct_jet(riccati_solve(phi))
    return schwarzian(f, n).agrees_with(phi.to_laurent())


@lru_cache(maxsize=None)
def _polynomial(n: int):
    return obstruction_polynomial(n)


def _obstruction_cross_check(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(1, 5)
    alpha = [sampling.scalar(rng, backend) for _ in range(n + 1)]
    phi = QuadDiffLaurent(n, (backend.scalar(indicial_coefficient(n)), *alpha))
    return _polynomial(n).evaluate(alpha) == obstruction_value(phi)


def _indicial_law(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(1, 4)
    phi = sampling.admissible_phi(rng, n, n + 2, backend)
    shifted = (phi.alpha[0] + sampling.scalar(rng, backend, nonzero=True),)
    try:
        riccati_solve(QuadDiffLaurent(n, shifted + phi.alpha[1:]))
    except IndicialMismatch:
        return True
    return False


def _bijectivity(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(1, 5)
    c = sampling.branching_class(rng, n, backend)
    values = sampling.scalars(rng, n, backend)
    return (
        d_inverse(d_map(c), n) == c
        and s_inverse(s_map(c), n) == c
        and d_map(d_inverse(values, n)) == values
        and s_map(s_inverse(values, n)) == values
    )


def _gauge_independence(rng: random.Random, backend: Backend, order: int) -> bool:
    n = rng.randint(1, 4)
    phi = sampling.admissible_phi(rng, n, max(order, n - 1), backend)
    first = solve_schwarzian(phi, sampling.scalar(rng, backend))
    second = solve_schwarzian(phi, sampling.scalar(rng, backend))
    return class_of(first) == class_of(second)


# connections


def _correspondence(rng: random.Random, backend: Backend, order: int) -> bool:
    w0 = sampling.scalar(rng, backend)
    lam = sampling.section(rng, max(order, 1), w0, backend)
    return verify_correspondence(lam, w0).order == lam.order - 1


def _flat_section(rng: random.Random, backend: Backend, order: int) -> bool:
    w0 = sampling.scalar(rng, backend)
    lam = PowerJet.constant(sampling.scalar(rng, backend), max(order, 1))
    if lam[0] == w0:
        return True
    return connection_difference(lam, w0).is_zero()


SUITES: dict[str, list[tuple[str, Property]]] = {
    "branching": [
        ("g_invariance", _g_invariance),
        ("biholomorphism_invariance", _biholomorphism_invariance),
        ("free_action", _free_action),
        ("normal_form_unique", _normal_form_unique),
        ("affine_jet_agrees", _affine_jet_agrees),
        ("torsor_axioms", _torsor_axioms),
        ("diff_well_defined", _diff_well_defined),
    ],
    "connections": [
        ("correspondence", _correspondence),
        ("flat_section", _flat_section),
    ],
    "fuchs": [
        ("round_trip", _round_trip),
        ("obstruction_cross_check", _obstruction_cross_check),
        ("indicial_law", _indicial_law),
        ("bijectivity", _bijectivity),
        ("gauge_independence", _gauge_independence),
    ],
    "moebius": [
        ("action_composes", _action_composes),
        ("osculation_idempotent", _osculation_idempotent),
        ("osculating_derivative", _osculating_derivative_is_schwarzian),
        ("pushforward_chain_rule", _pushforward_chain_rule),
        ("transport_functorial", _transport_functorial),
        ("bracket_jacobi", _bracket_jacobi),
    ],
    "schwarzian": [
        ("indicial_coefficient", _indicial_coefficient),
        ("cocycle", _cocycle),
        ("moebius_invariance", _moebius_invariance),
        ("relative_osculation", _relative_schwarzian_osculation),
    ],
    "series": [
        ("reciprocal", _reciprocal_identity),
        ("reversion", _reversion_identity),
        ("exp_derivative", _exp_derivative),
    ],
}


def suite_names(selection: str = "all") -> list[str]:
    """Resolve ``all`` or a comma-separated list of suite names."""
    if selection == "all":
        return sorted(SUITES)
    names = [s.strip() for s in selection.split(",") if s.strip()]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suite(s): {', '.join(unknown)}")
    return sorted(set(names))


def run_suite(name: str, settings: Settings, quiet: bool = False) -> SuiteResult:
    backend = Backend(settings.backend, settings.float_tolerance)
    result = SuiteResult(name)
    for prop_name, prop in SUITES[name]:
        cases = tqdm(
            range(settings.samples),
            desc=f"{name}.{prop_name}",
            file=sys.stderr,
            disable=quiet,
            leave=False,
        )
        for case in cases:
            rng = random.Random(f"{settings.seed}:{name}:{prop_name}:{case}")
            try:
                ok = prop(rng, backend, settings.order)
                detail = "property does not hold"
            except JetError as e:
                ok = False
                detail = f"{type(e).__name__}: {e}"
            if ok:
                result.passed += 1
            else:
                result.failed += 1
                result.failures.append(f"{prop_name}[{case}]: {detail}")
    return result


def run_suites(
    selection: str, settings: Settings, quiet: bool = False
) -> list[SuiteResult]:
    results = []
    for name in suite_names(selection):
        if not quiet:
            print(f"Running suite {name}...", file=sys.stderr)
        results.append(run_suite(name, settings, quiet))
    return results
