"""
Pre-Schwarzian f''/f' and Schwarzian (f''/f')' - (f''/f')^2 / 2 of map-germs.

Both operators accept branched germs: if f' vanishes to order n at the center,
f''/f' has a simple pole with residue n and S(f) a double pole with leading
coefficient (1 - (n+1)^2) / 2.
"""

from jetmoeb.errors import (
    BranchOrderMismatch,
    CoordinateNotInvertible,
    InsufficientOrder,
)
from jetmoeb.series import LaurentJet, PowerJet, compose, compositional_inverse


def branch_order(f: PowerJet) -> int:
    """Order of vanishing of f' at the center."""
    if f.order < 1:
        raise InsufficientOrder("Branch order needs a jet of order >= 1")
    df = f.derivative()
    n = df.valuation()
    if n > df.order:
        raise BranchOrderMismatch("Jet is constant to its known order")
    return n


def _checked_order(f: PowerJet, n: int | None) -> int:
    found = branch_order(f)
    if n is not None and found != n:
        raise BranchOrderMismatch(
            f"f' vanishes to order {found}, expected {n}", expected=n
        )
    if f.order < found + 2:
        raise InsufficientOrder(
            f"Branch order {found} needs a jet of order {found + 2}, got {f.order}"
        )
    return found


def pre_schwarzian(f: PowerJet, n: int | None = None) -> LaurentJet:
    """
    f''/f' as a Laurent jet.

    Args:
        f: Jet of the germ, known to order K
        n: Expected branch order; inferred from f when None

    Returns:
        Jet with a simple pole of residue n (no pole when n = 0), valid to
        order K - n - 2
    """
    n = _checked_order(f, n)
    df = f.derivative()
    ddf = df.derivative()
    # divide out z^n from f' and z^(n-1) from f'' before inverting
    unit = PowerJet(df.coeffs[n:])
    if n == 0:
        return (ddf / unit).to_laurent()
    top = PowerJet(ddf.coeffs[n - 1 :])
    return LaurentJet((top / unit).coeffs, pole=1)


def schwarzian(f: PowerJet, n: int | None = None) -> LaurentJet:
    """S(f), valid to order K - n - 3."""
    u = pre_schwarzian(f, n)
    return u.derivative() - u * u / 2


def relative_schwarzian(z2: PowerJet, z1: PowerJet) -> LaurentJet:
    """
    {z2, z1}: the Schwarzian of z2 written as a function of the coordinate z1.

    Both jets are expanded at the same point; z1 must be unbranched there.
    """
    centered = z1 - z1[0]
    if centered.valuation() != 1:
        raise CoordinateNotInvertible("z1 is branched at the center")
    return schwarzian(compose(z2, compositional_inverse(centered)))
