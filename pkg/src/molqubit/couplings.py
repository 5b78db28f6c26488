"""XXZ coupling constants from single-molecule multipole elements.

Couplings carry no geometric factor; :func:`geometric_prefactor` supplies it
separately (units d^2/R^3 for dipoles, q^2/R^5 for quadrupoles).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import KindMismatchError
from .multipole import MultipoleElements, check_kind

__all__ = ["XxzCouplings", "xxz_dipole", "xxz_quadrupole", "xxz_couplings", "geometric_prefactor"]

_MAGIC_EPS = 8 * 2.220446049250313e-16


@dataclass(frozen=True)
class XxzCouplings:
    kind: str
    J_z: float
    J_perp: float
    W: float
    V: float

    def swapped(self) -> "XxzCouplings":
        return XxzCouplings(self.kind, self.J_z, self.J_perp, -self.W, self.V)


def _require(elems: MultipoleElements, kind: str) -> None:
    if elems.kind != kind:
        raise KindMismatchError(f"expected {kind} elements, got {elems.kind}")


def xxz_dipole(elems: MultipoleElements) -> XxzCouplings:
    _require(elems, "dipole")
    up, down = elems.diag_up, elems.diag_down
    return XxzCouplings(
        "dipole",
        J_z=(up - down) ** 2,
        J_perp=2 * elems.trans_0**2 - elems.trans_p1**2 - elems.trans_m1**2,
        W=(up**2 - down**2) / 2,
        V=(up + down) ** 2 / 4,
    )


def xxz_quadrupole(elems: MultipoleElements) -> XxzCouplings:
    """Quadrupole couplings; the exchange term weights the p = 0, +-1, +-2
    transition elements by 6, -4 and +1."""
    _require(elems, "quadrupole")
    up, down = elems.diag_up, elems.diag_down
    exchange = (
        6 * elems.trans_0**2
        - 4 * (elems.trans_p1**2 + elems.trans_m1**2)
        + (elems.trans_p2**2 + elems.trans_m2**2)
    )
    return XxzCouplings(
        "quadrupole",
        J_z=(up - down) ** 2,
        J_perp=2 * exchange,
        W=(up**2 - down**2) / 2,
        V=(up + down) ** 2 / 4,
    )


def xxz_couplings(elems: MultipoleElements) -> XxzCouplings:
    if elems.kind == "dipole":
        return xxz_dipole(elems)
    return xxz_quadrupole(elems)


def geometric_prefactor(kind: str, theta: float, R: float) -> float:
    """Angular and radial factor multiplying the bracketed XXZ terms."""
    check_kind(kind)
    if not R > 0:
        raise ValueError(f"pair distance must be positive, got {R}")
    c2 = math.cos(theta) ** 2
    if kind == "dipole":
        angular = 1 - 3 * c2
        # cos^2 of the magic angle is not representable; clear the roundoff
        if abs(angular) <= _MAGIC_EPS:
            return 0.0
        return angular / R**3
    return 3 / 8 * (35 / 3 * c2**2 - 10 * c2 + 1) / R**5
