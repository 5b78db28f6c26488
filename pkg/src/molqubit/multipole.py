"""Dipole and quadrupole matrix elements in the bare and dressed rotor bases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .angmom import tensor_element
from .errors import MismatchedFieldError
from .rotor import DressedKet, RotationalKet

if TYPE_CHECKING:
    from .classifier import QubitEncoding

__all__ = [
    "KINDS",
    "RANK",
    "MultipoleElements",
    "dipole_element_bare",
    "quadrupole_element_bare",
    "dressed_element",
    "encoding_elements",
]

RANK = {"dipole": 1, "quadrupole": 2}
KINDS = tuple(RANK)

FIELDS = ("diag_up", "diag_down", "trans_0", "trans_p1", "trans_m1", "trans_p2", "trans_m2")


def check_kind(kind: str) -> int:
    try:
        return RANK[kind]
    except KeyError:
        raise ValueError(f"unknown interaction kind {kind!r}; expected one of {KINDS}") from None


@dataclass(frozen=True)
class MultipoleElements:
    """Single-molecule elements in the qubit basis.

    ``trans_p1`` is <up|T_{+1}|down>, ``trans_m2`` is <up|T_{-2}|down>, and so
    on. Units are d for dipoles and q for quadrupoles.
    """

    kind: str
    diag_up: float = 0.0
    diag_down: float = 0.0
    trans_0: float = 0.0
    trans_p1: float = 0.0
    trans_m1: float = 0.0
    trans_p2: float = 0.0
    trans_m2: float = 0.0

    def __post_init__(self):
        check_kind(self.kind)
        if self.kind == "dipole" and (self.trans_p2 != 0.0 or self.trans_m2 != 0.0):
            raise ValueError("dipole elements carry no rank-2 transition components")

    def values(self) -> tuple[float, ...]:
        return tuple(getattr(self, f) for f in FIELDS)

    def swapped(self) -> "MultipoleElements":
        """Elements after exchanging the roles of |up> and |down>.

        Uses the real-valued conjugation relations T_{+1}^dag = -T_{-1} and
        T_{+2}^dag = T_{-2}.
        """
        return MultipoleElements(
            self.kind,
            diag_up=self.diag_down,
            diag_down=self.diag_up,
            trans_0=self.trans_0,
            trans_p1=-self.trans_m1,
            trans_m1=-self.trans_p1,
            trans_p2=self.trans_m2,
            trans_m2=self.trans_p2,
        )


def _bare(rank: int, bra: RotationalKet, p: int, ket: RotationalKet) -> float:
    if abs(p) > rank:
        raise ValueError(f"component p={p} out of range for rank {rank}")
    if bra.spin_tag != ket.spin_tag:
        return 0.0
    return tensor_element(rank, bra.N, bra.M_N, p, ket.N, ket.M_N)


def dipole_element_bare(bra: RotationalKet, p: int, ket: RotationalKet) -> float:
    """<N' M'|d_p|N M> in units of d, including the nuclear-spin delta."""
    return _bare(1, bra, p, ket)


def quadrupole_element_bare(bra: RotationalKet, p: int, ket: RotationalKet) -> float:
    """<N' M'|q_p|N M> in units of q, including the nuclear-spin delta."""
    return _bare(2, bra, p, ket)


def dressed_element(bra: DressedKet, kind: str, p: int, ket: DressedKet) -> float:
    """Sum over both basis expansions of the bare element of the p-th component."""
    rank = check_kind(kind)
    if abs(p) > rank:
        raise ValueError(f"component p={p} out of range for {kind}")
    if bra.eta != ket.eta:
        raise MismatchedFieldError(f"bra at eta={bra.eta}, ket at eta={ket.eta}")
    if bra.spin_tag != ket.spin_tag or ket.M_N + p != bra.M_N:
        return 0.0
    total = 0.0
    for i, n_bra in enumerate(bra.basis_N):
        cb = bra.coeffs[i]
        lo = max(ket.n_min, n_bra - rank)
        hi = min(ket.n_max, n_bra + rank)
        for n_ket in range(lo, hi + 1):
            t = tensor_element(rank, int(n_bra), bra.M_N, p, n_ket, ket.M_N)
            if t:
                total += cb * ket.coeffs[n_ket - ket.n_min] * t
    return float(total)


def encoding_elements(enc: "QubitEncoding", kind: str) -> MultipoleElements:
    up, down = enc.up, enc.down
    rank = check_kind(kind)
    vals = {
        "diag_up": dressed_element(up, kind, 0, up),
        "diag_down": dressed_element(down, kind, 0, down),
        "trans_0": dressed_element(up, kind, 0, down),
        "trans_p1": dressed_element(up, kind, 1, down),
        "trans_m1": dressed_element(up, kind, -1, down),
    }
    if rank == 2:
        vals["trans_p2"] = dressed_element(up, kind, 2, down)
        vals["trans_m2"] = dressed_element(up, kind, -2, down)
    return MultipoleElements(kind, **vals)
