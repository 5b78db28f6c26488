"""Explicit spin matrices: the projected two-molecule Hamiltonian, the XXZ pair
Hamiltonian, and dense many-spin Hamiltonians for pinned molecules.

Basis convention: site 0 is the most significant bit, |up> is bit 0 and
|down> is bit 1, so two sites are ordered (up up, up down, down up, down down).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .couplings import XxzCouplings, geometric_prefactor
from .errors import KindMismatchError, SizeLimitError
from .multipole import MultipoleElements, check_kind

__all__ = [
    "MAX_SPINS",
    "Geometry",
    "SpinHamiltonian",
    "oracle_project_dipole",
    "oracle_project_quadrupole",
    "couplings_from_projection",
    "pair_hamiltonian",
    "lattice_hamiltonian",
    "total_sz",
]

MAX_SPINS = 14


@dataclass(frozen=True, eq=False)
class Geometry:
    positions: np.ndarray
    quantization_axis: np.ndarray = None

    def __post_init__(self):
        pos = np.atleast_2d(np.asarray(self.positions, dtype=float))
        if pos.shape[1] != 3:
            raise ValueError("positions must be 3-vectors")
        axis = np.array([0.0, 0.0, 1.0]) if self.quantization_axis is None else self.quantization_axis
        axis = np.asarray(axis, dtype=float)
        norm = np.linalg.norm(axis)
        if norm == 0:
            raise ValueError("quantization axis must be nonzero")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "quantization_axis", axis / norm)
        for i, j in self.pairs():
            if np.linalg.norm(pos[j] - pos[i]) == 0:
                raise ValueError(f"sites {i} and {j} coincide")

    @property
    def n_spins(self) -> int:
        return len(self.positions)

    def pairs(self):
        n = len(self.positions)
        return [(i, j) for i in range(n) for j in range(i + 1, n)]

    def pair_geometry(self, i: int, j: int) -> tuple[float, float]:
        """(theta_ij, R_ij) for one pair."""
        r = self.positions[j] - self.positions[i]
        R = float(np.linalg.norm(r))
        cos = float(np.clip(np.dot(r, self.quantization_axis) / R, -1.0, 1.0))
        return float(np.arccos(cos)), R


@dataclass(frozen=True, eq=False)
class SpinHamiltonian:
    n_spins: int
    matrix: np.ndarray
    kind: str


def _projection(kind: str, elems: MultipoleElements, w0: float, w1: float, w2: float) -> np.ndarray:
    if elems.kind != kind:
        raise KindMismatchError(f"expected {kind} elements, got {elems.kind}")
    up, down = elems.diag_up, elems.diag_down
    h23 = (
        w0 * elems.trans_0**2
        - w1 * (elems.trans_p1**2 + elems.trans_m1**2)
        + w2 * (elems.trans_p2**2 + elems.trans_m2**2)
    )
    H = np.diag([w0 * up**2, w0 * up * down, w0 * up * down, w0 * down**2])
    H[1, 2] = H[2, 1] = h23
    return H


def oracle_project_dipole(elems: MultipoleElements) -> np.ndarray:
    """q = 0 sector of the dipole-dipole operator in the two-qubit basis.

    Entries are <ab|2 d0 d0 + d1 d-1 + d-1 d1|cd>/2, evaluated element by
    element; the geometric factor is left out.
    """
    return _projection("dipole", elems, 1.0, 0.5, 0.0)


def oracle_project_quadrupole(elems: MultipoleElements) -> np.ndarray:
    """q = 0 sector of the quadrupole-quadrupole operator, with the
    6 q0q0 + 4 (q1q-1 + q-1q1) + (q2q-2 + q-2q2) weights."""
    return _projection("quadrupole", elems, 6.0, 4.0, 1.0)


def couplings_from_projection(H: np.ndarray, kind: str) -> XxzCouplings:
    """Read (J_z, J_perp, W, V) off a projected 4x4 matrix by matching it to
    the XXZ form entry by entry."""
    check_kind(kind)
    h11, h22, h33, h44 = np.diag(H)
    return XxzCouplings(
        kind,
        J_z=float(h11 - h22 - h33 + h44),
        J_perp=float(2 * H[1, 2]),
        W=float((h11 - h44) / 2),
        V=float((h11 + h22 + h33 + h44) / 4),
    )


def _xxz_block(c: XxzCouplings) -> np.ndarray:
    jz, w, v = c.J_z / 4, c.W, c.V
    H = np.diag([jz + w + v, -jz + v, -jz + v, jz - w + v])
    H[1, 2] = H[2, 1] = c.J_perp / 2
    return H


def pair_hamiltonian(c: XxzCouplings, theta: float, R: float) -> np.ndarray:
    """Two-site XXZ matrix including the geometric prefactor."""
    return geometric_prefactor(c.kind, theta, R) * _xxz_block(c)


def total_sz(n_spins: int) -> np.ndarray:
    """Diagonal of the total S_z operator."""
    states = np.arange(2**n_spins)
    bits = (states[:, None] >> np.arange(n_spins - 1, -1, -1)) & 1
    return (0.5 - bits).sum(axis=1)


def lattice_hamiltonian(geom: Geometry, c: XxzCouplings) -> SpinHamiltonian:
    """Dense XXZ Hamiltonian summed over all pairs of sites, in fixed pair order."""
    n = geom.n_spins
    if n > MAX_SPINS:
        raise SizeLimitError(f"{n} spins exceeds the dense limit of {MAX_SPINS}")
    dim = 2**n
    states = np.arange(dim)
    sz = 0.5 - ((states[:, None] >> np.arange(n - 1, -1, -1)) & 1)
    diag = np.zeros(dim)
    H = np.zeros((dim, dim))
    for i, j in geom.pairs():
        theta, R = geom.pair_geometry(i, j)
        pref = geometric_prefactor(c.kind, theta, R)
        if pref == 0.0:
            continue
        diag += pref * (c.J_z * sz[:, i] * sz[:, j] + c.W * (sz[:, i] + sz[:, j]) + c.V)
        if c.J_perp != 0.0:
            flip = (1 << (n - 1 - i)) | (1 << (n - 1 - j))
            anti = sz[:, i] != sz[:, j]
            src = states[anti]
            H[src ^ flip, src] += pref * c.J_perp / 2
    H[states, states] += diag
    return SpinHamiltonian(n, H, c.kind)
