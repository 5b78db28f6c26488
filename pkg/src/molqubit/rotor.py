"""Rigid-rotor Stark problem for a 1Sigma molecule in a dc field along z.

Everything is in reduced units: energies in B_e, the field as
eta = d E / B_e. Each M_N block is tridiagonal in the |N M_N> basis and is
diagonalized independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, NamedTuple, Optional, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .angmom import tensor_element
from .errors import ConvergenceError

__all__ = [
    "RotationalKet",
    "DressedKet",
    "CONVERGENCE_THRESHOLD",
    "BASIS_PADDING",
    "default_nmax",
    "build_stark_block",
    "dressed_states",
    "dressed_state",
    "match_labels",
    "StarkLevel",
    "stark_map",
]

CONVERGENCE_THRESHOLD = 1e-10
BASIS_PADDING = 8


@dataclass(frozen=True)
class RotationalKet:
    N: int
    M_N: int
    spin_tag: Optional[Hashable] = None

    def __post_init__(self):
        if self.N < 0 or abs(self.M_N) > self.N:
            raise ValueError(f"invalid rotor state |{self.N} {self.M_N}>")


@dataclass(frozen=True, eq=False)
class DressedKet:
    """Field-dressed rotor state |Ñ M_N>, adiabatically labelled by its zero-field N.

    ``coeffs[i]`` is the amplitude on |N = |M_N| + i, M_N>.
    """

    label_N: int
    M_N: int
    eta: float
    energy: float
    coeffs: np.ndarray = field(repr=False)
    spin_tag: Optional[Hashable] = None

    @property
    def n_min(self) -> int:
        return abs(self.M_N)

    @property
    def n_max(self) -> int:
        return abs(self.M_N) + len(self.coeffs) - 1

    @property
    def basis_N(self) -> np.ndarray:
        return np.arange(self.n_min, self.n_max + 1)

    def with_spin(self, spin_tag: Optional[Hashable]) -> "DressedKet":
        return DressedKet(self.label_N, self.M_N, self.eta, self.energy, self.coeffs, spin_tag)

    def key(self) -> tuple:
        return (self.label_N, self.M_N, self.spin_tag)


def default_nmax(label_max: int, M_N: int = 0) -> int:
    return max(label_max, abs(M_N)) + BASIS_PADDING


def _check_block_args(M_N: int, eta: float, N_max: int) -> None:
    if N_max < abs(M_N):
        raise ValueError(f"N_max={N_max} is below |M_N|={abs(M_N)}")
    if eta < 0:
        raise ValueError(f"eta must be non-negative, got {eta}")


def _block_bands(M_N: int, eta: float, N_max: int) -> tuple[np.ndarray, np.ndarray]:
    ns = np.arange(abs(M_N), N_max + 1)
    diag = (ns * (ns + 1)).astype(float)
    off = np.array(
        [-eta * tensor_element(1, int(n), M_N, 0, int(n) + 1, M_N) for n in ns[:-1]],
        dtype=float,
    )
    return diag, off


def build_stark_block(M_N: int, eta: float, N_max: int) -> np.ndarray:
    """Dense Stark Hamiltonian for one M_N block, in units of B_e."""
    _check_block_args(M_N, eta, N_max)
    diag, off = _block_bands(M_N, eta, N_max)
    H = np.diag(diag)
    if len(off):
        idx = np.arange(len(off))
        H[idx, idx + 1] = off
        H[idx + 1, idx] = off
    return H


def _fix_phase(vectors: np.ndarray) -> np.ndarray:
    cols = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[cols, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def _solve_block(M_N: int, eta: float, N_max: int) -> tuple[np.ndarray, np.ndarray]:
    diag, off = _block_bands(M_N, eta, N_max)
    if len(diag) == 1:
        return diag.copy(), np.ones((1, 1))
    if eta == 0.0:
        # exact zero-field limit: no roundoff in energies or vectors
        return diag.copy(), np.eye(len(diag))
    energies, vectors = eigh_tridiagonal(diag, off)
    return energies, _fix_phase(vectors)


def dressed_states(
    eta: float,
    M_N: int,
    N_max: Optional[int] = None,
    label_max: Optional[int] = None,
    spin_tag: Optional[Hashable] = None,
) -> list[DressedKet]:
    """Dressed states of the M_N block with labels |M_N| .. label_max.

    Within one M_N block the Stark matrix is an irreducible tridiagonal
    matrix for eta > 0, so its eigenvalues never cross and the k-th lowest
    level is adiabatically connected to N = |M_N| + k.

    ``N_max`` defaults to ``max(label_max, |M_N|) + 8``. ``label_max``
    defaults to ``N_max - 8`` (but at least |M_N|). Every returned state
    must have weight below ``CONVERGENCE_THRESHOLD`` on N_max.
    """
    m = abs(M_N)
    if N_max is None:
        N_max = default_nmax(m if label_max is None else label_max, M_N)
    if label_max is None:
        label_max = max(m, N_max - BASIS_PADDING)
    _check_block_args(M_N, eta, N_max)
    if label_max > N_max:
        raise ValueError(f"label_max={label_max} exceeds N_max={N_max}")
    energies, vectors = _solve_block(M_N, eta, N_max)
    states = []
    for k in range(label_max - m + 1):
        c = vectors[:, k]
        tail = c[-1] ** 2
        if tail >= CONVERGENCE_THRESHOLD:
            raise ConvergenceError(
                f"state |{m + k}~ {M_N}> at eta={eta} has |c_Nmax|^2={tail:.3e} "
                f"with N_max={N_max}"
            )
        states.append(DressedKet(m + k, M_N, float(eta), float(energies[k]), c.copy(), spin_tag))
    return states


def dressed_state(
    label_N: int,
    M_N: int,
    eta: float,
    N_max: Optional[int] = None,
    spin_tag: Optional[Hashable] = None,
) -> DressedKet:
    if abs(M_N) > label_N:
        raise ValueError(f"invalid label |{label_N}~ {M_N}>")
    if N_max is None:
        N_max = default_nmax(label_N, M_N)
    return dressed_states(eta, M_N, N_max, label_max=label_N, spin_tag=spin_tag)[-1]


def match_labels(previous: np.ndarray, current: np.ndarray) -> list[int]:
    """Greedy maximum-overlap assignment between two sets of eigenvectors.

    Column ``i`` of ``previous`` is matched to column ``result[i]`` of
    ``current``; the largest overlaps are assigned first.
    """
    overlaps = np.abs(previous.T @ current)
    n = overlaps.shape[0]
    order = np.argsort(-overlaps, axis=None, kind="stable")
    result = [-1] * n
    taken = set()
    for flat in order:
        i, j = divmod(int(flat), overlaps.shape[1])
        if result[i] >= 0 or j in taken:
            continue
        result[i] = j
        taken.add(j)
    return result


class StarkLevel(NamedTuple):
    eta: float
    N_label: int
    M_N: int
    energy: float


def stark_map(
    eta_grid: Sequence[float], label_max: int, N_max: Optional[int] = None
) -> list[StarkLevel]:
    """Energies of every |Ñ M_N> with Ñ <= label_max along a field grid.

    Rows are sorted by (eta, N_label, M_N).
    """
    grid = [float(e) for e in eta_grid]
    if any(e < 0 for e in grid):
        raise ValueError("eta grid must be non-negative")
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise ValueError("eta grid must be sorted ascending")
    rows = []
    for eta in grid:
        for M in range(-label_max, label_max + 1):
            nmax = default_nmax(label_max, M) if N_max is None else N_max
            for s in dressed_states(eta, M, nmax, label_max=label_max):
                rows.append(StarkLevel(eta, s.label_N, M, s.energy))
    rows.sort(key=lambda r: (r.eta, r.N_label, r.M_N))
    return rows
