"""Four-class taxonomy of qubit encodings by the type of effective coupling.

Z marks a nonzero Ising term, X a nonzero spin-exchange term:

    0/0 interactionless, 0/1 spin-exchange, 1/0 Ising, 1/1 XXZ
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Hashable, NamedTuple, Optional, Sequence

from .couplings import XxzCouplings, xxz_couplings
from .multipole import MultipoleElements, check_kind, encoding_elements
from .rotor import DressedKet, default_nmax, dressed_state
from .errors import MismatchedFieldError

__all__ = [
    "DEFAULT_TOL",
    "CLASS_NAMES",
    "TABLE_ROWS",
    "EncodingClass",
    "EncodingSpec",
    "QubitEncoding",
    "classify",
    "diagram_class",
    "build_encoding",
    "classify_encoding",
    "ClassInterval",
    "crossover_scan",
]

DEFAULT_TOL = 1e-9

CLASS_NAMES = {
    (0, 0): "interactionless",
    (0, 1): "spin-exchange",
    (1, 0): "Ising",
    (1, 1): "XXZ",
}

# Example encodings for each class, keyed by (Z, X).
TABLE_ROWS = {
    (0, 0): "nuclear spin sublevels (N = 0); non-adjacent rotational states, E = 0",
    (0, 1): "adjacent rotational states, E = 0, same nuclear spin",
    (1, 0): "spin-rotational states (N = 0, 1) with different nuclear spin; "
    "non-adjacent rotational states with |dM_N| >= 2",
    (1, 1): "adjacent rotational states, E > 0; non-adjacent rotational states, "
    "E > 0, |dM_N| <= 1, same nuclear spin",
}


@dataclass(frozen=True)
class EncodingClass:
    Z: int
    X: int

    def __post_init__(self):
        if self.Z not in (0, 1) or self.X not in (0, 1):
            raise ValueError(f"Z and X must be 0 or 1, got ({self.Z}, {self.X})")

    @property
    def name(self) -> str:
        return CLASS_NAMES[(self.Z, self.X)]

    @property
    def code(self) -> str:
        return f"{self.Z}/{self.X}"

    def __str__(self) -> str:
        return f"{self.code} {self.name}"


def classify(c: XxzCouplings, tol: float = DEFAULT_TOL, scale: float = 1.0) -> EncodingClass:
    """Z = 1 iff |J_z| > tol*scale, X = 1 iff |J_perp| > tol*scale.

    Values exactly at the threshold count as zero.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    threshold = tol * scale
    return EncodingClass(int(abs(c.J_z) > threshold), int(abs(c.J_perp) > threshold))


def diagram_class(elems: MultipoleElements, tol: float = DEFAULT_TOL) -> EncodingClass:
    """Classify straight from the elements, without forming couplings.

    Z asks whether the diagonal elements differ, X whether any transition
    element survives. Element thresholds are sqrt(tol) so that they match a
    coupling threshold of ``tol`` for squared quantities.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    eps = math.sqrt(tol)
    z = abs(elems.diag_up - elems.diag_down) > eps
    trans = (elems.trans_0, elems.trans_p1, elems.trans_m1, elems.trans_p2, elems.trans_m2)
    x = any(abs(t) > eps for t in trans)
    return EncodingClass(int(z), int(x))


_STATE_RE = re.compile(r"^\s*(\d+)\s*,\s*([+-]?\d+)\s*(?:,\s*([^,:]+?)\s*)?$")


@dataclass(frozen=True)
class EncodingSpec:
    """Quantum numbers of the two qubit states, parsed from ``N,M[,spin]:N,M[,spin]``."""

    up_N: int
    up_M: int
    up_spin: Optional[Hashable]
    down_N: int
    down_M: int
    down_spin: Optional[Hashable]

    def __post_init__(self):
        for n, m in ((self.up_N, self.up_M), (self.down_N, self.down_M)):
            if n < 0 or abs(m) > n:
                raise ValueError(f"invalid state label ({n}, {m})")
        if (self.up_N, self.up_M, self.up_spin) == (self.down_N, self.down_M, self.down_spin):
            raise ValueError("qubit states must be distinct")

    @classmethod
    def parse(cls, text: str) -> "EncodingSpec":
        parts = text.split(":")
        if len(parts) != 2:
            raise ValueError(f"encoding {text!r} must be two states joined by ':'")
        states = []
        for part in parts:
            m = _STATE_RE.match(part)
            if not m:
                raise ValueError(f"cannot parse state {part!r}; expected N,M_N[,spin]")
            states.append((int(m.group(1)), int(m.group(2)), m.group(3)))
        (un, um, us), (dn, dm, ds) = states
        return cls(un, um, us, dn, dm, ds)

    def __str__(self) -> str:
        def fmt(n, m, s):
            return f"{n},{m}" if s is None else f"{n},{m},{s}"

        return f"{fmt(self.up_N, self.up_M, self.up_spin)}:{fmt(self.down_N, self.down_M, self.down_spin)}"

    @property
    def label_max(self) -> int:
        return max(self.up_N, self.down_N)

    @property
    def m_max(self) -> int:
        return max(abs(self.up_M), abs(self.down_M))


@dataclass(frozen=True)
class QubitEncoding:
    up: DressedKet
    down: DressedKet

    def __post_init__(self):
        if self.up.eta != self.down.eta:
            raise MismatchedFieldError(f"up at eta={self.up.eta}, down at eta={self.down.eta}")
        if self.up.key() == self.down.key():
            raise ValueError("qubit states must be distinct")

    @property
    def eta(self) -> float:
        return self.up.eta


def build_encoding(spec: EncodingSpec, eta: float, N_max: Optional[int] = None) -> QubitEncoding:
    """Dressed states for both qubit levels in a shared basis."""
    if N_max is None:
        N_max = default_nmax(spec.label_max, spec.m_max)
    up = dressed_state(spec.up_N, spec.up_M, eta, N_max, spec.up_spin)
    down = dressed_state(spec.down_N, spec.down_M, eta, N_max, spec.down_spin)
    return QubitEncoding(up, down)


def classify_encoding(
    spec: EncodingSpec | str,
    kind: str,
    eta: float,
    tol: float = DEFAULT_TOL,
    N_max: Optional[int] = None,
) -> tuple[EncodingClass, XxzCouplings, MultipoleElements]:
    if isinstance(spec, str):
        spec = EncodingSpec.parse(spec)
    check_kind(kind)
    enc = build_encoding(spec, eta, N_max)
    elems = encoding_elements(enc, kind)
    couplings = xxz_couplings(elems)
    return classify(couplings, tol), couplings, elems


class ClassInterval(NamedTuple):
    eta_start: float
    eta_end: float
    cls: EncodingClass


def crossover_scan(
    spec: EncodingSpec | str,
    kind: str,
    eta_grid: Sequence[float],
    tol: float = DEFAULT_TOL,
    N_max: Optional[int] = None,
) -> list[ClassInterval]:
    """Maximal runs of grid points sharing one class.

    Each interval spans the first and last grid point of its run, so a
    crossover right at eta = 0 yields a single-point interval.
    """
    grid = [float(e) for e in eta_grid]
    if any(e < 0 for e in grid) or any(b < a for a, b in zip(grid, grid[1:])):
        raise ValueError("eta grid must be non-negative and sorted ascending")
    intervals: list[ClassInterval] = []
    for eta in grid:
        cls = classify_encoding(spec, kind, eta, tol, N_max)[0]
        if intervals and intervals[-1].cls == cls:
            intervals[-1] = intervals[-1]._replace(eta_end=eta)
        else:
            intervals.append(ClassInterval(eta, eta, cls))
    return intervals
