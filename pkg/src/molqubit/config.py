"""Molecule configuration files and the one physical-unit conversion we need.

Config files are flat ``key = value`` text with ``#`` comments, e.g.::

    name = KRb
    B_e = 1113.95 MHz
    d = 0.574 Debye
    q = 0 reduced
    nmax = 12
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from scipy import constants

__all__ = [
    "DEBYE_KVCM_MHZ",
    "MoleculeConfig",
    "parse_config",
    "load_config",
    "convert_field",
]

# Energy of a 1 Debye dipole in a 1 kV/cm field, in MHz (E/h).
_DEBYE_SI = 1e-21 / constants.c  # C m
DEBYE_KVCM_MHZ = _DEBYE_SI * 1e5 / constants.h / 1e6

_UNITS = {
    "B_e": ("reduced", "MHz"),
    "d": ("reduced", "Debye"),
    "q": ("reduced",),
}


@dataclass(frozen=True)
class MoleculeConfig:
    name: str = "reduced"
    B_e: float = 1.0
    B_e_unit: str = "reduced"
    d: float = 1.0
    d_unit: str = "reduced"
    q: float = 1.0
    q_unit: str = "reduced"
    nmax: Optional[int] = None

    def __post_init__(self):
        if not self.B_e > 0:
            raise ValueError("B_e must be positive")
        if self.d < 0 or self.q < 0:
            raise ValueError("d and q must be non-negative")
        if self.d == 0 and self.q == 0:
            raise ValueError("at least one of d, q must be positive")
        if self.nmax is not None and self.nmax < 0:
            raise ValueError("nmax must be non-negative")

    def eta_from_field(self, E_kV_per_cm: float) -> float:
        if self.d_unit != "Debye" or self.B_e_unit != "MHz":
            raise ValueError("field conversion needs d in Debye and B_e in MHz")
        return convert_field(self.d, self.B_e, E_kV_per_cm)


def _quantity(key: str, raw: str) -> tuple[float, str]:
    parts = raw.split()
    if not 1 <= len(parts) <= 2:
        raise ValueError(f"{key}: expected 'value [unit]', got {raw!r}")
    value = float(parts[0])
    unit = parts[1] if len(parts) == 2 else "reduced"
    if unit not in _UNITS[key]:
        raise ValueError(f"{key}: unit {unit!r} not one of {_UNITS[key]}")
    return value, unit


def parse_config(text: str) -> MoleculeConfig:
    fields: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in fields or f"{key}_unit" in fields:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        if key == "name":
            fields["name"] = value
        elif key in _UNITS:
            fields[key], fields[f"{key}_unit"] = _quantity(key, value)
        elif key in ("nmax", "N_max"):
            fields["nmax"] = int(value)
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    return MoleculeConfig(**fields)


def load_config(path: str | Path) -> MoleculeConfig:
    return parse_config(Path(path).read_text())


def convert_field(d_debye: float, B_e_MHz: float, E_kV_per_cm: float) -> float:
    """Reduced field eta = d E / B_e from laboratory units."""
    if not B_e_MHz > 0:
        raise ValueError("B_e must be positive")
    return DEBYE_KVCM_MHZ * d_debye * E_kV_per_cm / B_e_MHz
