"""Command-line front end.

Subcommands write CSV (or a text report) to stdout or ``--out``:

  stark-map      dressed-state energies vs eta
  elements       qubit-basis multipole elements vs eta
  couplings      J_z, J_perp, W, V and class vs eta
  classify       report for one encoding at one eta
  lattice        dense many-spin Hamiltonian as CSV
  convert-field  lab field (kV/cm) to reduced eta

Exit codes: 0 success, 2 usage or config error, 3 convergence failure.
"""

from __future__ import annotations

import argparse
import io
import sys
from typing import Optional, Sequence

import numpy as np

from .classifier import (
    DEFAULT_TOL,
    TABLE_ROWS,
    EncodingSpec,
    build_encoding,
    classify,
    classify_encoding,
)
from .config import MoleculeConfig, convert_field, load_config
from .couplings import xxz_couplings
from .errors import ConvergenceError
from .multipole import FIELDS, encoding_elements
from .rotor import stark_map
from .spinmodel import Geometry, lattice_hamiltonian

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3

DEFAULT_GRIDS = {"dipole": (0.0, 6.0, 121), "quadrupole": (0.0, 10.0, 201)}


class UsageError(ValueError):
    pass


def fmt(x: float) -> str:
    """Fixed-point with 12 decimals; negative zero prints as zero."""
    s = f"{x:.12f}"
    if s.startswith("-") and not s.strip("-0."):
        s = s[1:]
    return s


def parse_eta_range(text: str) -> list[float]:
    try:
        lo, hi, n = text.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise UsageError(f"--eta-range expects MIN:MAX:N, got {text!r}") from None
    if not 0 <= lo < hi or n < 2:
        raise UsageError("--eta-range needs 0 <= MIN < MAX and N >= 2")
    return [float(x) for x in np.linspace(lo, hi, n)]


def _grid(args, kind: str = "dipole") -> list[float]:
    if args.eta is not None and args.eta_range is not None:
        raise UsageError("give --eta or --eta-range, not both")
    if args.eta is not None:
        if args.eta < 0:
            raise UsageError("--eta must be non-negative")
        return [args.eta]
    if args.eta_range is not None:
        return parse_eta_range(args.eta_range)
    lo, hi, n = DEFAULT_GRIDS[kind]
    return [float(x) for x in np.linspace(lo, hi, n)]


def _nmax(args, config: MoleculeConfig) -> Optional[int]:
    return args.nmax if args.nmax is not None else config.nmax


def run_stark_map(
    config: MoleculeConfig, eta_grid: Sequence[float], label_max: int, N_max: Optional[int] = None
) -> str:
    out = io.StringIO()
    out.write("eta,N_label,M_N,energy_Be\n")
    for row in stark_map(eta_grid, label_max, N_max):
        out.write(f"{fmt(row.eta)},{row.N_label},{row.M_N},{fmt(row.energy)}\n")
    return out.getvalue()


def run_elements(
    config: MoleculeConfig,
    spec: EncodingSpec,
    kind: str,
    eta_grid: Sequence[float],
    N_max: Optional[int] = None,
) -> str:
    out = io.StringIO()
    out.write("eta," + ",".join(FIELDS) + "\n")
    for eta in eta_grid:
        elems = encoding_elements(build_encoding(spec, eta, N_max), kind)
        out.write(fmt(eta) + "," + ",".join(fmt(v) for v in elems.values()) + "\n")
    return out.getvalue()


def run_couplings(
    config: MoleculeConfig,
    spec: EncodingSpec,
    kind: str,
    eta_grid: Sequence[float],
    tol: float = DEFAULT_TOL,
    N_max: Optional[int] = None,
) -> str:
    out = io.StringIO()
    out.write("eta,J_z,J_perp,W,V,class\n")
    for eta in eta_grid:
        elems = encoding_elements(build_encoding(spec, eta, N_max), kind)
        c = xxz_couplings(elems)
        cls = classify(c, tol)
        out.write(",".join(fmt(v) for v in (eta, c.J_z, c.J_perp, c.W, c.V)) + f",{cls.code}\n")
    return out.getvalue()


def run_classify(
    config: MoleculeConfig,
    spec: EncodingSpec,
    kind: str,
    eta: float,
    tol: float = DEFAULT_TOL,
    N_max: Optional[int] = None,
) -> str:
    cls, c, elems = classify_encoding(spec, kind, eta, tol, N_max)
    unit = "d" if kind == "dipole" else "q"
    lines = [
        f"molecule: {config.name}",
        f"encoding: up = |{spec.up_N}~ {spec.up_M}> spin {spec.up_spin}, "
        f"down = |{spec.down_N}~ {spec.down_M}> spin {spec.down_spin}",
        f"interaction: {kind}, eta = {fmt(eta)}",
        "",
        f"elements (units of {unit}):",
    ]
    lines += [f"  {name:<10} {fmt(v)}" for name, v in zip(FIELDS, elems.values())]
    lines += [
        f"couplings (units of {unit}^2/R^{3 if kind == 'dipole' else 5}):",
        f"  J_z        {fmt(c.J_z)}",
        f"  J_perp     {fmt(c.J_perp)}",
        f"  W          {fmt(c.W)}",
        f"  V          {fmt(c.V)}",
        "",
        f"|J_z| = (diag_up - diag_down)^2 {'>' if cls.Z else '<='} tol = {tol:g}  ->  Z = {cls.Z}",
        f"|J_perp| (transition elements) {'>' if cls.X else '<='} tol = {tol:g}  ->  X = {cls.X}",
        f"class: {cls.code} {cls.name}",
        f"typical encodings of this class: {TABLE_ROWS[(cls.Z, cls.X)]}",
        "",
        "[classification]",
        f"encoding = {spec}",
        f"kind = {kind}",
        f"eta = {fmt(eta)}",
    ]
    lines += [f"{name} = {fmt(v)}" for name, v in zip(FIELDS, elems.values())]
    lines += [
        f"J_z = {fmt(c.J_z)}",
        f"J_perp = {fmt(c.J_perp)}",
        f"W = {fmt(c.W)}",
        f"V = {fmt(c.V)}",
        f"Z = {cls.Z}",
        f"X = {cls.X}",
        f"class = {cls.code}",
        f"name = {cls.name}",
    ]
    return "\n".join(lines) + "\n"


def _parse_positions(text: str) -> np.ndarray:
    try:
        pts = [[float(v) for v in p.split(",")] for p in text.split(";") if p.strip()]
    except ValueError:
        raise UsageError(f"cannot parse positions {text!r}") from None
    if not pts or any(len(p) != 3 for p in pts):
        raise UsageError("positions must be 'x,y,z;x,y,z;...'")
    return np.array(pts)


def run_lattice(
    config: MoleculeConfig,
    spec: EncodingSpec,
    kind: str,
    eta: float,
    geom: Geometry,
    N_max: Optional[int] = None,
) -> str:
    elems = encoding_elements(build_encoding(spec, eta, N_max), kind)
    H = lattice_hamiltonian(geom, xxz_couplings(elems)).matrix
    out = io.StringIO()
    for row in H:
        out.write(",".join(fmt(v) for v in row) + "\n")
    return out.getvalue()


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="molqubit",
        description="Field-dressed rotor states, multipole couplings and qubit encoding classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="molecule config file (key = value)")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--nmax", type=int, help="rotational basis cutoff")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--eta", type=float, help="single reduced field value")
    grid.add_argument("--eta-range", help="grid MIN:MAX:N")

    enc = argparse.ArgumentParser(add_help=False)
    enc.add_argument("--encoding", default="0,0:2,0", help="N,M_N[,spin]:N,M_N[,spin]")
    enc.add_argument("--kind", choices=("dipole", "quadrupole"), default="dipole")
    enc.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = sub.add_parser("stark-map", parents=[common, grid], help="energy levels vs eta")
    p.add_argument("--label-max", type=int, default=2)
    sub.add_parser("elements", parents=[common, grid, enc], help="multipole elements vs eta")
    sub.add_parser("couplings", parents=[common, grid, enc], help="XXZ couplings vs eta")
    sub.add_parser("classify", parents=[common, grid, enc], help="classification report")
    p = sub.add_parser("lattice", parents=[common, grid, enc], help="many-spin Hamiltonian")
    p.add_argument("--positions", help="site positions 'x,y,z;x,y,z;...'")
    p.add_argument("--chain", type=int, help="N sites on a line with unit spacing")
    p.add_argument("--angle", type=float, default=90.0, help="chain angle to the field axis, degrees")
    p = sub.add_parser("convert-field", parents=[common], help="kV/cm to reduced eta")
    p.add_argument("--field", type=float, required=True, help="field in kV/cm")
    p.add_argument("--d", type=float, help="dipole moment in Debye")
    p.add_argument("--be", type=float, help="rotational constant in MHz")
    return parser


def _dispatch(args) -> str:
    config = load_config(args.config) if args.config else MoleculeConfig()
    if args.command == "convert-field":
        d = args.d if args.d is not None else (config.d if config.d_unit == "Debye" else None)
        be = args.be if args.be is not None else (config.B_e if config.B_e_unit == "MHz" else None)
        if d is None or be is None:
            raise UsageError("convert-field needs --d (Debye) and --be (MHz), or a config with those units")
        return fmt(convert_field(d, be, args.field)) + "\n"
    nmax = _nmax(args, config)
    if args.command == "stark-map":
        if args.label_max < 0:
            raise UsageError("--label-max must be non-negative")
        return run_stark_map(config, _grid(args), args.label_max, nmax)
    spec = EncodingSpec.parse(args.encoding)
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    if args.command == "elements":
        return run_elements(config, spec, args.kind, _grid(args, args.kind), nmax)
    if args.command == "couplings":
        return run_couplings(config, spec, args.kind, _grid(args, args.kind), args.tol, nmax)
    if args.command == "classify":
        if args.eta is None:
            raise UsageError("classify needs --eta")
        return run_classify(config, spec, args.kind, args.eta, args.tol, nmax)
    if args.command == "lattice":
        if args.eta is None:
            raise UsageError("lattice needs --eta")
        if (args.positions is None) == (args.chain is None):
            raise UsageError("give exactly one of --positions or --chain")
        if args.positions is not None:
            pos = _parse_positions(args.positions)
        else:
            if args.chain < 2:
                raise UsageError("--chain needs at least 2 sites")
            a = np.radians(args.angle)
            pos = np.outer(np.arange(args.chain), [np.sin(a), 0.0, np.cos(a)])
        return run_lattice(config, spec, args.kind, args.eta, Geometry(pos), nmax)
    raise UsageError(f"unknown command {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = _dispatch(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
