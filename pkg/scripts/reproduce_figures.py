"""Write the CSV data behind the Stark-map, matrix-element and coupling figures.

    python scripts/reproduce_figures.py --outdir figures/

Reduced units throughout (d = q = B_e = 1). One file per panel/encoding.
"""

import argparse
from pathlib import Path

import numpy as np

from molqubit.classifier import EncodingSpec
from molqubit.cli import DEFAULT_GRIDS, run_couplings, run_elements, run_stark_map
from molqubit.config import MoleculeConfig

ENCODINGS = {"2t0": "0,0:2,0", "2t1": "0,0:2,1", "2t2": "0,0:2,2"}


def grid(kind):
    lo, hi, n = DEFAULT_GRIDS[kind]
    return [float(x) for x in np.linspace(lo, hi, n)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="figures")
    args = parser.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    cfg = MoleculeConfig()

    (out / "stark_map.csv").write_text(run_stark_map(cfg, grid("dipole"), 2))
    for kind in ("dipole", "quadrupole"):
        for tag, enc in ENCODINGS.items():
            spec = EncodingSpec.parse(enc)
            (out / f"elements_{kind}_{tag}.csv").write_text(run_elements(cfg, spec, kind, grid(kind)))
            (out / f"couplings_{kind}_{tag}.csv").write_text(run_couplings(cfg, spec, kind, grid(kind)))
    for path in sorted(out.glob("*.csv")):
        print(path)


if __name__ == "__main__":
    main()
