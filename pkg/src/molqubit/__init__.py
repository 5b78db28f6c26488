"""Rotational qubit encodings of 1Sigma molecules and their effective XXZ couplings."""

from .angmom import ThreeJArgs, wigner3j
from .classifier import (
    DEFAULT_TOL,
    EncodingClass,
    EncodingSpec,
    QubitEncoding,
    build_encoding,
    classify,
    classify_encoding,
    crossover_scan,
)
from .couplings import XxzCouplings, geometric_prefactor, xxz_dipole, xxz_quadrupole
from .errors import ConvergenceError, KindMismatchError, MismatchedFieldError, SizeLimitError
from .multipole import (
    MultipoleElements,
    dipole_element_bare,
    dressed_element,
    encoding_elements,
    quadrupole_element_bare,
)
from .rotor import DressedKet, RotationalKet, build_stark_block, dressed_state, dressed_states, stark_map
from .spinmodel import (
    Geometry,
    SpinHamiltonian,
    lattice_hamiltonian,
    oracle_project_dipole,
    oracle_project_quadrupole,
    pair_hamiltonian,
)

__version__ = "0.1.0"
