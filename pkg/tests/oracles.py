"""Independent reference computations used by the test-suite.

Nothing here imports the package: the 3j oracle works in exact rational
arithmetic, and the rotor oracle builds dense matrices with numpy.eigh.
"""

import math
from fractions import Fraction

import numpy as np

f = math.factorial


def threej_exact(j1, j2, j3, m1, m2, m3):
    """Racah formula with exact integers; returns a float rounded once."""
    if m1 + m2 + m3 != 0 or not abs(j1 - j2) <= j3 <= j1 + j2:
        return 0.0
    if abs(m1) > j1 or abs(m2) > j2 or abs(m3) > j3:
        return 0.0
    pref = Fraction(
        f(j1 + j2 - j3) * f(j1 - j2 + j3) * f(-j1 + j2 + j3),
        f(j1 + j2 + j3 + 1),
    ) * (f(j1 + m1) * f(j1 - m1) * f(j2 + m2) * f(j2 - m2) * f(j3 + m3) * f(j3 - m3))
    s = Fraction(0)
    for k in range(0, j1 + j2 + j3 + 1):
        args = (k, j1 + j2 - j3 - k, j1 - m1 - k, j2 + m2 - k, j3 - j2 + m1 + k, j3 - j1 - m2 + k)
        if min(args) < 0:
            continue
        den = 1
        for a in args:
            den *= f(a)
        s += Fraction((-1) ** k, den)
    if s == 0:
        return 0.0
    sign = (-1) ** ((j1 - j2 - m3) % 2) * (1 if s > 0 else -1)
    return sign * math.sqrt(s * s * pref)


def multipole_exact(rank, n1, m1, p, n2, m2):
    if m2 + p != m1:
        return 0.0
    return (
        (-1) ** (m1 % 2)
        * math.sqrt((2 * n1 + 1) * (2 * n2 + 1))
        * threej_exact(n1, rank, n2, -m1, p, m2)
        * threej_exact(n1, rank, n2, 0, 0, 0)
    )


def stark_matrix(M, eta, nmax):
    ns = range(abs(M), nmax + 1)
    H = np.array(
        [[-eta * multipole_exact(1, a, M, 0, b, M) for b in ns] for a in ns], dtype=float
    )
    H += np.diag([n * (n + 1) for n in ns])
    return H


def ramped_states(M, eta, nmax, step=0.05):
    """Eigenvectors at ``eta`` with columns ordered by zero-field parent N,
    found by ramping the field from 0 and matching maximum overlaps."""
    dim = nmax - abs(M) + 1
    vecs = np.eye(dim)
    n_steps = max(1, int(math.ceil(eta / step)))
    energies = np.array([n * (n + 1) for n in range(abs(M), nmax + 1)], dtype=float)
    for x in np.linspace(0, eta, n_steps + 1)[1:]:
        e, v = np.linalg.eigh(stark_matrix(M, x, nmax))
        ov = np.abs(vecs.T @ v)
        order = [int(np.argmax(ov[i])) for i in range(dim)]
        assert len(set(order)) == dim, "ambiguous overlap assignment"
        vecs = v[:, order]
        energies = e[order]
    return energies, vecs
