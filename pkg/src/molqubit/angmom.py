"""Wigner 3j symbols for integer angular momenta.

Values come from the Racah single-sum formula evaluated with log-factorials;
the sign of every term is tracked separately so the logarithms stay real.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

__all__ = ["ThreeJArgs", "wigner3j", "tensor_element", "log_factorial", "clear_cache"]


@dataclass(frozen=True)
class ThreeJArgs:
    j1: int
    j2: int
    j3: int
    m1: int
    m2: int
    m3: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.j1, self.j2, self.j3, self.m1, self.m2, self.m3)


_LOGFACT: list[float] = [0.0]
_LOGFACT_LOCK = threading.Lock()


def log_factorial(n: int) -> float:
    """ln(n!) from a table that grows on demand."""
    if n < 0:
        raise ValueError(f"negative factorial argument {n}")
    if n >= len(_LOGFACT):
        with _LOGFACT_LOCK:
            while len(_LOGFACT) <= n:
                k = len(_LOGFACT)
                _LOGFACT.append(_LOGFACT[-1] + math.log(k))
    return _LOGFACT[n]


def _selection_rules_pass(j1, j2, j3, m1, m2, m3) -> bool:
    if min(j1, j2, j3) < 0:
        return False
    if m1 + m2 + m3 != 0:
        return False
    if abs(m1) > j1 or abs(m2) > j2 or abs(m3) > j3:
        return False
    if not abs(j1 - j2) <= j3 <= j1 + j2:
        return False
    # (j1 j2 j3; 0 0 0) vanishes for odd J
    if m1 == m2 == m3 == 0 and (j1 + j2 + j3) % 2:
        return False
    return True


def _canonicalize(j1, j2, j3, m1, m2, m3) -> tuple[tuple[int, ...], int]:
    """Map arguments to a representative under column permutations and m -> -m.

    Returns the representative and the sign relating its value to the
    original one.
    """
    J = j1 + j2 + j3
    odd = J % 2
    cols = ((j1, m1), (j2, m2), (j3, m3))
    # even permutations carry +1, odd permutations (-1)^J
    perms = (
        ((0, 1, 2), 0),
        ((1, 2, 0), 0),
        ((2, 0, 1), 0),
        ((1, 0, 2), 1),
        ((0, 2, 1), 1),
        ((2, 1, 0), 1),
    )
    best = None
    best_sign = 1
    for order, parity in perms:
        js = tuple(cols[i][0] for i in order)
        ms = tuple(cols[i][1] for i in order)
        for flip in (0, 1):
            mm = tuple(-m for m in ms) if flip else ms
            key = js + mm
            sign = -1 if (odd and (parity ^ flip)) else 1
            if best is None or key < best:
                best = key
                best_sign = sign
    return best, best_sign


# Above this ratio of largest term to sum, log-factorial roundoff is amplified
# past ~1e-12 relative; the alternating sum is then redone in exact integers.
_CANCELLATION_LIMIT = 100.0


def _racah_exact(j1, j2, j3, m1, m2, kmin, kmax) -> float:
    m3 = -m1 - m2
    f = math.factorial
    pref_num = (
        f(j1 + j2 - j3) * f(j1 - j2 + j3) * f(-j1 + j2 + j3)
        * f(j1 + m1) * f(j1 - m1) * f(j2 + m2) * f(j2 - m2) * f(j3 + m3) * f(j3 - m3)
    )
    pref_den = f(j1 + j2 + j3 + 1)
    dens = [
        f(k) * f(j1 + j2 - j3 - k) * f(j1 - m1 - k) * f(j2 + m2 - k)
        * f(j3 - j2 + m1 + k) * f(j3 - j1 - m2 + k)
        for k in range(kmin, kmax + 1)
    ]
    common = math.lcm(*dens)
    num = sum((-1) ** (k - kmin) * (common // d) for k, d in zip(range(kmin, kmax + 1), dens))
    if kmin % 2:
        num = -num
    if num == 0:
        return 0.0
    # value = num/common * sqrt(pref_num/pref_den), squared exactly then rooted once
    sq = Fraction(num * num * pref_num, common * common * pref_den)
    mag = math.sqrt(sq.numerator / sq.denominator)
    return mag if num > 0 else -mag


@lru_cache(maxsize=200_000)
def _racah(j1: int, j2: int, j3: int, m1: int, m2: int, m3: int) -> float:
    lf = log_factorial
    log_pref = 0.5 * (
        lf(j1 + j2 - j3)
        + lf(j1 - j2 + j3)
        + lf(-j1 + j2 + j3)
        - lf(j1 + j2 + j3 + 1)
        + lf(j1 + m1)
        + lf(j1 - m1)
        + lf(j2 + m2)
        + lf(j2 - m2)
        + lf(j3 + m3)
        + lf(j3 - m3)
    )
    kmin = max(0, j2 - j3 - m1, j1 - j3 + m2)
    kmax = min(j1 + j2 - j3, j1 - m1, j2 + m2)
    terms = []
    for k in range(kmin, kmax + 1):
        log_den = (
            lf(k)
            + lf(j1 + j2 - j3 - k)
            + lf(j1 - m1 - k)
            + lf(j2 + m2 - k)
            + lf(j3 - j2 + m1 + k)
            + lf(j3 - j1 - m2 + k)
        )
        term = math.exp(log_pref - log_den)
        terms.append(-term if k % 2 else term)
    total = math.fsum(terms)
    biggest = max(abs(t) for t in terms)
    if abs(total) * _CANCELLATION_LIMIT < biggest:
        total = _racah_exact(j1, j2, j3, m1, m2, kmin, kmax)
    if (j1 - j2 - m3) % 2:
        total = -total
    return total


def wigner3j(*args) -> float:
    """Wigner 3j symbol (j1 j2 j3; m1 m2 m3) for integer arguments.

    Accepts either six integers or a single :class:`ThreeJArgs`. Any
    selection-rule violation returns exactly ``0.0``.
    """
    if len(args) == 1 and isinstance(args[0], ThreeJArgs):
        args = args[0].as_tuple()
    if len(args) != 6:
        raise TypeError("wigner3j expects six integers or a ThreeJArgs")
    j1, j2, j3, m1, m2, m3 = (int(a) for a in args)
    if not _selection_rules_pass(j1, j2, j3, m1, m2, m3):
        return 0.0
    key, sign = _canonicalize(j1, j2, j3, m1, m2, m3)
    value = _racah(*key)
    return -value if sign < 0 else value


def clear_cache() -> None:
    _racah.cache_clear()


def tensor_element(rank: int, n_bra: int, m_bra: int, p: int, n_ket: int, m_ket: int) -> float:
    """<N' M'| T^rank_p |N M> for a rank-``rank`` tensor fixed along the rotor axis.

    Uses the phase (-1)^M' with the molecule-frame moment set to 1:
    (-1)^M' sqrt((2N'+1)(2N+1)) (N' k N; -M' p M) (N' k N; 0 0 0).
    """
    if m_ket + p != m_bra:
        return 0.0
    parity = wigner3j(n_bra, rank, n_ket, 0, 0, 0)
    if parity == 0.0:
        return 0.0
    angular = wigner3j(n_bra, rank, n_ket, -m_bra, p, m_ket)
    if angular == 0.0:
        return 0.0
    value = math.sqrt((2 * n_bra + 1) * (2 * n_ket + 1)) * angular * parity
    return -value if m_bra % 2 else value
