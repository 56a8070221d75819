"""Split quaternions and the split-signature 't Hooft symbols.

A split quaternion is ``c1 q1 + c2 q2 + c3 q3 + c4`` with
``q1^2 = q2^2 = 1`` and ``q3^2 = -1``.  The imaginary units anticommute
and close as ``q1 q2 = -q3``, ``q2 q3 = q1``, ``q3 q1 = q2``, which is
the associative completion of ``q1 q2 = -q3`` realized by both matrix
representations below.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import DimensionError

SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SY = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SZ = np.array([[1, 0], [0, -1]], dtype=np.complex128)
I2 = np.eye(2, dtype=np.complex128)

METRIC4 = np.diag([-1, -1, 1, 1])

# unit products: _MUL[i][j] = (sign, k) meaning e_i e_j = sign * e_k,
# basis order (q1, q2, q3, 1)
_MUL = [
    [(1, 3), (-1, 2), (-1, 1), (1, 0)],
    [(1, 2), (1, 3), (1, 0), (1, 1)],
    [(1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 0), (1, 1), (1, 2), (1, 3)],
]

_REPS = {
    "main": (SX, SY, -1j * SZ, I2),
    "appendixA": (SX, SZ, 1j * SY, I2),
}


@dataclass(frozen=True)
class SplitQuaternion:
    """Real coefficients over the basis ``(q1, q2, q3, 1)``."""

    c: tuple

    def __post_init__(self):
        c = tuple(float(x) for x in self.c)
        if len(c) != 4:
            raise DimensionError("a split quaternion has four coefficients")
        object.__setattr__(self, "c", c)

    def __mul__(self, other):
        return sq_mul(self, other)

    def __add__(self, other):
        return SplitQuaternion(tuple(a + b for a, b in zip(self.c, other.c)))

    def __neg__(self):
        return SplitQuaternion(tuple(-a for a in self.c))

    def scale(self, s):
        return SplitQuaternion(tuple(s * a for a in self.c))


Q1 = SplitQuaternion((1, 0, 0, 0))
Q2 = SplitQuaternion((0, 1, 0, 0))
Q3 = SplitQuaternion((0, 0, 1, 0))
ONE = SplitQuaternion((0, 0, 0, 1))
BASIS = (Q1, Q2, Q3, ONE)


def sq_mul(a, b):
    """Product of two split quaternions.

    Parameters
    ----------
    a, b : SplitQuaternion

    Returns
    -------
    SplitQuaternion
    """
    out = [0.0] * 4
    for i, ai in enumerate(a.c):
        if ai == 0:
            continue
        for j, bj in enumerate(b.c):
            if bj == 0:
                continue
            sign, k = _MUL[i][j]
            out[k] += sign * ai * bj
    return SplitQuaternion(tuple(out))


def sq_conj(a):
    """Quaternionic conjugate: imaginary parts flip sign."""
    c1, c2, c3, c4 = a.c
    return SplitQuaternion((-c1, -c2, -c3, c4))


def sq_matrix_rep(a, rep="main"):
    """2x2 complex matrix of a split quaternion.

    Parameters
    ----------
    a : SplitQuaternion
    rep : {"main", "appendixA"}
        ``main`` maps the units to ``(sx, sy, -i sz, 1)``; ``appendixA``
        to ``(sx, sz, i sy, 1)``.

    Returns
    -------
    numpy.ndarray
    """
    try:
        units = _REPS[rep]
    except KeyError:
        raise ValueError(f"unknown representation {rep!r}; options: {sorted(_REPS)}") from None
    return sum(ci * u for ci, u in zip(a.c, units))


def quaternion_units(rep="main"):
    """Matrices ``q^m`` and ``qbar^m`` for m = 1..4 (upper index)."""
    q = [u.copy() for u in _REPS[rep]]
    qbar = [-u for u in q[:3]] + [q[3].copy()]
    return q, qbar


def levi_civita(n):
    """Integer Levi-Civita tensor with ``eps[0, 1, ..., n-1] = +1``."""
    eps = np.zeros((n,) * n, dtype=np.int64)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        eps[perm] = -1 if inv % 2 else 1
    return eps


@dataclass(frozen=True)
class THooftSymbols:
    """Split-signature 't Hooft symbols as integer tensors.

    Arrays are indexed ``[m, n, i]`` with zero-based ``m, n`` in 0..3
    and ``i`` in 0..2.  ``eta_lower`` holds all indices down; ``eta``
    holds all indices up.
    """

    eta_lower: np.ndarray
    etabar_lower: np.ndarray
    eta: np.ndarray
    etabar: np.ndarray
    metric: np.ndarray
    epsilon: np.ndarray


@lru_cache(maxsize=None)
def thooft_symbols():
    """Build the 't Hooft symbols with ``eps_1234 = +1``.

    ``eta_mni = eps_mni4 + g_mi g_n4 - g_ni g_m4`` and ``etabar`` flips the
    signs of the two metric terms.
    """
    g = METRIC4
    eps = levi_civita(4)
    eta = np.zeros((4, 4, 3), dtype=np.int64)
    etabar = np.zeros((4, 4, 3), dtype=np.int64)
    for m in range(4):
        for n in range(4):
            for i in range(3):
                metric = g[m, i] * g[n, 3] - g[n, i] * g[m, 3]
                eta[m, n, i] = eps[m, n, i, 3] + metric
                etabar[m, n, i] = eps[m, n, i, 3] - metric
    gd = np.diag(g)
    raise_all = gd[:, None, None] * gd[None, :, None] * gd[None, None, :3]
    for arr in (eta, etabar, g, eps):
        arr.setflags(write=False)
    up = eta * raise_all
    upbar = etabar * raise_all
    up.setflags(write=False)
    upbar.setflags(write=False)
    return THooftSymbols(eta, etabar, up, upbar, g, eps)


def thooft(symbols, kind, m, n, i):
    """Upper-index 't Hooft symbol with one-based indices.

    Parameters
    ----------
    symbols : THooftSymbols
    kind : {"eta", "etaBar"}
    m, n : int
        In 1..4.
    i : int
        In 1..3.

    Returns
    -------
    int
    """
    if not (1 <= m <= 4 and 1 <= n <= 4 and 1 <= i <= 3):
        raise IndexError(f"'t Hooft indices out of range: ({m}, {n}, {i})")
    if kind == "eta":
        table = symbols.eta
    elif kind == "etaBar":
        table = symbols.etabar
    else:
        raise ValueError(f"kind must be 'eta' or 'etaBar', got {kind!r}")
    return int(table[m - 1, n - 1, i - 1])
