"""SU(1,1) ~ Sp(2;R) at the 2x2 matrix level.

The generators are kept unhalved (``tau = (i sx, i sy, sz)``); every
group element is written with the explicit factor 1/2, e.g.
``g = exp(i w_i tau^i / 2)``.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ConstraintError, DomainError
from .matcore import dagger
from .splitq import I2, SX, SY, SZ

METRIC3 = np.diag([-1.0, -1.0, 1.0])
TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class Su11Generators:
    """Structure matrices of su(1,1).

    Attributes
    ----------
    tau : tuple of ndarray
        ``(i sx, i sy, sz)``.
    kappa : tuple of ndarray
        Hermitian partners ``sz tau^i = (-sy, sx, 1)``.
    m_sym : tuple of ndarray
        Symmetric matrices ``sx kappa^i = (-i sz, 1, sx)``.
    metric : ndarray
        ``diag(-1, -1, 1)``.
    t_plus, t_minus, t3 : ndarray
        Ladder matrices and the Cartan element ``sz / 2``.
    """

    tau: tuple
    kappa: tuple
    m_sym: tuple
    metric: np.ndarray
    t_plus: np.ndarray
    t_minus: np.ndarray
    t3: np.ndarray


@lru_cache(maxsize=None)
def su11_generators():
    """Return the cached ``Su11Generators``."""
    tau = (1j * SX, 1j * SY, SZ.copy())
    kappa = tuple(SZ @ t for t in tau)
    m_sym = tuple(SX @ k for k in kappa)
    t_plus = 0.5 * (tau[1] - 1j * tau[0])
    t_minus = 0.5 * (tau[1] + 1j * tau[0])
    return Su11Generators(tau, kappa, m_sym, METRIC3.copy(), t_plus, t_minus, 0.5 * tau[2])


@dataclass(frozen=True)
class Sp2SqueezeParams:
    """Squeeze magnitude ``rho >= 0``, angle ``phi`` and gauge angle ``chi``.

    ``phi`` is reduced modulo 2 pi and ``chi`` modulo 4 pi.
    """

    rho: float
    phi: float
    chi: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.rho) or self.rho < 0:
            raise ValueError(f"rho must be a finite non-negative number, got {self.rho}")
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "phi", float(np.mod(self.phi, TWO_PI)))
        object.__setattr__(self, "chi", float(np.mod(self.chi, 2 * TWO_PI)))

    @property
    def xi(self):
        """Complex squeeze parameter ``(rho/2) e^{i phi}``."""
        return 0.5 * self.rho * np.exp(1j * self.phi)


@dataclass(frozen=True)
class BlochH20Point:
    """Point on the upper leaf ``-x1^2 - x2^2 + x3^2 = 1``, ``x3 >= 1``."""

    x: tuple = field(default=(0.0, 0.0, 1.0))

    def __post_init__(self):
        x = tuple(float(v) for v in self.x)
        if len(x) != 3:
            raise ValueError("H^{2,0} points have three coordinates")
        res = abs(-x[0] ** 2 - x[1] ** 2 + x[2] ** 2 - 1.0)
        if res > 1e-8 * max(1.0, x[2] ** 2) or x[2] < 1.0 - 1e-9:
            raise ConstraintError(f"point off the upper leaf (residual {res:.3g})", res)
        object.__setattr__(self, "x", x)

    def as_array(self):
        return np.array(self.x)


def su11_element(phi, rho, chi):
    """Euler-parametrized element ``e^{i phi tau3/2} e^{-i rho tau1/2} e^{i chi tau3/2}``.

    Parameters
    ----------
    phi, rho, chi : float
        Any real values; negative ``rho`` is allowed.

    Returns
    -------
    numpy.ndarray
        2x2 matrix with ``g^dag sz g = sz`` and ``det g = 1``.
    """
    ch, sh = np.cosh(rho / 2), np.sinh(rho / 2)
    return np.array([
        [ch * np.exp(0.5j * (phi + chi)), sh * np.exp(0.5j * (phi - chi))],
        [sh * np.exp(-0.5j * (phi - chi)), ch * np.exp(-0.5j * (phi + chi))],
    ])


def sp2_dirac_squeeze(p):
    """Dirac-type squeeze matrix ``M(rho, phi)``.

    Parameters
    ----------
    p : Sp2SqueezeParams

    Returns
    -------
    numpy.ndarray
        ``[[cosh(rho/2), -sinh(rho/2) e^{i phi}], [-sinh(rho/2) e^{-i phi}, cosh(rho/2)]]``.
    """
    ch, sh = np.cosh(p.rho / 2), np.sinh(p.rho / 2)
    return np.array([
        [ch, -sh * np.exp(1j * p.phi)],
        [-sh * np.exp(-1j * p.phi), ch],
    ])


def sp2_schwinger_squeeze(p):
    """Schwinger-type squeeze matrix ``g(phi, -rho, 0)``.

    Parameters
    ----------
    p : Sp2SqueezeParams

    Returns
    -------
    numpy.ndarray
    """
    return su11_element(p.phi, -p.rho, 0.0)


def su11_residual(g):
    """Largest of ``|g^dag sz g - sz|`` and ``|det g - 1|``."""
    g = np.asarray(g, dtype=np.complex128)
    return max(np.abs(dagger(g) @ SZ @ g - SZ).max(), abs(np.linalg.det(g) - 1.0))


def hopf1_project(g, tol=1e-10):
    """First non-compact Hopf map ``x^i = tr(g^dag kappa^i g) / 2``.

    Parameters
    ----------
    g : array_like
        2x2 SU(1,1) element.
    tol : float
        Allowed violation of ``g^dag sz g = sz`` and ``det g = 1``.

    Returns
    -------
    BlochH20Point

    Raises
    ------
    ConstraintError
        If ``g`` is not in SU(1,1) within ``tol``.
    """
    g = np.asarray(g, dtype=np.complex128)
    res = su11_residual(g)
    if res > tol:
        raise ConstraintError(f"not an SU(1,1) element (residual {res:.3g})", res)
    gens = su11_generators()
    x = [0.5 * np.trace(dagger(g) @ k @ g).real for k in gens.kappa]
    return BlochH20Point(tuple(x))


def hopf1_spinors(x, tol=1e-12):
    """Non-compact Hopf spinors over a point of the upper leaf.

    Parameters
    ----------
    x : BlochH20Point or sequence of 3 floats
    tol : float
        Rejection margin around ``x3 = -1``.

    Returns
    -------
    (numpy.ndarray, numpy.ndarray)
        Column spinors ``psi_L`` and ``psi_R = sx psi_L^*`` of shape (2, 1).
    """
    x1, x2, x3 = x.x if isinstance(x, BlochH20Point) else (float(v) for v in x)
    if x3 + 1.0 <= tol:
        raise DomainError("x3 = -1 lies off the spinor chart")
    norm = 1.0 / np.sqrt(2.0 * (x3 + 1.0))
    psi_l = norm * np.array([[x3 + 1.0], [x2 - 1j * x1]])
    psi_r = SX @ np.conj(psi_l)
    return psi_l, psi_r


def poincare_coord(p):
    """Stereographic coordinate ``tanh(rho/2) e^{i phi}`` on the Poincare disc."""
    return np.tanh(p.rho / 2) * np.exp(1j * p.phi)


def poincare_from_point(x):
    """``(x2 + i x1) / (1 + x3)`` for a point of the upper leaf."""
    x1, x2, x3 = x.x if isinstance(x, BlochH20Point) else x
    return (x2 + 1j * x1) / (1.0 + x3)


def gauss_params_sp2(p, type="dirac"):
    """Coefficients of the UDL form ``e^{a T+} e^{b T3} e^{c T-}``.

    Parameters
    ----------
    p : Sp2SqueezeParams
    type : {"dirac", "schwinger"}

    Returns
    -------
    (complex, complex, complex)
        ``(alpha, beta, gamma)``.
    """
    eta = poincare_coord(p)
    beta = -2.0 * np.log(np.cosh(p.rho / 2))
    if type == "dirac":
        return complex(-eta), complex(beta), complex(np.conj(eta))
    if type == "schwinger":
        return complex(-eta), complex(beta + 1j * p.phi), complex(abs(eta))
    raise ValueError(f"type must be 'dirac' or 'schwinger', got {type!r}")


def faithful_product(alpha, beta, gamma):
    """``e^{alpha t+} e^{beta t3} e^{gamma t-}`` in the 2x2 representation."""
    upper = np.array([[1.0, alpha], [0.0, 1.0]], dtype=np.complex128)
    diag = np.diag([np.exp(beta / 2), np.exp(-beta / 2)])
    lower = np.array([[1.0, 0.0], [-gamma, 1.0]], dtype=np.complex128)
    return upper @ diag @ lower


__all__ = [
    "I2", "SX", "SY", "SZ", "METRIC3",
    "Su11Generators", "su11_generators", "Sp2SqueezeParams", "BlochH20Point",
    "su11_element", "sp2_dirac_squeeze", "sp2_schwinger_squeeze", "su11_residual",
    "hopf1_project", "hopf1_spinors", "poincare_coord", "poincare_from_point",
    "gauss_params_sp2", "faithful_product",
]
