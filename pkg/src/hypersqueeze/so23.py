"""SO(2,3) ~ Sp(4;R) at the 4x4 matrix level.

Gamma matrices are built from the split-quaternion units,
``gamma^m = [[0, qbar^m], [q^m, 0]]`` and ``gamma^5 = diag(1, 1, -1, -1)``,
with metric ``g = diag(-1, -1, 1, 1, 1)``.  Indices in the public API
are one-based to match the usual physics labels (``sigma(3, 5)``).

The Bloch four-hyperboloid is parametrized by ``H22Params``:
``x^m = sin(theta) y^m``, ``x^5 = cos(theta)`` with
``y = (cos chi sinh rho, sin chi sinh rho, cos phi cosh rho, sin phi cosh rho)``.
"""

import os
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ConstraintError, RangeError
from .matcore import dagger, mat_exp
from .splitq import I2, SX, SZ, quaternion_units

METRIC5 = np.array([-1.0, -1.0, 1.0, 1.0, 1.0])
DEFAULT_SEED = 20231
SEED_ENV = "HYPERSQUEEZE_SEED"
Z2 = np.zeros((2, 2), dtype=np.complex128)


def resolve_seed(seed=None):
    """Seed for random property suites.

    ``HYPERSQUEEZE_SEED`` overrides everything; otherwise ``seed`` is used
    and falls back to ``DEFAULT_SEED``.
    """
    env = os.environ.get(SEED_ENV)
    if env not in (None, ""):
        return int(env)
    return DEFAULT_SEED if seed is None else int(seed)


def _block(a, b, c, d):
    return np.block([[a, b], [c, d]])


@dataclass(frozen=True)
class So23MatrixFamily:
    """Structure matrices of so(2,3).

    ``sigma`` has shape (5, 5, 4, 4) and is antisymmetric in its first two
    axes; ``sigma[a-1, b-1]`` is sigma^{ab}.  The other tensors follow
    the same zero-based layout.
    """

    gamma: np.ndarray
    sigma: np.ndarray
    k: np.ndarray
    kA: np.ndarray
    kAB: np.ndarray
    C: np.ndarray
    E: np.ndarray
    mA: np.ndarray
    mAB: np.ndarray
    metric: np.ndarray = field(default_factory=lambda: METRIC5.copy())

    def sig(self, a, b):
        """sigma^{ab} with one-based indices."""
        return self.sigma[a - 1, b - 1]

    def gam(self, a):
        """gamma^a with a one-based index."""
        return self.gamma[a - 1]

    def sig_lower(self, a, b):
        """sigma_{ab} = g_aa g_bb sigma^{ab}."""
        return METRIC5[a - 1] * METRIC5[b - 1] * self.sigma[a - 1, b - 1]

    def gam_lower(self, a):
        return METRIC5[a - 1] * self.gamma[a - 1]


PAIRS = tuple((a, b) for a in range(1, 6) for b in range(a + 1, 6))


def family_residuals(fam):
    """Residuals of the exact so(2,3) matrix identities.

    Returns
    -------
    dict
        Maps an identity label to the largest absolute entry violation.
    """
    g = METRIC5
    gam, sig, k = fam.gamma, fam.sigma, fam.k
    out = {}
    out["clifford"] = max(
        np.abs(gam[a] @ gam[b] + gam[b] @ gam[a] - 2 * g[a] * (a == b) * np.eye(4)).max()
        for a in range(5) for b in range(5))
    out["gamma_pseudo_hermitian"] = max(
        np.abs(dagger(gam[a]) - k @ gam[a] @ k).max() for a in range(5))
    out["sigma_pseudo_hermitian"] = max(
        np.abs(dagger(sig[a, b]) - k @ sig[a, b] @ k).max() for a in range(5) for b in range(5))
    worst = 0.0
    for a in range(5):
        for b in range(5):
            for c in range(5):
                for d in range(5):
                    lhs = sig[a, b] @ sig[c, d] - sig[c, d] @ sig[a, b]
                    rhs = 1j * ((a == c) * g[a] * sig[b, d] - (a == d) * g[a] * sig[b, c]
                                + (b == d) * g[b] * sig[a, c] - (b == c) * g[b] * sig[a, d])
                    worst = max(worst, np.abs(lhs - rhs).max())
    out["so23_algebra"] = worst
    out["charge_conjugation"] = max(
        np.abs(-np.conj(sig[a, b]) - fam.C @ sig[a, b] @ fam.C).max()
        for a in range(5) for b in range(5))
    out["mAB_symmetric"] = max(np.abs(fam.mAB[a, b] - fam.mAB[a, b].T).max()
                               for a in range(5) for b in range(5))
    out["mA_antisymmetric"] = max(np.abs(fam.mA[a] + fam.mA[a].T).max() for a in range(5))
    out["k_equals_i_gamma1_gamma2"] = np.abs(k - 1j * gam[0] @ gam[1]).max()
    out["u22_completeness_m"] = _completeness_residual(fam.mA, fam.mAB, fam.E, sign=-4)
    out["su22_completeness_k"] = _completeness_residual(fam.kA, fam.kAB, k, sign=4)
    out["u22_completeness_gamma"] = _completeness_residual(
        fam.gamma, fam.sigma, np.eye(4), sign=4)
    worst_k = worst_m = 0.0
    for a in range(5):
        for b in range(5):
            for c in range(5):
                for d in range(5):
                    def rhs(t):
                        return 1j * ((a == c) * g[a] * t[b, d] - (a == d) * g[a] * t[b, c]
                                     + (b == d) * g[b] * t[a, c] - (b == c) * g[b] * t[a, d])
                    kk = fam.kAB
                    worst_k = max(worst_k, np.abs(
                        kk[a, b] @ k @ kk[c, d] - kk[c, d] @ k @ kk[a, b] - rhs(kk)).max())
                    mm = fam.mAB
                    worst_m = max(worst_m, np.abs(
                        mm[a, b] @ fam.E @ mm[c, d] - mm[c, d] @ fam.E @ mm[a, b] - rhs(mm)).max())
    out["kAB_sandwich_algebra"] = worst_k
    out["mAB_sandwich_algebra"] = worst_m
    return {key: float(v) for key, v in out.items()}


def _completeness_residual(vec, ten, metric, sign):
    # sum_a (v^a)(v_a) + 4 sum_{a<b} (t^ab)(t_ab) = sign*m_ad m_bc - m_ab m_cd
    g = METRIC5
    lhs = np.einsum("a,aij,akl->ijkl", g, vec, vec)
    for a, b in PAIRS:
        t = ten[a - 1, b - 1]
        lhs = lhs + 4 * g[a - 1] * g[b - 1] * np.einsum("ij,kl->ijkl", t, t)
    rhs = sign * np.einsum("il,jk->ijkl", metric, metric) - np.einsum("ij,kl->ijkl", metric, metric)
    return np.abs(lhs - rhs).max()


@lru_cache(maxsize=None)
def build_family():
    """Construct the so(2,3) matrix family and verify its identities.

    Returns
    -------
    So23MatrixFamily

    Raises
    ------
    AssertionError
        If any exact identity fails (a construction bug, not an input error).
    """
    q, qbar = quaternion_units("main")
    gamma = np.zeros((5, 4, 4), dtype=np.complex128)
    for m in range(4):
        gamma[m] = _block(Z2, qbar[m], q[m], Z2)
    gamma[4] = _block(I2, Z2, Z2, -I2)
    sigma = np.zeros((5, 5, 4, 4), dtype=np.complex128)
    for a in range(5):
        for b in range(5):
            sigma[a, b] = -0.25j * (gamma[a] @ gamma[b] - gamma[b] @ gamma[a])
    k = _block(SZ, Z2, Z2, SZ)
    C = _block(SX, Z2, Z2, SX)
    E = k @ C
    kA = np.einsum("ij,ajk->aik", k, gamma)
    kAB = np.einsum("ij,abjk->abik", k, sigma)
    mA = np.einsum("ij,ajk->aik", E, gamma)
    mAB = -np.einsum("ij,abjk->abik", E, sigma)
    for arr in (gamma, sigma, k, C, E, kA, kAB, mA, mAB):
        arr.setflags(write=False)
    fam = So23MatrixFamily(gamma, sigma, k, kA, kAB, C, E, mA, mAB)
    bad = {key: v for key, v in family_residuals(fam).items() if v > 1e-14}
    assert not bad, f"so(2,3) identities failed: {bad}"
    return fam


@dataclass(frozen=True)
class H22Params:
    """Coordinates ``(theta, rho, chi, phi)`` of the Bloch four-hyperboloid."""

    theta: float
    rho: float
    chi: float
    phi: float

    def __post_init__(self):
        vals = (self.theta, self.rho, self.chi, self.phi)
        if not all(np.isfinite(v) for v in vals):
            raise ValueError("H22Params entries must be finite")
        if self.rho < 0:
            raise ValueError(f"rho must be non-negative, got {self.rho}")
        for name in ("theta", "rho", "chi", "phi"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def y(self):
        """Unit vector ``y^m`` on the H^{2,1} latitude."""
        ch, sh = np.cosh(self.rho), np.sinh(self.rho)
        return np.array([np.cos(self.chi) * sh, np.sin(self.chi) * sh,
                         np.cos(self.phi) * ch, np.sin(self.phi) * ch])

    @property
    def x(self):
        """Five coordinates ``(sin(theta) y^m, cos(theta))``."""
        return np.concatenate([np.sin(self.theta) * self.y, [np.cos(self.theta)]])

    @property
    def xi(self):
        """``sinh(rho) e^{i(chi + pi/2)}``."""
        return np.sinh(self.rho) * np.exp(1j * (self.chi + np.pi / 2))

    @property
    def eta(self):
        """``cosh(rho) e^{i phi}``."""
        return np.cosh(self.rho) * np.exp(1j * self.phi)

    def replace(self, **kw):
        d = dict(theta=self.theta, rho=self.rho, chi=self.chi, phi=self.phi)
        d.update(kw)
        return H22Params(**d)


def split_norm(x):
    """``g_ab x^a x^b`` over however many leading metric entries x has."""
    x = np.asarray(x, dtype=float)
    return float(np.sum(METRIC5[:len(x)] * x * x))


@dataclass(frozen=True)
class H22Point:
    """Point on ``-x1^2 - x2^2 + x3^2 + x4^2 + x5^2 = 1``."""

    x: tuple

    def __post_init__(self):
        x = tuple(float(v) for v in self.x)
        if len(x) != 5:
            raise ValueError("H^{2,2} points have five coordinates")
        res = abs(split_norm(x) - 1.0)
        if res > 1e-8 * max(1.0, float(np.dot(x, x))):
            raise ConstraintError(f"point off H^{{2,2}} (residual {res:.3g})", res)
        object.__setattr__(self, "x", x)

    def as_array(self):
        return np.array(self.x)


def pseudo_unitarity_residual(m, k=None):
    """Largest of ``|m^dag k m - k|`` and ``|det m - 1|``."""
    k = build_family().k if k is None else k
    m = np.asarray(m, dtype=np.complex128)
    return float(max(np.abs(dagger(m) @ k @ m - k).max(), abs(np.linalg.det(m) - 1.0)))


@dataclass(frozen=True)
class Sp4SqueezeMatrix:
    """A squeeze matrix together with its kind and parameters."""

    m: np.ndarray
    kind: str
    params: H22Params

    def __post_init__(self):
        if self.kind not in ("dirac", "schwinger"):
            raise ValueError(f"kind must be 'dirac' or 'schwinger', got {self.kind!r}")
        res = pseudo_unitarity_residual(self.m)
        scale = max(1.0, np.abs(self.m).max() ** 2)
        if res > 1e-12 * scale:
            raise ConstraintError(f"squeeze matrix not pseudo-unitary (residual {res:.3g})", res)


def _broken_generator(p):
    fam = build_family()
    ylow = METRIC5[:4] * p.y
    return sum(ylow[m] * fam.sigma[m, 4] for m in range(4))


def sp4_dirac_squeeze(p):
    """Dirac-type squeeze matrix ``M = exp(i theta y_m sigma^{m5})``.

    Parameters
    ----------
    p : H22Params

    Returns
    -------
    Sp4SqueezeMatrix
    """
    return Sp4SqueezeMatrix(mat_exp(1j * p.theta * _broken_generator(p)), "dirac", p)


def dirac_closed_form(p):
    """Polar-coordinate closed form of the Dirac-type squeeze matrix."""
    c, s = np.cos(p.theta / 2), np.sin(p.theta / 2)
    ch, sh = np.cosh(p.rho), np.sinh(p.rho)
    ef, ec = np.exp(1j * p.phi), np.exp(1j * p.chi)
    return np.array([
        [c, 0, -1j * s * ch / ef, -s * sh / ec],
        [0, c, -s * sh * ec, 1j * s * ch * ef],
        [-1j * s * ch * ef, -s * sh / ec, c, 0],
        [-s * sh * ec, 1j * s * ch / ef, 0, c],
    ], dtype=np.complex128)


def chirality_blocks(m):
    """Split a squeeze matrix into its 4x2 column halves ``(Psi_L, Psi_R)``."""
    m = m.m if isinstance(m, Sp4SqueezeMatrix) else np.asarray(m)
    return m[:, :2], m[:, 2:]


def h_matrix(rho, chi, phi):
    """Block-diagonal fibre element ``e^{-i phi s34} e^{i chi s12} e^{-i rho s13}``."""
    fam = build_family()
    return (mat_exp(-1j * phi * fam.sig(3, 4)) @ mat_exp(1j * chi * fam.sig(1, 2))
            @ mat_exp(-1j * rho * fam.sig(1, 3)))


def h_closed_form(rho, chi, phi):
    """Polar closed form of ``h_matrix``."""
    ch, sh = np.cosh(rho / 2), np.sinh(rho / 2)

    def blk(angle):
        e = np.exp(-0.5j * angle)
        return np.array([[ch * e, 1j * sh * e], [-1j * sh / e, ch / e]])

    return _block(blk(chi + phi), Z2, Z2, blk(chi - phi))


def core_matrix(theta):
    """``e^{i theta sigma^{35}}``."""
    return mat_exp(1j * theta * build_family().sig(3, 5))


def core_closed_form(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return _block(c * I2, -1j * s * SZ, -1j * s * SZ, c * I2)


def sp4_schwinger_squeeze(p):
    """Schwinger-type squeeze matrix ``H e^{i theta sigma^{35}}``.

    Parameters
    ----------
    p : H22Params

    Returns
    -------
    Sp4SqueezeMatrix
    """
    m = h_matrix(p.rho, p.chi, p.phi) @ core_matrix(p.theta)
    return Sp4SqueezeMatrix(m, "schwinger", p)


def schwinger_closed_form(p):
    """Polar-coordinate closed form of the Schwinger-type squeeze matrix."""
    c, s = np.cos(p.theta / 2), np.sin(p.theta / 2)
    ch, sh = np.cosh(p.rho / 2), np.sinh(p.rho / 2)
    ep = np.exp(-0.5j * (p.chi + p.phi))
    em = np.exp(-0.5j * (p.chi - p.phi))
    return np.array([
        [c * ch * ep, 1j * c * sh * ep, -1j * s * ch * ep, -s * sh * ep],
        [-1j * c * sh / ep, c * ch / ep, -s * sh / ep, 1j * s * ch / ep],
        [-1j * s * ch * em, -s * sh * em, c * ch * em, 1j * c * sh * em],
        [-s * sh / em, 1j * s * ch / em, -1j * c * sh / em, c * ch / em],
    ], dtype=np.complex128)


def euler_decompose(p):
    """Euler factors of the Dirac-type squeeze matrix.

    Returns
    -------
    (numpy.ndarray, numpy.ndarray)
        ``H`` and ``e^{i theta sigma^{35}}`` with ``M = H core H^{-1}``.
    """
    return h_matrix(p.rho, p.chi, p.phi), core_matrix(p.theta)


def gauss_decompose_sp4(p, tol=1e-12):
    """Upper, diagonal and lower Gauss factors of the Dirac-type matrix.

    Parameters
    ----------
    p : H22Params
    tol : float
        Minimum allowed ``|cos(theta/2)|``.

    Returns
    -------
    (numpy.ndarray, numpy.ndarray, numpy.ndarray)

    Raises
    ------
    RangeError
        When ``cos(theta/2)`` vanishes (theta = pi).
    """
    c = np.cos(p.theta / 2)
    if abs(c) <= tol:
        raise RangeError("Gauss decomposition is singular at theta = pi")
    fam = build_family()
    t = np.tan(p.theta / 2)
    y = p.y
    up = sum(y[m] * (0.5 * fam.gam_lower(m + 1) - 1j * fam.sig_lower(m + 1, 5)) for m in range(4))
    lo = sum(y[m] * (0.5 * fam.gam_lower(m + 1) + 1j * fam.sig_lower(m + 1, 5)) for m in range(4))
    upper = mat_exp(-t * up)
    diag = mat_exp(-np.log(c) * fam.gam(5))
    lower = mat_exp(t * lo)
    return upper, diag, lower


def hopf2_coordinates(m):
    """``x^a = tr(k^5 m^dag k^a m) / 4`` without constraint checks."""
    fam = build_family()
    m = m.m if isinstance(m, Sp4SqueezeMatrix) else np.asarray(m, dtype=np.complex128)
    k5 = fam.kA[4]
    return np.array([0.25 * np.trace(k5 @ dagger(m) @ fam.kA[a] @ m).real for a in range(5)])


def hopf2_project(m, tol=1e-8):
    """Second non-compact Hopf map.

    Parameters
    ----------
    m : Sp4SqueezeMatrix or array_like
    tol : float
        Largest tolerated residual of the H^{2,2} constraint and of the
        pseudo-unitarity of ``m``.

    Returns
    -------
    H22Point

    Raises
    ------
    ConstraintError
        If ``m`` is not pseudo-unitary or the image misses H^{2,2}.
    """
    mat = m.m if isinstance(m, Sp4SqueezeMatrix) else np.asarray(m, dtype=np.complex128)
    pres = pseudo_unitarity_residual(mat)
    if pres > tol * max(1.0, np.abs(mat).max() ** 2):
        raise ConstraintError(f"matrix not pseudo-unitary (residual {pres:.3g})", pres)
    x = hopf2_coordinates(mat)
    res = abs(split_norm(x) - 1.0)
    if res > tol * max(1.0, float(np.dot(x, x))):
        raise ConstraintError(f"image off H^{{2,2}} (residual {res:.3g})", res)
    return H22Point(tuple(x))


def chiral_spinors(rho, chi, phi):
    """Parametrized chiral Hopf spinors ``(psi_L, psi_R)`` as 2-vectors."""
    base = np.array([np.cosh(rho / 2) * np.exp(-0.5j * chi),
                     -1j * np.sinh(rho / 2) * np.exp(0.5j * chi)])
    rot = np.exp(-0.5j * phi * np.array([1, -1]))
    return rot * base, -1j * np.conj(rot) * base


def chiral_hopf(psi_l, psi_r, tol=1e-10):
    """Chiral Hopf map ``y^m = (psi_L^dag sz qbar^m psi_R + psi_R^dag sz q^m psi_L) / 2``.

    Parameters
    ----------
    psi_l, psi_r : array_like
        Two-component spinors with ``psi^dag sz psi = 1``.

    Returns
    -------
    numpy.ndarray
        The four real ``y^m``.

    Raises
    ------
    ConstraintError
        If either spinor is not normalized.
    """
    psi_l = np.asarray(psi_l, dtype=np.complex128).reshape(2)
    psi_r = np.asarray(psi_r, dtype=np.complex128).reshape(2)
    for name, s in (("psi_L", psi_l), ("psi_R", psi_r)):
        res = abs(np.vdot(s, SZ @ s) - 1.0)
        if res > tol:
            raise ConstraintError(f"{name} not normalized (residual {res:.3g})", res)
    q, qbar = quaternion_units("main")
    y = [0.5 * (np.vdot(psi_l, SZ @ qbar[m] @ psi_r) + np.vdot(psi_r, SZ @ q[m] @ psi_l))
         for m in range(4)]
    return np.real_if_close(np.array(y), tol=1e6).real


def h_fibre(rho, chi, phi):
    """Fibre factor ``e^{i rho s13} e^{-i chi s12} e^{i phi s34}`` used by ``h43_element``."""
    fam = build_family()
    return (mat_exp(1j * rho * fam.sig(1, 3)) @ mat_exp(-1j * chi * fam.sig(1, 2))
            @ mat_exp(1j * phi * fam.sig(3, 4)))


def h43_element(rho, chi, phi, theta, sigma, omega, psi, core="35"):
    """SO(2,3) element over H^{4,3}: ``H(rho,chi,phi)^{-1} U1(theta) H(sigma,omega,psi)``.

    Parameters
    ----------
    rho, chi, phi, theta, sigma, omega, psi : float
    core : {"35", "34"}
        Generator of the middle factor ``U1 = e^{i theta sigma^{core}}``.
        Only ``"35"`` reproduces the squeeze matrices; ``"34"`` is kept to
        document the alternative.

    Returns
    -------
    numpy.ndarray
    """
    fam = build_family()
    if core not in ("35", "34"):
        raise ValueError(f"core must be '35' or '34', got {core!r}")
    gen = fam.sig(3, 5) if core == "35" else fam.sig(3, 4)
    left = np.linalg.inv(h_fibre(rho, chi, phi))
    return left @ mat_exp(1j * theta * gen) @ h_fibre(sigma, omega, psi)


def hopf_spinor_matrix(p):
    """4x4 matrix ``[psi, C psi^*, gamma^4 psi', C (gamma^4 psi')^*]``.

    ``psi`` is the second Hopf spinor (first column of the Dirac-type
    squeeze matrix) and ``psi'`` is the same spinor at ``-phi``.

    Parameters
    ----------
    p : H22Params

    Returns
    -------
    numpy.ndarray
    """
    fam = build_family()
    psi = dirac_closed_form(p)[:, 0]
    psi_p = dirac_closed_form(p.replace(phi=-p.phi))[:, 0]
    psi_r = fam.gam(4) @ psi_p
    return np.column_stack([psi, fam.C @ np.conj(psi), psi_r, fam.C @ np.conj(psi_r)])


@lru_cache(maxsize=None)
def _w_omega():
    w = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128)
    r = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    omega = _block(r, -1j * r, r, 1j * r) / np.sqrt(2)
    return w, omega


def symplectic_form(n):
    """``J = [[0, 1_n], [-1_n, 0]]``."""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def sp4_real_form():
    """Real-form generators ``t^{ab} = (W Omega)^dag sigma^{ab} (W Omega)``.

    Returns
    -------
    dict
        Maps one-based ``(a, b)`` with ``a < b`` to a 4x4 matrix, plus the
        key ``"W_Omega"`` for the transformation itself.
    """
    fam = build_family()
    w, omega = _w_omega()
    wo = w @ omega
    out = {(a, b): dagger(wo) @ fam.sig(a, b) @ wo for a, b in PAIRS}
    out["W_Omega"] = wo
    return out


@dataclass
class SymplecticReport:
    """Residuals of the symplectic and Bogoliubov checks."""

    n: int
    samples: int
    residuals: dict
    dimensions: dict

    @property
    def max_residual(self):
        return max(self.residuals.values()) if self.residuals else 0.0


def _omega_n(n):
    r = np.fliplr(np.eye(n))
    return _block(r, -1j * r, r, 1j * r) / np.sqrt(2)


def _real_constraint_dim(n, kind):
    # dimension of {X : reality condition and boson/fermion condition}
    size = 2 * n
    eye = np.eye(n)
    zero = np.zeros((n, n))
    K = np.block([[eye, zero], [zero, -eye]])
    S = np.block([[zero, eye], [eye, zero]])
    rows = []
    for idx in range(2 * size * size):
        v = np.zeros(2 * size * size)
        v[idx] = 1.0
        X = (v[:size * size] + 1j * v[size * size:]).reshape(size, size)
        if kind == "boson":
            c1 = dagger(X) @ K - K @ X
        else:
            c1 = dagger(X) - X
        c2 = S @ np.conj(X) @ S + X
        rows.append(np.concatenate([c1.real.ravel(), c1.imag.ravel(), c2.real.ravel(), c2.imag.ravel()]))
    mat = np.array(rows).T
    rank = np.linalg.matrix_rank(mat)
    return 2 * size * size - rank


def _param_rank(n, kind):
    # rank of the linear parametrization of X' by (H, S) or (H, A)
    cols = []
    basis_h = []
    for i in range(n):
        for j in range(i, n):
            e = np.zeros((n, n), dtype=np.complex128)
            e[i, j] = e[j, i] = 1
            basis_h.append(e)
            if i != j:
                f = np.zeros((n, n), dtype=np.complex128)
                f[i, j], f[j, i] = 1j, -1j
                basis_h.append(f)
    basis_s = []
    for i in range(n):
        for j in range(i if kind == "boson" else i + 1, n):
            for ph in (1, 1j):
                e = np.zeros((n, n), dtype=np.complex128)
                e[i, j] += ph
                e[j, i] += ph if kind == "boson" else -ph
                basis_s.append(e)
    zero = np.zeros((n, n))
    for h in basis_h:
        X = _block(h, zero, zero, -np.conj(h))
        cols.append(np.concatenate([X.real.ravel(), X.imag.ravel()]))
    for s in basis_s:
        X = _block(zero, np.conj(s), -s, zero)
        cols.append(np.concatenate([X.real.ravel(), X.imag.ravel()]))
    return len(cols), int(np.linalg.matrix_rank(np.array(cols).T))


def symplectic_checks(n, samples, seed=None):
    """Verify Sp(2n;R) and SO(2n) structure on random generators.

    For bosons ``X' = [[H, S^*], [-S, -H^*]]`` with Hermitian H and
    symmetric S; for fermions the same layout with antisymmetric A.  Each
    ``g' = exp(i X')`` is checked against its group condition and the
    Bogoliubov block conditions, and the boson element is mapped back to
    a real symplectic matrix.

    Parameters
    ----------
    n : int
        Number of modes, 1 to 3.
    samples : int
        Number of random generators of each kind.
    seed : int, optional

    Returns
    -------
    SymplecticReport

    Raises
    ------
    RangeError
        If ``n`` is outside 1..3.
    """
    if n not in (1, 2, 3):
        raise RangeError(f"symplectic_checks supports n in 1..3, got {n}")
    rng = np.random.default_rng(resolve_seed(seed))
    eye = np.eye(n)
    zero = np.zeros((n, n))
    K = np.block([[eye, zero], [zero, -eye]])
    J = symplectic_form(n)
    omega = _omega_n(n)
    res = dict.fromkeys([
        "boson_group", "boson_blocks_structure", "boson_UdagU_minus_VdagV",
        "boson_UtV_minus_VtU", "boson_UtUconj_minus_VtVconj", "boson_real_symplectic",
        "omega_J_diagonalizes", "fermion_unitary", "fermion_UdagU_plus_VdagV",
        "fermion_UtV_plus_VtU", "fermion_UtUconj_plus_VtVconj",
    ], 0.0)
    res["omega_J_diagonalizes"] = float(np.abs(omega @ J @ dagger(omega) - 1j * K).max())

    def upd(key, val):
        res[key] = max(res[key], float(val))

    for _ in range(samples):
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = 0.5 * (a + dagger(a))
        b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        s = 0.5 * (b + b.T)
        xb = _block(h, np.conj(s), -s, -np.conj(h))
        g = mat_exp(1j * xb)
        u, v = g[:n, :n], g[n:, :n]
        upd("boson_group", np.abs(dagger(g) @ K @ g - K).max())
        upd("boson_blocks_structure", max(np.abs(g[:n, n:] - np.conj(v)).max(),
                                          np.abs(g[n:, n:] - np.conj(u)).max()))
        upd("boson_UdagU_minus_VdagV", np.abs(dagger(u) @ u - dagger(v) @ v - eye).max())
        upd("boson_UtV_minus_VtU", np.abs(u.T @ v - v.T @ u).max())
        upd("boson_UtUconj_minus_VtVconj", np.abs(u.T @ np.conj(u) - v.T @ np.conj(v) - eye).max())
        greal = dagger(omega) @ g @ omega
        upd("boson_real_symplectic", max(np.abs(greal.imag).max(),
                                         np.abs(greal.real.T @ J @ greal.real - J).max()))

        c = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        af = 0.5 * (c - c.T)
        xf = _block(h, np.conj(af), -af, -np.conj(h))
        gf = mat_exp(1j * xf)
        uf, vf = gf[:n, :n], gf[n:, :n]
        upd("fermion_unitary", np.abs(dagger(gf) @ gf - np.eye(2 * n)).max())
        upd("fermion_UdagU_plus_VdagV", np.abs(dagger(uf) @ uf + dagger(vf) @ vf - eye).max())
        upd("fermion_UtV_plus_VtU", np.abs(uf.T @ vf + vf.T @ uf).max())
        upd("fermion_UtUconj_plus_VtVconj",
            np.abs(uf.T @ np.conj(uf) + vf.T @ np.conj(vf) - eye).max())

    nb, rb = _param_rank(n, "boson")
    nf, rf = _param_rank(n, "fermion")
    dims = {
        "boson_params": nb,
        "boson_param_rank": rb,
        "boson_algebra_dim": int(_real_constraint_dim(n, "boson")),
        "boson_expected": n * (2 * n + 1),
        "fermion_params": nf,
        "fermion_param_rank": rf,
        "fermion_algebra_dim": int(_real_constraint_dim(n, "fermion")),
        "fermion_expected": n * (2 * n - 1),
    }
    return SymplecticReport(n, samples, res, dims)
