"""Truncated multimode bosonic Fock engine.

Basis states ``|n_1, ..., n_k>`` with ``0 <= n_i <= N`` are ordered
row-major, the first mode being the most significant digit.  Operators
are stored as ``scipy.sparse`` CSR matrices built exactly on the
truncated space (hard wall at N); identities that would need states
beyond the wall are only asserted on the interior, i.e. on basis states
at least ``INTERIOR_MARGIN`` quanta below the cutoff in every mode.

Unitaries are kept as ``FactoredOperator`` products of sparse factors
so that a four-mode squeeze is never formed as a dense 4096 x 4096
product.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.sparse as sp
from scipy.special import gammaln

from . import so23
from .errors import ConstraintError, DimensionError, ResourceError, UnsupportedError
from .matcore import block_exp
from .sp2r import Sp2SqueezeParams

DIMENSION_CEILING = 20000
INTERIOR_MARGIN = 4
DEFAULT_CUTOFF = {1: 40, 2: 40, 4: 7}


@dataclass(frozen=True)
class FockSpace:
    """Tensor product of ``modes`` truncated oscillators with cutoff ``N``."""

    modes: int
    cutoff: int
    ceiling: int = DIMENSION_CEILING

    def __post_init__(self):
        if self.modes not in (1, 2, 3, 4):
            raise DimensionError(f"modes must be 1, 2, 3 or 4, got {self.modes}")
        if int(self.cutoff) != self.cutoff or self.cutoff < 2:
            raise ValueError(f"cutoff must be an integer >= 2, got {self.cutoff}")
        if self.dimension > self.ceiling:
            raise ResourceError(
                f"dimension {self.dimension} exceeds the ceiling {self.ceiling}")

    @property
    def dimension(self):
        return (self.cutoff + 1) ** self.modes

    @property
    def shape(self):
        return (self.cutoff + 1,) * self.modes

    def index(self, ns):
        """Flat index of the basis state ``|ns>``."""
        if len(ns) != self.modes or any(not 0 <= n <= self.cutoff for n in ns):
            raise IndexError(f"occupation {tuple(ns)} outside the truncated space")
        return int(np.ravel_multi_index(tuple(ns), self.shape))

    def occupations(self):
        """``(dimension, modes)`` integer array of occupation numbers."""
        return _occupations(self.modes, self.cutoff)

    def interior(self, margin=INTERIOR_MARGIN):
        """Flat indices of states at least ``margin`` quanta below the cutoff in every mode."""
        occ = self.occupations()
        return np.nonzero((occ <= self.cutoff - margin).all(axis=1))[0]

    def low(self, total):
        """Flat indices of states with at most ``total`` quanta in all."""
        return np.nonzero(self.occupations().sum(axis=1) <= total)[0]

    def basis(self, ns):
        """The number state ``|ns>`` as a ``FockState``."""
        amps = np.zeros(self.dimension, dtype=np.complex128)
        amps[self.index(ns)] = 1.0
        return FockState(self, amps)

    def vacuum(self):
        return self.basis((0,) * self.modes)


@lru_cache(maxsize=None)
def _occupations(modes, cutoff):
    occ = np.array(np.unravel_index(np.arange((cutoff + 1) ** modes), (cutoff + 1,) * modes)).T
    occ.setflags(write=False)
    return occ


@dataclass
class FockState:
    """Amplitude vector on a ``FockSpace``.

    The norm is reported, not forced: truncation can lose tail mass.
    ``tail`` carries a bound on the probability lost beyond the cutoff
    when the state came from a closed form.
    """

    space: FockSpace
    amps: np.ndarray
    tail: float = 0.0
    label: str = ""

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=np.complex128).reshape(-1)
        if self.amps.shape[0] != self.space.dimension:
            raise DimensionError(
                f"{self.amps.shape[0]} amplitudes for a space of dimension {self.space.dimension}")
        if not np.all(np.isfinite(self.amps)):
            raise ValueError("state has non-finite amplitudes")

    def norm(self):
        return float(np.linalg.norm(self.amps))

    def amplitude(self, ns):
        return complex(self.amps[self.space.index(ns)])

    def expect(self, op):
        """``<s|op|s> / <s|s>``."""
        return complex(np.vdot(self.amps, op @ self.amps) / np.vdot(self.amps, self.amps))

    def nonzero(self, threshold=0.0):
        """Rows ``(occupations, amplitude)`` with ``|amp| > threshold``."""
        idx = np.nonzero(np.abs(self.amps) > threshold)[0]
        occ = self.space.occupations()
        return [(tuple(int(v) for v in occ[i]), complex(self.amps[i])) for i in idx]


def fidelity(a, b):
    """Phase-insensitive overlap ``|<a|b>|^2 / (<a|a><b|b>)``."""
    va = a.amps if isinstance(a, FockState) else np.asarray(a)
    vb = b.amps if isinstance(b, FockState) else np.asarray(b)
    num = abs(np.vdot(va, vb)) ** 2
    return float(num / (np.vdot(va, va).real * np.vdot(vb, vb).real))


class FactoredOperator:
    """Ordered product ``F_1 F_2 ... F_k`` of sparse factors.

    ``apply`` multiplies right to left, so the rightmost factor acts
    first, as in the written operator product.
    """

    def __init__(self, factors, dimension=None):
        self.factors = [sp.csr_matrix(f) for f in factors]
        if dimension is None:
            if not self.factors:
                raise ValueError("an empty product needs an explicit dimension")
            dimension = self.factors[0].shape[0]
        self.dimension = dimension

    def apply(self, v):
        out = v.amps if isinstance(v, FockState) else np.asarray(v, dtype=np.complex128)
        for f in reversed(self.factors):
            out = f @ out
        return out

    def __matmul__(self, other):
        if isinstance(other, FactoredOperator):
            return FactoredOperator(self.factors + other.factors, self.dimension)
        if isinstance(other, FockState):
            return FockState(other.space, self.apply(other.amps))
        return self.apply(other)

    def adjoint(self):
        return FactoredOperator([f.conj().T for f in reversed(self.factors)], self.dimension)

    def tosparse(self):
        out = sp.identity(self.dimension, dtype=np.complex128, format="csr")
        for f in self.factors:
            out = out @ f
        return out.tocsr()

    def toarray(self):
        return self.tosparse().toarray()


def ladder(space, mode):
    """Annihilation operator of one mode on the full tensor space.

    Parameters
    ----------
    space : FockSpace
    mode : int
        Zero-based mode index.

    Returns
    -------
    scipy.sparse.csr_matrix
    """
    if not 0 <= mode < space.modes:
        raise IndexError(f"mode {mode} out of range for {space.modes} modes")
    return _ladder(space.modes, space.cutoff, mode)


@lru_cache(maxsize=None)
def _ladder(modes, cutoff, mode):
    a1 = _ladder1(cutoff)
    left = sp.identity((cutoff + 1) ** mode, format="csr")
    right = sp.identity((cutoff + 1) ** (modes - mode - 1), format="csr")
    return sp.kron(sp.kron(left, a1), right, format="csr").astype(np.complex128)


def _ladder1(cutoff):
    return sp.diags(np.sqrt(np.arange(1, cutoff + 1)), 1, format="csr", dtype=np.complex128)


def number(space, mode):
    a = ladder(space, mode)
    return (a.conj().T @ a).tocsr()


def _identity(space):
    return sp.identity(space.dimension, dtype=np.complex128, format="csr")


def _dag(op):
    return op.conj().T.tocsr()


def _clean(op):
    op = sp.csr_matrix(op)
    op.eliminate_zeros()
    return op


@dataclass
class OperatorSet:
    """Named generator operators of one realization.

    ``ops`` maps labels to sparse matrices: ``Tx, Ty, Tz, T+, T-`` for
    su(1,1), ``X12 .. X45`` (and ``X1 .. X5`` for the Dirac realization)
    for sp(4;R).  ``psi`` holds the spinor operator components and
    ``matrices`` the 4x4 matrices the generators represent.
    """

    space: FockSpace
    realization: str
    ops: dict
    psi: tuple = ()
    matrices: dict = field(default_factory=dict)
    hermitian: tuple = ()

    def __post_init__(self):
        for label in self.hermitian:
            op = self.ops[label]
            res = abs(op - op.conj().T).max() if op.nnz else 0.0
            if res > 1e-13:
                raise ConstraintError(f"{label} is not Hermitian (residual {res:.3g})", res)

    def __getitem__(self, label):
        return self.ops[label]

    def x(self, a, b=None):
        """``X^a`` or ``X^{ab}`` with one-based, antisymmetric indices."""
        if b is None:
            return self.ops[f"X{a}"]
        if a == b:
            return sp.csr_matrix((self.space.dimension,) * 2, dtype=np.complex128)
        if a < b:
            return self.ops[f"X{a}{b}"]
        return -self.ops[f"X{b}{a}"]


def su11_ops(space, realization="oneMode"):
    """su(1,1) generators from one or two boson modes.

    Parameters
    ----------
    space : FockSpace
        One mode for ``oneMode``, two for ``twoMode``.
    realization : {"oneMode", "twoMode"}

    Returns
    -------
    OperatorSet
        ``T+ = Ty - i Tx`` and ``T- = Ty + i Tx`` are included.
    """
    want = {"oneMode": 1, "twoMode": 2}
    if realization not in want:
        raise ValueError(f"realization must be one of {sorted(want)}, got {realization!r}")
    if space.modes != want[realization]:
        raise DimensionError(f"{realization} needs {want[realization]} modes, got {space.modes}")
    return _su11_ops(space, realization)


@lru_cache(maxsize=8)
def _su11_ops(space, realization):
    ident = _identity(space)
    if realization == "oneMode":
        a = ladder(space, 0)
        ad = _dag(a)
        tp, tm = 0.5 * ad @ ad, 0.5 * a @ a
        tz = 0.5 * ad @ a + 0.25 * ident
    else:
        a, b = ladder(space, 0), ladder(space, 1)
        ad, bd = _dag(a), _dag(b)
        tp, tm = ad @ bd, a @ b
        tz = 0.5 * (ad @ a + bd @ b) + 0.5 * ident
    ops = {
        "Tx": _clean(0.5j * (tp - tm)),
        "Ty": _clean(0.5 * (tp + tm)),
        "Tz": _clean(tz),
        "T+": _clean(tp),
        "T-": _clean(tm),
    }
    return OperatorSet(space, realization, ops, hermitian=("Tx", "Ty", "Tz"))


def sp4_ops(space, realization="majorana"):
    """sp(4;R) generators in the Majorana (two-mode) or Dirac (four-mode) realization.

    Majorana: ``psi = (a, a^dag, b, b^dag)`` and ``X^{ab} = psi^t m^{ab} psi / 2``.
    Dirac: ``psi = (a, b^dag, c, d^dag)``, ``X^a = psi^dag k^a psi`` and
    ``X^{ab} = psi^dag k^{ab} psi`` with the operator products kept in
    their literal order.

    Parameters
    ----------
    space : FockSpace
    realization : {"majorana", "dirac"}

    Returns
    -------
    OperatorSet
    """
    want = {"majorana": 2, "dirac": 4}
    if realization not in want:
        raise ValueError(f"realization must be one of {sorted(want)}, got {realization!r}")
    if space.modes != want[realization]:
        raise DimensionError(f"{realization} needs {want[realization]} modes, got {space.modes}")
    return _sp4_ops(space, realization)


def _bilinear(left, mat, right, scale=1.0):
    out = None
    for i in range(4):
        for j in range(4):
            c = mat[i, j]
            if abs(c) < 1e-15:
                continue
            term = (scale * c) * (left[i] @ right[j])
            out = term if out is None else out + term
    return _clean(out)


@lru_cache(maxsize=4)
def _sp4_ops(space, realization):
    fam = so23.build_family()
    ops, matrices = {}, {}
    if realization == "majorana":
        a, b = ladder(space, 0), ladder(space, 1)
        psi = (a, _dag(a), b, _dag(b))
        for p, q in so23.PAIRS:
            ops[f"X{p}{q}"] = _bilinear(psi, fam.mAB[p - 1, q - 1], psi, 0.5)
            matrices[f"X{p}{q}"] = fam.sig(p, q)
    else:
        a, b, c, d = (ladder(space, m) for m in range(4))
        psi = (a, _dag(b), c, _dag(d))
        psid = tuple(_dag(o) for o in psi)
        for p in range(1, 6):
            ops[f"X{p}"] = _bilinear(psid, fam.kA[p - 1], psi)
            matrices[f"X{p}"] = fam.gam(p)
        for p, q in so23.PAIRS:
            ops[f"X{p}{q}"] = _bilinear(psid, fam.kAB[p - 1, q - 1], psi)
            matrices[f"X{p}{q}"] = fam.sig(p, q)
        ops["psibar_psi"] = _bilinear(psid, fam.k, psi)
    herm = tuple(ops)
    return OperatorSet(space, realization, ops, psi, matrices, herm)


def majorana_vector_ops(space):
    """Operators ``psi^t m^a psi / 2`` for the Majorana spinor; all vanish identically."""
    fam = so23.build_family()
    ops = sp4_ops(space, "majorana")
    return [_bilinear(ops.psi, fam.mA[p], ops.psi, 0.5) for p in range(5)]


def _max_abs(op):
    op = sp.csr_matrix(op)
    return float(abs(op).max()) if op.nnz else 0.0


def _cols(op, cols):
    return sp.csr_matrix(op)[:, cols]


def algebra_residual(ops, margin=INTERIOR_MARGIN):
    """Largest violation of the structure relations on interior columns.

    For sp(4;R) the structure constants are read off from the 4x4
    matrices the generators represent: ``[X_A, X_B]`` must equal the
    operator of ``[A, B]`` expanded in the same basis.  For su(1,1)
    the relations ``[T^i, T^j] = -i eps^{ijk} g_kk T^k`` are used.

    Returns
    -------
    float
    """
    cols = ops.space.interior(margin)
    worst = 0.0
    if ops.realization in ("oneMode", "twoMode"):
        tx, ty, tz = ops["Tx"], ops["Ty"], ops["Tz"]
        rel = [
            (tx @ ty - ty @ tx, -1j * tz),
            (ty @ tz - tz @ ty, 1j * tx),
            (tz @ tx - tx @ tz, 1j * ty),
        ]
        for lhs, rhs in rel:
            worst = max(worst, _max_abs(_cols(lhs - rhs, cols)))
        return worst
    labels = list(ops.matrices)
    basis = np.array([ops.matrices[k].ravel() for k in labels]).T
    for i, la in enumerate(labels):
        for lb in labels[i + 1:]:
            ma, mb = ops.matrices[la], ops.matrices[lb]
            comm = (ma @ mb - mb @ ma).ravel()
            coef = np.linalg.lstsq(basis, comm, rcond=None)[0]
            rhs = None
            for cval, lab in zip(coef, labels):
                if abs(cval) > 1e-12:
                    term = cval * ops[lab]
                    rhs = term if rhs is None else rhs + term
            oa, ob = ops[la], ops[lb]
            lhs = oa @ ob - ob @ oa
            diff = lhs if rhs is None else lhs - rhs
            worst = max(worst, _max_abs(_cols(diff, cols)))
    return worst


def casimir(ops):
    """Quadratic Casimir operator of an ``OperatorSet``.

    su(1,1): ``-Tx^2 - Ty^2 + Tz^2``.  sp(4;R): ``sum_{a<b} X^{ab} X_{ab}``.
    """
    if ops.realization in ("oneMode", "twoMode"):
        tx, ty, tz = ops["Tx"], ops["Ty"], ops["Tz"]
        return _clean(-tx @ tx - ty @ ty + tz @ tz)
    g = so23.METRIC5
    out = None
    for p, q in so23.PAIRS:
        x = ops.x(p, q)
        term = (g[p - 1] * g[q - 1]) * (x @ x)
        out = term if out is None else out + term
    return _clean(out)


def vector_casimir(ops):
    """``sum_a X^a X_a`` for the Dirac realization."""
    if ops.realization != "dirac":
        raise UnsupportedError("X^a operators exist only in the Dirac realization")
    g = so23.METRIC5
    return _clean(sum(g[p - 1] * (ops.x(p) @ ops.x(p)) for p in range(1, 6)))


def casimir_report(ops, margin=INTERIOR_MARGIN):
    """Interior diagonal values and off-diagonal size of the Casimir.

    Returns
    -------
    dict
        ``diag`` (interior diagonal as an array) and ``offdiag`` (largest
        interior-column off-diagonal entry).
    """
    cas = casimir(ops)
    cols = ops.space.interior(margin)
    sub = _cols(cas, cols).tolil()
    diag = cas.diagonal()[cols]
    for k, c in enumerate(cols):
        sub[c, k] = 0.0
    return {"diag": diag, "offdiag": _max_abs(sub)}


def dirac_casimir_residuals(ops, margin=INTERIOR_MARGIN):
    """Compare the Dirac-realization Casimirs with polynomials in ``psibar psi``.

    Returns
    -------
    dict
        Interior-column residuals of ``sum X^a X_a`` against
        ``(pp + 2)(pp - 2)`` and ``pp (pp + 4)``, of ``sum X^{ab} X_{ab}``
        against ``pp (pp + 6) / 2 + 1`` and ``pp (pp + 4) / 2``, and of the
        su(2,2) combination ``C1 + 4 C2`` against ``3 pp (pp + 4)``, where
        ``pp = psibar psi``.
    """
    pp = ops["psibar_psi"]
    ident = _identity(ops.space)
    c1, c2 = vector_casimir(ops), casimir(ops)
    cols = ops.space.interior(margin)

    def r(lhs, rhs):
        return _max_abs(_cols(lhs - rhs, cols))

    return {
        "vector_vs_(pp+2)(pp-2)": r(c1, (pp + 2 * ident) @ (pp - 2 * ident)),
        "vector_vs_pp(pp+4)": r(c1, pp @ (pp + 4 * ident)),
        "tensor_vs_pp(pp+6)/2+1": r(c2, 0.5 * pp @ (pp + 6 * ident) + ident),
        "tensor_vs_pp(pp+4)/2": r(c2, 0.5 * pp @ (pp + 4 * ident)),
        "su22_C1+4C2_vs_3pp(pp+4)": r(c1 + 4 * c2, 3 * pp @ (pp + 4 * ident)),
    }


def metaplectic_casimir(space, n=None, margin=INTERIOR_MARGIN):
    """Metaplectic Casimir ``X^{ij} X_{ij} + X_{ij} X^{ij} - 2 X^i_j X^j_i``.

    Built from ``X^i_j = a_i^dag a_j + delta_ij / 2``, ``X^{ij} = a_i^dag a_j^dag``
    and ``X_{ij} = a_i a_j`` summed over all ordered ``i, j``.

    Parameters
    ----------
    space : FockSpace
    n : int, optional
        Number of modes; must equal ``space.modes`` and be 1 or 2.

    Returns
    -------
    dict
        ``diag`` on interior states and ``offdiag`` residual.
    """
    n = space.modes if n is None else n
    if n not in (1, 2) or n != space.modes:
        raise UnsupportedError(f"metaplectic Casimir supports n in (1, 2) matching the space, got {n}")
    ident = _identity(space)
    a = [ladder(space, i) for i in range(n)]
    ad = [_dag(x) for x in a]
    cas = None
    for i in range(n):
        for j in range(n):
            up = ad[i] @ ad[j]
            down = a[i] @ a[j]
            mix_ij = ad[i] @ a[j] + (0.5 if i == j else 0.0) * ident
            mix_ji = ad[j] @ a[i] + (0.5 if i == j else 0.0) * ident
            term = up @ down + down @ up - 2 * mix_ij @ mix_ji
            cas = term if cas is None else cas + term
    cas = _clean(cas)
    cols = space.interior(margin)
    sub = _cols(cas, cols).tolil()
    diag = cas.diagonal()[cols]
    for k, c in enumerate(cols):
        sub[c, k] = 0.0
    return {"diag": diag, "offdiag": _max_abs(sub), "expected": n * (n + 0.5)}


def quadratures(space, scheme="twoMode"):
    """Four quadrature operators ``X^1 .. X^4``.

    ``twoMode``: ``X^1 = (a + a^dag)/2``, ``X^2 = -i (a - a^dag)/2`` and
    the same with ``b`` for ``X^3, X^4``.  ``fourMode``: the symmetric
    combinations of ``(a, b)`` and ``(c, d)`` scaled by ``1/(2 sqrt 2)``.

    Returns
    -------
    tuple of scipy.sparse.csr_matrix
    """
    want = {"twoMode": 2, "fourMode": 4}
    if scheme not in want:
        raise ValueError(f"scheme must be one of {sorted(want)}, got {scheme!r}")
    if space.modes != want[scheme]:
        raise DimensionError(f"{scheme} needs {want[scheme]} modes, got {space.modes}")
    return _quadratures(space, scheme)


@lru_cache(maxsize=8)
def _quadratures(space, scheme):
    if scheme == "twoMode":
        lo = [ladder(space, 0), ladder(space, 1)]
        s = 0.5
    else:
        lo = [ladder(space, 0) + ladder(space, 1), ladder(space, 2) + ladder(space, 3)]
        s = 0.5 / np.sqrt(2.0)
    out = []
    for x in lo:
        out.append(_clean(s * (x + _dag(x))))
        out.append(_clean(-1j * s * (x - _dag(x))))
    return tuple(out)


def _sp4_matrix(p, type):
    if type == "dirac":
        return so23.dirac_closed_form(p)
    if type == "schwinger":
        return so23.schwinger_closed_form(p)
    raise ValueError(f"type must be 'dirac' or 'schwinger', got {type!r}")


def squeeze_unitary(ops, p, type="dirac", route=None):
    """Squeeze operator as a product of exponentials.

    Parameters
    ----------
    ops : OperatorSet
        su(1,1) or sp(4;R) realization.
    p : Sp2SqueezeParams or H22Params
        Must match the algebra of ``ops``.
    type : {"dirac", "schwinger"}
    route : {"exp", "euler"}, optional
        Dirac type only.  ``exp`` exponentiates the single generator,
        ``euler`` uses the fibre-conjugated core.  Defaults to ``exp`` for
        su(1,1) and ``euler`` for sp(4;R).

    Returns
    -------
    FactoredOperator
        For sp(4;R) it satisfies ``S^dag psi S = M psi`` with ``M`` the
        matching 4x4 squeeze matrix.
    """
    if type not in ("dirac", "schwinger"):
        raise ValueError(f"type must be 'dirac' or 'schwinger', got {type!r}")
    dim = ops.space.dimension
    if ops.realization in ("oneMode", "twoMode"):
        if not isinstance(p, Sp2SqueezeParams):
            raise TypeError("su(1,1) squeeze operators take Sp2SqueezeParams")
        rot = sp.diags(np.exp(1j * p.phi * ops["Tz"].diagonal()), format="csr")
        boost = block_exp(1j * p.rho * ops["Tx"])
        if type == "schwinger":
            return FactoredOperator([rot, boost], dim)
        if (route or "exp") == "exp":
            gen = -p.xi * ops["T+"] + np.conj(p.xi) * ops["T-"]
            return FactoredOperator([block_exp(gen)], dim)
        return FactoredOperator([rot, boost, rot.conj()], dim)
    if not isinstance(p, so23.H22Params):
        raise TypeError("sp(4;R) squeeze operators take H22Params")

    def ex(coef, label):
        return block_exp(1j * coef * ops[label])

    if type == "schwinger":
        return FactoredOperator([ex(-p.phi, "X34"), ex(p.chi, "X12"), ex(-p.rho, "X13"),
                                 ex(p.theta, "X35")], dim)
    route = route or "euler"
    if route == "exp":
        ylow = so23.METRIC5[:4] * p.y
        gen = sum(ylow[m] * ops.x(m + 1, 5) for m in range(4))
        return FactoredOperator([block_exp(1j * p.theta * gen)], dim)
    if route != "euler":
        raise ValueError(f"route must be 'exp' or 'euler', got {route!r}")
    return FactoredOperator([
        ex(-p.phi, "X34"), ex(p.chi, "X12"), ex(-p.rho, "X13"), ex(p.theta, "X35"),
        ex(p.rho, "X13"), ex(-p.chi, "X12"), ex(p.phi, "X34"),
    ], dim)


def unitarity_residual(u, space, margin=INTERIOR_MARGIN):
    """``max |U^dag U - 1|`` restricted to interior columns."""
    m = u.tosparse() if isinstance(u, FactoredOperator) else sp.csr_matrix(u)
    diff = m.conj().T @ m - sp.identity(space.dimension, format="csr")
    return _max_abs(_cols(diff, space.interior(margin)))


def _one_mode_amps(cutoff, rho, angle, n):
    # S(xi)|n> for n in {0, 1}, xi = (rho/2) e^{i angle}
    if n not in (0, 1):
        raise UnsupportedError("one-mode closed forms exist for n = 0 and n = 1 only")
    amps = np.zeros(cutoff + 1, dtype=np.complex128)
    ch = np.cosh(rho / 2)
    t = np.tanh(rho / 2)
    kmax = (cutoff - n) // 2
    k = np.arange(kmax + 1)
    if t == 0.0:
        amps[n] = 1.0
        return amps
    logmag = 0.5 * gammaln(2 * k + n + 1) - gammaln(k + 1) + k * np.log(t / 2)
    phase = (-np.exp(1j * angle)) ** k
    amps[2 * k + n] = phase * np.exp(logmag) / ch ** (n + 0.5)
    return amps


def _two_mode_amps(cutoff, rho, angle, ns):
    # two-mode S(xi)|n,0> or |0,n>
    na, nb = ns
    if na and nb:
        raise UnsupportedError("two-mode closed forms exist for (n, 0) and (0, n) only")
    n = na + nb
    out = np.zeros((cutoff + 1, cutoff + 1), dtype=np.complex128)
    ch = np.cosh(rho / 2)
    t = np.tanh(rho / 2)
    m = np.arange(cutoff - n + 1)
    if t == 0.0:
        out[na, nb] = 1.0
        return out
    logmag = 0.5 * (gammaln(n + m + 1) - gammaln(n + 1) - gammaln(m + 1)) + m * np.log(t)
    vals = (-np.exp(1j * angle)) ** m * np.exp(logmag) / ch ** (n + 1)
    if nb == 0:
        out[n + m, m] = vals
    else:
        out[m, n + m] = vals
    return out


def _state(space, amps, label):
    amps = np.asarray(amps, dtype=np.complex128).reshape(-1)
    tail = max(0.0, 1.0 - float(np.vdot(amps, amps).real))
    return FockState(space, amps, tail, label)


def squeezed_number_state(space, p, indices, which="sp2OneMode"):
    """Closed-form Dirac-type su(1,1) squeezed number state.

    Parameters
    ----------
    space : FockSpace
    p : Sp2SqueezeParams
    indices : tuple of int
        ``(n,)`` with n in {0, 1} for one mode; ``(n, 0)`` or ``(0, n)``
        for two modes.
    which : {"sp2OneMode", "sp2TwoMode"}

    Returns
    -------
    FockState
        ``tail`` is the exact probability lost beyond the cutoff (the
        closed forms are normalized on the infinite space).

    Raises
    ------
    UnsupportedError
        For index patterns without a closed form; use ``squeeze_unitary``.
    """
    if which == "sp2OneMode":
        if space.modes != 1 or len(indices) != 1:
            raise DimensionError("sp2OneMode needs a one-mode space and one index")
        amps = _one_mode_amps(space.cutoff, p.rho, p.phi, indices[0])
    elif which == "sp2TwoMode":
        if space.modes != 2 or len(indices) != 2:
            raise DimensionError("sp2TwoMode needs a two-mode space and two indices")
        if max(indices) > space.cutoff:
            raise IndexError("occupation beyond the cutoff")
        amps = _two_mode_amps(space.cutoff, p.rho, p.phi, tuple(indices))
    else:
        raise ValueError(f"which must be 'sp2OneMode' or 'sp2TwoMode', got {which!r}")
    return _state(space, amps, f"{which}{tuple(indices)}")


def xi_pm(p):
    """Complex ``xi_+-`` = ``(rho/2) e^{-i(chi +- phi + pi/2)}`` of the Schwinger-type states."""
    return (0.5 * p.rho * np.exp(-1j * (p.chi + p.phi + np.pi / 2)),
            0.5 * p.rho * np.exp(-1j * (p.chi - p.phi + np.pi / 2)))


def _pieces(space, p):
    # per-half squeezed states for xi_+ and xi_-
    xp, xm = xi_pm(p)
    N = space.cutoff
    if space.modes == 2:
        def half(xi, n):
            return _one_mode_amps(N, 2 * abs(xi), np.angle(xi), n)
    else:
        def half(xi, ns):
            return _two_mode_amps(N, 2 * abs(xi), np.angle(xi), ns).ravel()
    return xp, xm, half


def sp4_squeezed_vacuum(space, p, realization=None):
    """Closed-form Schwinger-type Sp(4;R) squeezed vacuum.

    Two modes: ``e^{-i chi/2} |xi_+>_(0) (x) |xi_->_(0)``; four modes:
    ``e^{-i chi} |xi_+>_(0,0) (x) |xi_->_(0,0)`` with ``(a, b)`` carrying
    ``xi_+``.  The state does not depend on ``theta``.

    Parameters
    ----------
    space : FockSpace
    p : H22Params
    realization : {"majorana", "dirac"}, optional
        Inferred from the mode count when omitted.

    Returns
    -------
    FockState
    """
    realization = _realization(space, realization)
    xp, xm, half = _pieces(space, p)
    if realization == "majorana":
        amps = np.exp(-0.5j * p.chi) * np.kron(half(xp, 0), half(xm, 0))
    else:
        amps = np.exp(-1j * p.chi) * np.kron(half(xp, (0, 0)), half(xm, (0, 0)))
    return _state(space, amps, f"sp4-{realization}-vacuum")


def _realization(space, realization):
    by_modes = {2: "majorana", 4: "dirac"}
    if realization is None:
        if space.modes not in by_modes:
            raise DimensionError("Sp(4;R) states need two or four modes")
        return by_modes[space.modes]
    if by_modes.get(space.modes) != realization:
        raise DimensionError(f"{realization} realization does not fit {space.modes} modes")
    return realization


ONEPHOTON_SLOTS = {2: ((1, 0), (0, 1)), 4: ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))}


def sp4_squeezed_onephoton(space, p, which):
    """Closed-form Schwinger-type Sp(4;R) squeezed one-photon state.

    Parameters
    ----------
    space : FockSpace
        Two or four modes.
    p : H22Params
    which : tuple of int
        Slot of the photon, e.g. ``(1, 0)`` or ``(0, 0, 1, 0)``.

    Returns
    -------
    FockState
        The ``cos(theta/2)``, ``sin(theta/2)`` superposition of products
        of squeezed vacua and squeezed one-photon states.
    """
    which = tuple(int(v) for v in which)
    slots = ONEPHOTON_SLOTS.get(space.modes, ())
    if which not in slots:
        raise ValueError(f"invalid photon slot {which}; options: {list(slots)}")
    c, s = np.cos(p.theta / 2), np.sin(p.theta / 2)
    ep = np.exp(0.5j * p.phi)
    xp, xm, half = _pieces(space, p)
    if space.modes == 2:
        pre = np.exp(-1j * p.chi)
        plus1 = np.kron(half(xp, 1), half(xm, 0))
        minus1 = np.kron(half(xp, 0), half(xm, 1))
        if which == (1, 0):
            amps = pre * (c / ep * plus1 - 1j * s * ep * minus1)
        else:
            amps = pre * (c * ep * minus1 - 1j * s / ep * plus1)
    else:
        pre = np.exp(-1.5j * p.chi)
        vac_p, vac_m = half(xp, (0, 0)), half(xm, (0, 0))
        if which in ((1, 0, 0, 0), (0, 1, 0, 0)):
            ns = which[:2]
            amps = pre * (c / ep * np.kron(half(xp, ns), vac_m)
                          - 1j * s * ep * np.kron(vac_p, half(xm, ns)))
        else:
            ns = which[2:]
            amps = pre * (c * ep * np.kron(vac_p, half(xm, ns))
                          - 1j * s / ep * np.kron(half(xp, ns), vac_m))
    return _state(space, amps, f"sp4-onephoton{which}")


def sp4_unitary_state(ops, p, type="schwinger", ns=None, route=None):
    """``S |ns>`` through the matrix-exponential route."""
    space = ops.space
    ns = (0,) * space.modes if ns is None else tuple(ns)
    u = squeeze_unitary(ops, p, type, route)
    return FockState(space, u.apply(space.basis(ns).amps), 0.0, f"unitary-{type}{ns}")


def concurrence_theta(theta):
    """Concurrence ``|sin(theta)|`` of the squeezed one-photon state."""
    return float(abs(np.sin(theta)))


def concurrence_q(q, tol=1e-10):
    """Two-qubit concurrence ``sqrt(2 (1 - tr((Q^dag Q)^2)))``.

    Raises
    ------
    ConstraintError
        If ``tr(Q^dag Q)`` differs from one by more than ``tol``.
    """
    q = np.asarray(q, dtype=np.complex128)
    if q.shape != (2, 2):
        raise DimensionError(f"Q must be 2x2, got {q.shape}")
    rho = q.conj().T @ q
    res = abs(np.trace(rho).real - 1.0)
    if res > tol:
        raise ConstraintError(f"Q is not normalized (residual {res:.3g})", res)
    val = 2.0 * (1.0 - np.trace(rho @ rho).real)
    return float(np.sqrt(min(1.0, max(0.0, val))))


def qubit_matrix(state, p):
    """Amplitudes ``Q_ij`` of ``state`` on ``|xi>_(i) (x) |xi>_(j)``, ``i, j`` in (1, 0).

    Meaningful at ``phi = 0`` where ``xi_+ = xi_-``.
    """
    space = state.space
    if space.modes != 2:
        raise DimensionError("qubit extraction needs the two-mode state")
    xp, xm = xi_pm(p)
    up = {n: _one_mode_amps(space.cutoff, 2 * abs(xp), np.angle(xp), n) for n in (1, 0)}
    um = {n: _one_mode_amps(space.cutoff, 2 * abs(xm), np.angle(xm), n) for n in (1, 0)}
    q = np.zeros((2, 2), dtype=np.complex128)
    for r, i in enumerate((1, 0)):
        for col, j in enumerate((1, 0)):
            q[r, col] = np.vdot(np.kron(up[i], um[j]), state.amps)
    return q


def dirac_variances(p):
    """Closed-form Dirac-type quadrature variances."""
    c2, s2 = np.cos(p.theta / 2) ** 2, np.sin(p.theta / 2) ** 2
    ch, sh = np.cosh(2 * p.rho), np.sinh(2 * p.rho)
    sp_, sm = np.sin(p.chi + p.phi), np.sin(p.chi - p.phi)
    return 0.25 * np.array([c2 + s2 * (ch + sh * sp_), c2 + s2 * (ch - sh * sp_),
                            c2 + s2 * (ch + sh * sm), c2 + s2 * (ch - sh * sm)])


def schwinger_variances(p):
    """Closed-form Schwinger-type quadrature variances (independent of theta)."""
    ch, sh = np.cosh(p.rho), np.sinh(p.rho)
    sp_, sm = np.sin(p.chi + p.phi), np.sin(p.chi - p.phi)
    return 0.25 * np.array([ch + sh * sp_, ch - sh * sp_, ch + sh * sm, ch - sh * sm])


def closed_variances(p, type):
    if type == "dirac":
        return dirac_variances(p)
    if type == "schwinger":
        return schwinger_variances(p)
    raise ValueError(f"type must be 'dirac' or 'schwinger', got {type!r}")


@dataclass
class MomentReport:
    """Quadrature means, variances and uncertainty products of a state."""

    means: np.ndarray
    variances: np.ndarray
    products: tuple
    scheme: str
    type: str = ""
    closed: np.ndarray = None

    def __post_init__(self):
        if np.any(self.variances < -1e-12):
            raise ConstraintError("negative variance", float(self.variances.min()))

    @property
    def max_residual(self):
        if self.closed is None:
            return float("nan")
        return float(np.abs(self.variances - self.closed).max())


def moments(state, scheme):
    """Means and variances of the four quadratures in ``state``."""
    xs = quadratures(state.space, scheme)
    v = state.amps / np.linalg.norm(state.amps)
    means, var = [], []
    for x in xs:
        xv = x @ v
        m = np.vdot(v, xv).real
        means.append(m)
        var.append(np.vdot(xv, xv).real - m * m)
    var = np.array(var)
    return MomentReport(np.array(means), var, (var[0] * var[1], var[2] * var[3]), scheme)


def _scheme_ops(space, scheme):
    realization = {"twoMode": "majorana", "fourMode": "dirac"}.get(scheme)
    if realization is None:
        raise ValueError(f"scheme must be 'twoMode' or 'fourMode', got {scheme!r}")
    return sp4_ops(space, realization)


def squeezed_moments(space, p, type="dirac", scheme="twoMode", route=None):
    """Quadrature moments of the Sp(4;R) squeezed vacuum ``S|0>``.

    Parameters
    ----------
    space : FockSpace
    p : H22Params
    type : {"dirac", "schwinger"}
    scheme : {"twoMode", "fourMode"}
    route : {"euler", "exp"}, optional
        Passed to ``squeeze_unitary``.

    Returns
    -------
    MomentReport
        ``closed`` holds the closed-form variances for comparison.
    """
    ops = _scheme_ops(space, scheme)
    state = sp4_unitary_state(ops, p, type, route=route)
    rep = moments(state, scheme)
    rep.type = type
    rep.closed = closed_variances(p, type)
    return rep


def displacement(space, alphas, scheme="twoMode"):
    """Displacement operator as a product of per-mode factors.

    Parameters
    ----------
    space : FockSpace
    alphas : sequence of complex
        ``(alpha,)`` for ``oneMode``, ``(alpha, beta)`` otherwise.
    scheme : {"oneMode", "twoMode", "fourMode"}
        ``fourMode`` displaces ``A = (a + b)/sqrt 2`` by alpha and
        ``B = (c + d)/sqrt 2`` by beta, i.e. each mode by ``./sqrt 2``.

    Returns
    -------
    FactoredOperator
    """
    per_mode = {
        "oneMode": lambda al: [al[0]],
        "twoMode": lambda al: [al[0], al[1]],
        "fourMode": lambda al: [al[0] / np.sqrt(2), al[0] / np.sqrt(2),
                                al[1] / np.sqrt(2), al[1] / np.sqrt(2)],
    }
    want = {"oneMode": 1, "twoMode": 2, "fourMode": 4}
    if scheme not in want:
        raise ValueError(f"scheme must be one of {sorted(want)}, got {scheme!r}")
    if space.modes != want[scheme]:
        raise DimensionError(f"{scheme} needs {want[scheme]} modes, got {space.modes}")
    n_alpha = 1 if scheme == "oneMode" else 2
    if len(alphas) != n_alpha:
        raise DimensionError(f"{scheme} takes {n_alpha} displacement parameters")
    shifts = per_mode[scheme]([complex(a) for a in alphas])
    a1 = _ladder1(space.cutoff)
    n1 = space.cutoff + 1
    factors = []
    for mode, al in enumerate(shifts):
        if al == 0:
            continue
        d1 = block_exp(al * a1.conj().T - np.conj(al) * a1)
        left = sp.identity(n1 ** mode, format="csr")
        right = sp.identity(n1 ** (space.modes - mode - 1), format="csr")
        factors.append(sp.kron(sp.kron(left, d1), right, format="csr"))
    return FactoredOperator(factors, space.dimension)


def coherent_amps(cutoff, alpha):
    """Normalized coherent-state amplitudes ``e^{-|a|^2/2} a^n / sqrt(n!)``, truncated."""
    n = np.arange(cutoff + 1)
    logfact = 0.5 * gammaln(n + 1)
    if alpha == 0:
        out = np.zeros(cutoff + 1, dtype=np.complex128)
        out[0] = 1.0
        return out
    return np.exp(-0.5 * abs(alpha) ** 2 + n * np.log(abs(alpha)) - logfact) * np.exp(1j * n * np.angle(alpha))


@dataclass
class CoherentReport:
    """Squeezed coherent state diagnostics."""

    moments: MomentReport
    vacuum: MomentReport
    expected_means: np.ndarray
    eigen_residual: float
    eigen_detail: dict

    @property
    def mean_residual(self):
        return float(np.abs(self.moments.means - self.expected_means).max())

    @property
    def variance_shift(self):
        return float(np.abs(self.moments.variances - self.vacuum.variances).max())


def squeezed_coherent_report(space, p, alphas, type="dirac", scheme="twoMode", route=None):
    """Moments and eigenvalue relations of ``D(alpha, beta) S |0>``.

    The transformed spinor ``psi' = M^{-1} psi`` obeys
    ``psi'_1 |st> = phi'_1 |st>``, ``psi'_3 |st> = phi'_3 |st>`` and the
    adjoint relations for components 2 and 4, with ``phi' = M^{-1} phi``
    and ``phi`` the displacement of ``psi``.

    Returns
    -------
    CoherentReport
    """
    ops = _scheme_ops(space, scheme)
    alpha, beta = (complex(v) for v in alphas)
    vac = sp4_unitary_state(ops, p, type, route=route)
    disp = displacement(space, (alpha, beta), scheme)
    st = FockState(space, disp.apply(vac.amps))
    rep = moments(st, scheme)
    vrep = moments(vac, scheme)
    for r in (rep, vrep):
        r.type = type
        r.closed = closed_variances(p, type)
    scale = 1.0 if scheme == "twoMode" else 1.0 / np.sqrt(2.0)
    phi = scale * np.array([alpha, np.conj(alpha), beta, np.conj(beta)])
    minv = np.linalg.inv(_sp4_matrix(p, type))
    phi_p = minv @ phi
    v = st.amps
    detail = {}
    for comp in range(4):
        op = sum(minv[comp, j] * ops.psi[j] for j in range(4))
        if comp in (1, 3):
            op, target = op.conj().T, np.conj(phi_p[comp])
        else:
            target = phi_p[comp]
        detail[comp + 1] = float(np.linalg.norm(op @ v - target * v))
    expected = np.array([alpha.real, alpha.imag, beta.real, beta.imag])
    return CoherentReport(rep, vrep, expected, max(detail.values()), detail)


def sp2_coherent_phase_check(cutoff, p, alpha_d):
    """Dirac vs Schwinger su(1,1) squeezed coherent states.

    Compares ``S |alpha_D>`` with ``e^{-i phi/4} S_schwinger |alpha_S>``
    for ``alpha_S = alpha_D e^{+i phi/2}`` (``stated``) and
    ``alpha_S = alpha_D e^{-i phi/2}`` (``derived``).

    Returns
    -------
    dict
        Euclidean residuals of both relations.
    """
    space = FockSpace(1, cutoff)
    ops = su11_ops(space, "oneMode")
    s_d = squeeze_unitary(ops, p, "dirac")
    s_s = squeeze_unitary(ops, p, "schwinger")
    lhs = s_d.apply(coherent_amps(cutoff, alpha_d))
    out = {}
    for name, sign in (("stated", 1.0), ("derived", -1.0)):
        alpha_s = alpha_d * np.exp(0.5j * sign * p.phi)
        rhs = np.exp(-0.25j * p.phi) * s_s.apply(coherent_amps(cutoff, alpha_s))
        out[name] = float(np.linalg.norm(lhs - rhs))
    return out


def covariance_check(ops, p, type="dirac", total=None, route=None):
    """Residual of ``S^dag psi_alpha S = sum_beta M_{alpha beta} psi_beta``.

    Matrix elements are compared between basis states with at most
    ``total`` quanta.  The default is 6 for two modes and 1 for four
    modes, where the cutoff is only 7 and richer states reach the wall.

    Returns
    -------
    float
    """
    space = ops.space
    if total is None:
        total = 6 if space.modes == 2 else 1
    u = squeeze_unitary(ops, p, type, route)
    m = _sp4_matrix(p, type)
    low = space.low(total)
    basis = np.zeros((space.dimension, len(low)), dtype=np.complex128)
    basis[low, np.arange(len(low))] = 1.0
    sv = u.apply(basis)
    worst = 0.0
    for al in range(4):
        lhs = sv.conj().T @ (ops.psi[al] @ sv)
        rhs_op = sum(m[al, b] * ops.psi[b] for b in range(4))
        rhs = (rhs_op[low][:, low]).toarray()
        worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst
