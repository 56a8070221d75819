"""Dense complex linear algebra kernel.

Matrices are ``numpy.ndarray`` objects of dtype ``complex128``.  The
matrix exponential is a fixed order-13 Pade scaling-and-squaring scheme
with an eigen-decomposition fallback for normal matrices whose norm is
beyond the certified range.  ``block_exp`` exponentiates a sparse
generator block by block, which is how the Fock engine keeps the large
truncated-space exponentials affordable.
"""

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .errors import DimensionError, RangeError

# Higham (2005) coefficients of the [13/13] Pade approximant.
_PADE13 = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
    960960.0, 16380.0, 182.0, 1.0,
)

SCALE_THRESHOLD = 5.4
CERTIFIED_NORM = 50.0


def cmatrix(a):
    """Return ``a`` as a finite 2-D complex array.

    Raises
    ------
    DimensionError
        If ``a`` is not two-dimensional.
    ValueError
        If any entry is NaN or infinite.
    """
    out = np.asarray(a, dtype=np.complex128)
    if out.ndim != 2:
        raise DimensionError(f"expected a matrix, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValueError("matrix has non-finite entries")
    return out


def dagger(a):
    """Conjugate transpose."""
    return np.conj(np.asarray(a)).T


def _pade13(a, norm1):
    n = a.shape[0]
    s = 0
    if norm1 > SCALE_THRESHOLD:
        s = int(np.ceil(np.log2(norm1 / SCALE_THRESHOLD)))
    if s:
        a = a / 2.0 ** s
    b = _PADE13
    ident = np.eye(n, dtype=np.complex128)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a4 @ a2
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
             + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
         + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident)
    r = np.linalg.solve(v - u, v + u)
    for _ in range(s):
        r = r @ r
    return r


def _is_normal(a, rtol=1e-12):
    comm = a @ dagger(a) - dagger(a) @ a
    scale = max(np.linalg.norm(a) ** 2, 1.0)
    return np.linalg.norm(comm) <= rtol * scale


def _exp_normal(a):
    # i*Hermitian and Hermitian inputs get the symmetric eigensolver
    scale = max(np.linalg.norm(a), 1.0)
    if np.linalg.norm(a + dagger(a)) <= 1e-14 * scale:
        w, v = np.linalg.eigh(-1j * a)
        return (v * np.exp(1j * w)) @ dagger(v)
    if np.linalg.norm(a - dagger(a)) <= 1e-14 * scale:
        w, v = np.linalg.eigh(a)
        return (v * np.exp(w)) @ dagger(v)
    t, z = scipy.linalg.schur(a, output="complex")
    return (z * np.exp(np.diag(t))) @ dagger(z)


def mat_exp(a):
    """Matrix exponential.

    Parameters
    ----------
    a : array_like
        Square complex matrix.

    Returns
    -------
    numpy.ndarray
        ``exp(a)``.

    Raises
    ------
    DimensionError
        If ``a`` is not square.
    RangeError
        If the spectral norm exceeds 50 and ``a`` is not normal.

    Notes
    -----
    Scaling uses the 1-norm so that ``||a||_1 / 2**s <= 5.4``.  Normal
    matrices above the certified range are exponentiated through their
    eigen-decomposition, which is exact up to rounding at any norm.
    """
    a = cmatrix(a)
    n, m = a.shape
    if n != m:
        raise DimensionError(f"mat_exp needs a square matrix, got {a.shape}")
    if n == 0:
        return a.copy()
    absa = np.abs(a)
    norm1 = absa.sum(axis=0).max()
    norminf = absa.sum(axis=1).max()
    if np.sqrt(norm1 * norminf) > CERTIFIED_NORM:
        if _is_normal(a):
            return _exp_normal(a)
        if np.linalg.norm(a, 2) > CERTIFIED_NORM:
            raise RangeError("spectral norm above 50 for a non-normal matrix; rescale first")
    return _pade13(a, norm1)


def kron(a, b):
    """Kronecker product with index ``(i*rows(b)+k, j*cols(b)+l)``."""
    return np.kron(cmatrix(a), cmatrix(b))


def frob_dist(a, b):
    """Frobenius norm of ``a - b``.

    Raises
    ------
    DimensionError
        On shape mismatch.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def commutator(a, b):
    """``ab - ba`` for dense or sparse operands."""
    return a @ b - b @ a


def block_exp(gen):
    """Exponentiate a sparse generator block by block.

    The connected components of the sparsity graph of ``gen`` are
    invariant subspaces, so ``exp(gen)`` is block diagonal in the same
    partition.  Each block goes through ``mat_exp``; identical blocks are
    exponentiated once.

    Parameters
    ----------
    gen : scipy.sparse matrix or array_like
        Square generator.

    Returns
    -------
    scipy.sparse.csr_matrix
        ``exp(gen)``.
    """
    gen = sp.csr_matrix(gen, dtype=np.complex128)
    n = gen.shape[0]
    if gen.shape[1] != n:
        raise DimensionError(f"block_exp needs a square matrix, got {gen.shape}")
    pattern = abs(gen)
    pattern = pattern + pattern.T
    _, labels = connected_components(pattern, directed=False)
    counts = np.bincount(labels)
    diag = gen.diagonal()

    rows, cols, vals = [], [], []
    single = np.nonzero(counts[labels] == 1)[0]
    rows.append(single)
    cols.append(single)
    vals.append(np.exp(diag[single]))

    order = np.argsort(labels, kind="stable")
    starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
    cache = {}
    for c in np.nonzero(counts > 1)[0]:
        members = order[starts[c]:starts[c] + counts[c]]
        block = gen[members][:, members].toarray()
        key = block.tobytes()
        eb = cache.get(key)
        if eb is None:
            eb = mat_exp(block)
            cache[key] = eb
        r, cc = np.meshgrid(members, members, indexing="ij")
        rows.append(r.ravel())
        cols.append(cc.ravel())
        vals.append(eb.ravel())
    out = sp.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n, n),
    )
    out.eliminate_zeros()
    return out
