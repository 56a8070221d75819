import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hypersqueeze.splitq import (
    BASIS, I2, METRIC4, SX, SY, SZ, SplitQuaternion, levi_civita, quaternion_units,
    sq_conj, sq_matrix_rep, sq_mul, thooft, thooft_symbols,
)

Q1, Q2, Q3, ONE = BASIS
coeffs = st.lists(st.floats(-3, 3, allow_nan=False), min_size=4, max_size=4).map(
    lambda c: SplitQuaternion(tuple(c)))


def close(a, b, tol=1e-12):
    return np.allclose(a.c, b.c, atol=tol, rtol=0)


def test_table():
    assert sq_mul(Q1, Q1) == ONE
    assert sq_mul(Q2, Q2) == ONE
    assert sq_mul(Q3, Q3) == -ONE
    assert sq_mul(Q1, Q2) == -Q3
    assert sq_mul(Q2, Q1) == Q3
    assert sq_mul(Q2, Q3) == Q1
    assert sq_mul(Q3, Q1) == Q2


@given(coeffs)
def test_unit_element(x):
    assert sq_mul(ONE, x) == x
    assert sq_mul(x, ONE) == x


@given(coeffs, coeffs, coeffs)
def test_associative(a, b, c):
    assert close(sq_mul(sq_mul(a, b), c), sq_mul(a, sq_mul(b, c)), 1e-9)


@given(coeffs, coeffs)
def test_conjugate_reverses_products(a, b):
    assert close(sq_conj(sq_mul(a, b)), sq_mul(sq_conj(b), sq_conj(a)), 1e-10)


def test_conjugate_examples():
    assert sq_conj(ONE) == ONE
    assert sq_conj(Q3) == -Q3
    assert sq_conj(sq_mul(Q1, Q2)) == sq_mul(sq_conj(Q2), sq_conj(Q1)) == Q3


def test_matrix_reps():
    assert np.array_equal(sq_matrix_rep(Q3, "main"), -1j * SZ)
    assert np.array_equal(sq_matrix_rep(Q3, "appendixA"), 1j * SY)
    assert np.array_equal(sq_matrix_rep(Q1, "main"), SX)
    assert np.array_equal(sq_matrix_rep(ONE, "appendixA"), I2)
    with pytest.raises(ValueError):
        sq_matrix_rep(Q1, "other")


@pytest.mark.parametrize("rep", ["main", "appendixA"])
def test_homomorphism_on_basis(rep):
    for a, b in itertools.product(BASIS, repeat=2):
        lhs = sq_matrix_rep(sq_mul(a, b), rep)
        assert np.array_equal(lhs, sq_matrix_rep(a, rep) @ sq_matrix_rep(b, rep))


@pytest.mark.parametrize("rep", ["main", "appendixA"])
@given(a=coeffs, b=coeffs)
def test_homomorphism_random(rep, a, b):
    lhs = sq_matrix_rep(sq_mul(a, b), rep)
    assert np.allclose(lhs, sq_matrix_rep(a, rep) @ sq_matrix_rep(b, rep), atol=1e-10)


@pytest.mark.parametrize("rep", ["main", "appendixA"])
def test_quaternion_unit_relations(rep):
    q, qbar = quaternion_units(rep)
    sym = thooft_symbols()
    for m, n in itertools.product(range(4), repeat=2):
        s = q[m] @ qbar[n] + q[n] @ qbar[m]
        assert np.abs(s - 2 * METRIC4[m, n] * I2).max() <= 1e-14
        d = q[m] @ qbar[n] - q[n] @ qbar[m]
        lower = [METRIC4[i, i] * q[i] for i in range(3)]
        rhs = 2 * sum(sym.eta[m, n, i] * lower[i] for i in range(3))
        assert np.abs(d - rhs).max() <= 1e-14


def test_levi_civita():
    eps = levi_civita(4)
    assert eps[0, 1, 2, 3] == 1
    assert eps[1, 0, 2, 3] == -1
    assert np.count_nonzero(eps) == 24
    assert levi_civita(3)[2, 0, 1] == 1


def test_thooft_examples():
    sym = thooft_symbols()
    assert thooft(sym, "eta", 1, 2, 3) == 1
    assert thooft(sym, "eta", 1, 4, 1) == -1
    with pytest.raises(IndexError):
        thooft(sym, "eta", 0, 1, 1)
    with pytest.raises(IndexError):
        thooft(sym, "etaBar", 1, 2, 4)
    with pytest.raises(ValueError):
        thooft(sym, "zeta", 1, 2, 1)


def test_thooft_antisymmetric():
    sym = thooft_symbols()
    for kind in ("eta", "etaBar"):
        for m, n, i in itertools.product(range(1, 5), range(1, 5), range(1, 4)):
            assert thooft(sym, kind, m, n, i) == -thooft(sym, kind, n, m, i)


def test_thooft_contractions():
    sym = thooft_symbols()
    assert sym.eta.dtype.kind == "i"
    ee = np.einsum("mni,mnj->ij", sym.eta, sym.eta_lower)
    bb = np.einsum("mni,mnj->ij", sym.etabar, sym.etabar_lower)
    eb = np.einsum("mni,mnj->ij", sym.eta, sym.etabar_lower)
    assert np.array_equal(ee, 4 * np.eye(3, dtype=int))
    assert np.array_equal(bb, 4 * np.eye(3, dtype=int))
    assert np.array_equal(eb, np.zeros((3, 3), dtype=int))


def test_thooft_duality():
    sym = thooft_symbols()
    g = np.diag(sym.metric)
    # eta_{mn}^i: lower m, n and keep i up
    eta_mixed = sym.eta * g[:, None, None] * g[None, :, None]
    etabar_mixed = sym.etabar * g[:, None, None] * g[None, :, None]
    dual = np.einsum("mnpq,pqi->mni", sym.epsilon, sym.eta)
    dualbar = np.einsum("mnpq,pqi->mni", sym.epsilon, sym.etabar)
    assert np.array_equal(dual, 2 * eta_mixed)
    assert np.array_equal(dualbar, -2 * etabar_mixed)


def test_pauli_constants():
    assert np.array_equal(SX @ SY, 1j * SZ)
