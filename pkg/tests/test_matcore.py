import numpy as np
import pytest
import scipy.linalg
import scipy.sparse as sp
from hypothesis import given, strategies as st

from hypersqueeze.errors import DimensionError, RangeError
from hypersqueeze.matcore import block_exp, cmatrix, commutator, dagger, frob_dist, kron, mat_exp
from hypersqueeze.splitq import I2, SX, SZ


def _random(rng, n, norm):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a * (norm / np.linalg.norm(a, 2))


def test_exp_zero_is_identity():
    assert frob_dist(mat_exp(np.zeros((2, 2))), I2) <= 1e-15


def test_exp_pauli_quarter_turn():
    assert frob_dist(mat_exp(1j * np.pi / 2 * SX), 1j * SX) < 1e-15


def test_exp_diagonal():
    assert frob_dist(mat_exp(np.diag([1.0, 2.0])), np.diag([np.e, np.e ** 2])) < 1e-14


@pytest.mark.parametrize("n", [2, 4, 8, 16])
@pytest.mark.parametrize("norm", [0.1, 1.0, 5.0, 20.0, 49.9])
def test_exp_matches_scipy(n, norm):
    rng = np.random.default_rng(n * 1000 + int(norm * 10))
    for _ in range(5):
        a = _random(rng, n, norm)
        ref = scipy.linalg.expm(a)
        assert np.linalg.norm(mat_exp(a) - ref) <= 1e-13 * np.linalg.norm(ref)


def test_exp_normal_fallback_beyond_range():
    rng = np.random.default_rng(3)
    a = _random(rng, 6, 1.0)
    h = 200.0 * (a + dagger(a)) / np.linalg.norm(a + dagger(a), 2)
    u = mat_exp(1j * h)
    assert np.linalg.norm(u @ dagger(u) - np.eye(6)) < 1e-12
    w, v = np.linalg.eigh(h)
    assert np.linalg.norm(u - (v * np.exp(1j * w)) @ dagger(v)) < 1e-11


def test_exp_non_normal_beyond_range_raises():
    a = np.array([[0.0, 200.0], [0.0, 0.0]])
    with pytest.raises(RangeError):
        mat_exp(a)


def test_exp_rejects_bad_input():
    with pytest.raises(DimensionError):
        mat_exp(np.zeros((2, 3)))
    with pytest.raises(DimensionError):
        mat_exp(np.zeros(4))
    with pytest.raises(ValueError):
        mat_exp(np.array([[np.nan, 0], [0, 1]]))


def test_exp_inverse_and_determinant():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = _random(rng, 4, rng.uniform(0.1, 5.0))
        assert frob_dist(mat_exp(a) @ mat_exp(-a), np.eye(4)) <= 1e-12
        b = _random(rng, 4, rng.uniform(0.1, 3.0))
        assert abs(np.linalg.det(mat_exp(b)) - np.exp(np.trace(b))) <= 1e-10 * abs(np.exp(np.trace(b)))


@given(st.lists(st.floats(-2, 2), min_size=8, max_size=8))
def test_exp_commuting_sum(vals):
    # commuting arguments add in the exponent
    a = np.diag(np.array(vals[:4]) + 1j * np.array(vals[4:]))
    assert frob_dist(mat_exp(a) @ mat_exp(2 * a), mat_exp(3 * a)) <= 1e-12 * np.abs(mat_exp(3 * a)).max()


def test_kron_examples():
    assert np.array_equal(kron(I2, I2), np.eye(4))
    assert np.array_equal(kron(SZ, I2), np.diag([1, 1, -1, -1]))


def test_kron_index_convention():
    rng = np.random.default_rng(11)
    a, b = rng.normal(size=(2, 3)), rng.normal(size=(4, 5))
    k = kron(a, b)
    assert k.shape == (8, 15)
    for i in range(2):
        for j in range(3):
            for r in range(4):
                for c in range(5):
                    assert k[i * 4 + r, j * 5 + c] == a[i, j] * b[r, c]


def test_kron_mixed_product_and_associativity():
    rng = np.random.default_rng(5)
    a, b, c, d = (_random(rng, 2, 1.0) for _ in range(4))
    lhs = kron(a, b) @ kron(c, d)
    assert frob_dist(lhs, kron(a @ c, b @ d)) < 1e-14
    # same entries, rounding order differs
    assert frob_dist(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-15


def test_frob_dist():
    rng = np.random.default_rng(2)
    a, b = _random(rng, 3, 1.0), _random(rng, 3, 1.0)
    assert frob_dist(a, a) == 0.0
    assert frob_dist(I2, np.zeros((2, 2))) == pytest.approx(np.sqrt(2), abs=1e-15)
    assert frob_dist(a, b) == frob_dist(b, a) > 0
    with pytest.raises(DimensionError):
        frob_dist(I2, np.eye(3))


def test_cmatrix_and_commutator():
    assert cmatrix([[1, 2], [3, 4]]).dtype == np.complex128
    assert frob_dist(commutator(SX, SZ), -2j * np.array([[0, -1j], [1j, 0]])) < 1e-15


def test_block_exp_matches_dense():
    rng = np.random.default_rng(9)
    n = 30
    gen = np.zeros((n, n), dtype=np.complex128)
    # three coupled blocks, two of them identical, plus isolated diagonal entries
    blk = _random(rng, 4, 2.0)
    for start in (0, 10):
        gen[start:start + 4, start:start + 4] = blk
    gen[20:25, 20:25] = _random(rng, 5, 3.0)
    gen[np.arange(25, 30), np.arange(25, 30)] = rng.normal(size=5)
    out = block_exp(sp.csr_matrix(gen))
    assert sp.issparse(out)
    assert np.linalg.norm(out.toarray() - scipy.linalg.expm(gen)) < 1e-12


def test_block_exp_rejects_non_square():
    with pytest.raises(DimensionError):
        block_exp(np.zeros((2, 3)))
