import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chessboard_states import (
    build_rho,
    build_vectors,
    family_a,
    hermitian_eigen,
    kron,
    partial_transpose_first,
    projector_from_vectors,
)


def random_complex_matrix(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_hermitian(rng, n):
    h = random_complex_matrix(rng, n, n)
    return 0.5 * (h + h.conj().T)


class TestKron:
    def test_identity(self):
        assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_diagonal(self):
        out = kron(np.diag([1.0, 2.0]), np.diag([3.0, 4.0]))
        assert np.allclose(out, np.diag([3.0, 4.0, 6.0, 8.0]))

    def test_unit_basis_placement(self):
        e0 = np.zeros((2, 2)); e0[0, 0] = 1.0
        e1 = np.zeros((2, 2)); e1[1, 1] = 1.0
        out = kron(e0, e1)
        expected = np.zeros((4, 4)); expected[1, 1] = 1.0
        assert np.array_equal(out, expected)

    def test_trace_multiplicative(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            a = random_complex_matrix(rng, 3, 3)
            b = random_complex_matrix(rng, 3, 3)
            assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) \
                <= 1e-12 * max(1.0, abs(np.trace(a) * np.trace(b)))


class TestPartialTranspose:
    def test_diagonal_fixed(self):
        d = np.diag(np.arange(1.0, 10.0))
        assert np.array_equal(partial_transpose_first(d, 3, 3), d)

    def test_single_entry_moves(self):
        # entry at ((m,mu),(n,nu)) = ((0,1),(1,0)) lands at ((1,1),(0,0))
        m = np.zeros((4, 4))
        m[0 + 2 * 1, 1 + 2 * 0] = 1.0
        out = partial_transpose_first(m, 2, 2)
        expected = np.zeros((4, 4))
        expected[1 + 2 * 1, 0 + 2 * 0] = 1.0
        assert np.array_equal(out, expected)

    def test_family_a_is_fixed_point(self):
        rho = build_rho(family_a(1, 2, 3, 1, 1, 1)).rho
        sigma = partial_transpose_first(rho, 3, 3)
        assert np.linalg.norm(sigma - rho) <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            partial_transpose_first(np.eye(6), 3, 3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (2, 3), (3, 3)]))
    def test_involution_and_isometries(self, seed, dims):
        d_a, d_b = dims
        rng = np.random.default_rng(seed)
        m = random_complex_matrix(rng, d_a * d_b, d_a * d_b)
        out = partial_transpose_first(m, d_a, d_b)
        assert np.array_equal(partial_transpose_first(out, d_a, d_b), m)
        assert np.trace(out) == np.trace(m)
        # pure entry permutation: the multiset of entries is unchanged
        assert np.array_equal(np.sort(np.abs(out), axis=None),
                              np.sort(np.abs(m), axis=None))


class TestHermitianEigen:
    def test_identity(self):
        res = hermitian_eigen(np.eye(9))
        assert np.allclose(res.eigenvalues, 1.0)

    def test_pauli_x(self):
        res = hermitian_eigen(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(res.eigenvalues, [1.0, -1.0], atol=1e-14)

    def test_family_a_spectrum(self):
        rho = build_rho(family_a(1, 2, 3, 1, 1, 1)).rho
        res = hermitian_eigen(rho)
        expected = np.array([14, 11, 6, 3, 0, 0, 0, 0, 0]) / 34.0
        assert np.max(np.abs(res.eigenvalues - expected)) <= 1e-12

    def test_rejects_non_hermitian(self):
        m = np.array([[0.0, 1.0], [0.0, 0.0]])
        with pytest.raises(ValueError):
            hermitian_eigen(m)

    def test_zero_matrix(self):
        res = hermitian_eigen(np.zeros((4, 4)))
        assert np.array_equal(res.eigenvalues, np.zeros(4))

    def test_against_numpy_and_contracts(self):
        rng = np.random.default_rng(42)
        for _ in range(120):
            n = int(rng.integers(2, 10))
            h = random_hermitian(rng, n)
            scale = max(1.0, float(np.linalg.norm(h)))
            values, vectors = hermitian_eigen(h)
            assert np.all(np.diff(values) <= 0)
            assert np.max(np.abs(values - np.linalg.eigvalsh(h)[::-1])) <= 1e-10 * scale
            assert np.linalg.norm(h @ vectors - vectors * values) <= 1e-10 * scale
            assert np.max(np.abs(vectors.conj().T @ vectors - np.eye(n))) <= 1e-10
            assert abs(np.sum(values) - np.trace(h).real) <= 1e-10 * scale
            recon = (vectors * values) @ vectors.conj().T
            assert np.linalg.norm(recon - h) <= 1e-9 * scale


class TestProjector:
    def test_single_unit_vector(self):
        e0 = np.zeros(4); e0[0] = 1.0
        p = projector_from_vectors([e0])
        assert p[0, 0] == 1.0 and np.trace(p).real == pytest.approx(1.0)

    def test_four_family_vectors(self):
        vectors = build_vectors(family_a(1, 2, 3, 1, 1, 1))
        p = projector_from_vectors(list(vectors))
        assert abs(np.trace(p).real - 4.0) <= 1e-12
        assert np.linalg.norm(p @ p - p) <= 1e-12
        assert np.linalg.norm(p - p.conj().T) <= 1e-12

    def test_duplicates_filtered(self):
        v = np.array([1.0, 2.0, 0.0, 1j])
        p = projector_from_vectors([v, v])
        assert abs(np.trace(p).real - 1.0) <= 1e-12

    def test_near_zero_vectors_dropped(self):
        v = np.array([1.0, 0.0])
        p = projector_from_vectors([v, np.full(2, 1e-14)])
        assert abs(np.trace(p).real - 1.0) <= 1e-12

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(ValueError):
            projector_from_vectors([np.ones(3), np.ones(4)])
