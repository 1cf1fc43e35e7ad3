"""Dense complex linear algebra for small bipartite systems.

Index convention, fixed globally for the whole package: a bipartite
state on subsystems A (dimension dA) and B (dimension dB) uses the
linear index

    i = m + dA * mu

where m labels subsystem A and mu labels subsystem B, i.e. the
first-subsystem index varies fastest (components ordered 00, 10, 20,
01, 11, ...).  Every function here and in the other modules assumes
this layout; it is defined only in this one place.

Note that ``kron(A, B)`` follows the usual mathematical convention in
which the FIRST factor is the slow index.  An operator U_A x U_B acting
on state vectors in the layout above therefore has matrix
``kron(U_B, U_A)``; use :func:`tensor_product_vector` and
:func:`operator_tensor` instead of spelling this out at call sites.
"""

import math

import numpy as np

from .tolerances import (
    EIGEN_MAX_SWEEPS,
    EIGEN_OFFDIAG_TOL,
    HERMITICITY_TOL,
    ORTHO_DROP_TOL,
    RANGE_RANK_TOL,
)


class HermitianEigenResult:
    """Eigenvalues (descending) and orthonormal eigenvectors (columns)."""

    __slots__ = ("eigenvalues", "eigenvectors")

    def __init__(self, eigenvalues, eigenvectors):
        self.eigenvalues = eigenvalues
        self.eigenvectors = eigenvectors

    def __iter__(self):
        return iter((self.eigenvalues, self.eigenvectors))


def kron(a, b):
    """Kronecker product with the first factor as slow index.

    (A x B)[i*rB + k, j*cB + l] = A[i, j] * B[k, l].
    """
    return np.kron(np.asarray(a), np.asarray(b))


def tensor_product_vector(e, f):
    """Product state vector of e (subsystem A) and f (subsystem B).

    Component (m, mu) sits at linear index m + dA*mu, so the second
    factor is the slow index.
    """
    e = np.asarray(e)
    f = np.asarray(f)
    return np.kron(f, e)


def operator_tensor(u_a, u_b):
    """Matrix of the operator U_A x U_B in the package's state layout."""
    return np.kron(np.asarray(u_b), np.asarray(u_a))


def partial_transpose_first(m, d_a, d_b):
    """Transpose the first-subsystem indices only.

    sigma[(m, mu), (n, nu)] = rho[(n, mu), (m, nu)].  A pure entry
    permutation: applying it twice returns the input exactly, and trace
    and Frobenius norm are preserved exactly.
    """
    m = np.asarray(m)
    dim = d_a * d_b
    if m.shape != (dim, dim):
        raise ValueError(
            f"matrix shape {m.shape} does not match subsystem dimensions "
            f"{d_a}x{d_b} (expected {dim}x{dim})"
        )
    # Layout i = m + dA*mu puts mu on the slow axis of each reshape.
    t = m.reshape(d_b, d_a, d_b, d_a)
    return t.transpose(0, 3, 2, 1).reshape(dim, dim)


def max_hermiticity_defect(m):
    """max |M[i,j] - conj(M[j,i])| over all entries."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def _offdiag_norm(a):
    # Computed entry-wise: the textbook ||A||_F^2 - sum|diag|^2 form
    # cancels catastrophically once the off-diagonal mass is tiny.
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return float(np.linalg.norm(b))


def hermitian_eigen(m, *, offdiag_tol=EIGEN_OFFDIAG_TOL,
                    max_sweeps=EIGEN_MAX_SWEEPS,
                    herm_tol=HERMITICITY_TOL):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Uses complex Givens rotations, sweeping all index pairs (p < q) in
    order until the off-diagonal Frobenius norm falls below
    ``offdiag_tol * ||M||_F``.  Eigenvalues are returned in descending
    order (stable under ties); eigenvectors are the matching columns.

    Raises ``ValueError`` if the input is not Hermitian within
    ``herm_tol`` (relative to max(1, ||M||_F)) and
    ``numpy.linalg.LinAlgError`` if ``max_sweeps`` sweeps do not reach
    the target.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    fro = float(np.linalg.norm(a))
    if max_hermiticity_defect(a) > herm_tol * max(1.0, fro):
        raise ValueError("matrix is not Hermitian within tolerance")
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    if fro == 0.0:
        return HermitianEigenResult(np.zeros(n), v)

    # Rotations on pivots this small cannot lift the off-diagonal norm
    # above the stopping target, so they are skipped.
    skip = offdiag_tol * fro / n
    converged = False
    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= offdiag_tol * fro:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(a[p, q])
                absa = abs(apq)
                if absa <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phase = apq / absa
                tau = (aqq - app) / (2.0 * absa)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sph = s * phase
                sphc = s * phase.conjugate()
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - sphc * colq
                a[:, q] = sph * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - sph * rowq
                a[q, :] = sphc * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - sphc * vq
                v[:, q] = sph * vp + c * vq
    if not converged and _offdiag_norm(a) > offdiag_tol * fro:
        raise np.linalg.LinAlgError(
            f"Jacobi iteration did not converge in {max_sweeps} sweeps"
        )
    w = np.diag(a).real.copy()
    order = np.argsort(-w, kind="stable")
    return HermitianEigenResult(w[order], v[:, order])


def projector_from_vectors(vectors, *, drop_tol=ORTHO_DROP_TOL):
    """Orthogonal projector onto the span of the given vectors.

    Vectors with norm below ``drop_tol`` are ignored, the rest are
    orthonormalized by modified Gram-Schmidt with one re-orthogonalization
    pass; vectors that collapse below ``drop_tol`` (relative to their
    input norm) during the process are treated as dependent and dropped.
    An empty span yields the zero matrix.
    """
    vecs = [np.asarray(v, dtype=complex) for v in vectors]
    if vecs:
        dim = vecs[0].shape[0]
    else:
        raise ValueError("projector_from_vectors needs the vector dimension; got no vectors")
    basis = []
    for vec in vecs:
        if vec.shape != (dim,):
            raise ValueError("all vectors must share one dimension")
        norm_in = float(np.linalg.norm(vec))
        if norm_in < drop_tol:
            continue
        u = vec.copy()
        for _ in range(2):  # second pass re-orthogonalizes
            for b in basis:
                u = u - np.vdot(b, u) * b
        norm_out = float(np.linalg.norm(u))
        if norm_out < drop_tol * norm_in:
            continue
        basis.append(u / norm_out)
    p = np.zeros((dim, dim), dtype=complex)
    for b in basis:
        p += np.outer(b, b.conj())
    return p


def range_projector(m, *, rank_tol=RANGE_RANK_TOL):
    """Projector onto the range of a Hermitian PSD matrix.

    Eigenvectors with eigenvalue above ``rank_tol * lambda_max`` span
    the range.
    """
    res = hermitian_eigen(m)
    lam_max = max(float(res.eigenvalues[0]), 0.0)
    keep = [res.eigenvectors[:, k]
            for k, lam in enumerate(res.eigenvalues)
            if lam > rank_tol * lam_max]
    if not keep:
        return np.zeros_like(np.asarray(m, dtype=complex))
    return projector_from_vectors(keep)
