"""Named numerical tolerances used across the package.

Every threshold that a contract depends on lives here so it can be
audited (and overridden through function keyword arguments) in one place.
All values are dimensionless; matrix-relative tolerances are scaled by
the Frobenius norm at the point of use.
"""

# Maximum allowed deviation from Hermiticity, max|M - M^dagger|,
# relative to max(1, ||M||_F).
HERMITICITY_TOL = 1e-12

# Jacobi eigensolver: stop when the off-diagonal Frobenius norm drops
# below EIGEN_OFFDIAG_TOL * ||M||_F, give up after EIGEN_MAX_SWEEPS.
EIGEN_OFFDIAG_TOL = 1e-14
EIGEN_MAX_SWEEPS = 100

# Vectors with norm below this are dropped before orthonormalization;
# the same (relative) threshold detects linear dependence during
# Gram-Schmidt.
ORTHO_DROP_TOL = 1e-12

# Rank cut for building a range projector from an eigendecomposition:
# eigenvalues below RANGE_RANK_TOL * lambda_max count as zero.
RANGE_RANK_TOL = 1e-9

# A parameter with magnitude below this is treated as non-generic.
GENERIC_PARAM_TOL = 1e-12

# Relative tolerance for the two degeneracy tests m*c == b*s and
# conj(b)*t == conj(n)*d.
DEGENERACY_REL_TOL = 1e-10

# The partial transpose counts as non-positive (NPT) when its smallest
# eigenvalue is below -PT_NEGATIVITY_TOL.  The Jacobi solver resolves
# eigenvalues of unit-trace 9x9 matrices to ~1e-13, so this leaves three
# orders of magnitude of headroom against false NPT verdicts.
PT_NEGATIVITY_TOL = 1e-10

# The numerical product search counts as "found a product vector in the
# range" when the best residual is at or below this.
SEARCH_RESIDUAL_TOL = 1e-8

# sigma and rho count as equal when ||sigma - rho||_F is at or below this.
SIGMA_EQUALS_RHO_TOL = 1e-12
