"""The chessboard family of 3x3 bipartite density matrices.

A state is built from four mutually orthogonal unnormalized vectors
parametrized by eight numbers (a, b, c, d, m, n, s, t):

    V1 = (m, 0, s;  0, n, 0;  0, 0, 0)
    V2 = (0, a, 0;  b, 0, c;  0, 0, 0)
    V3 = (n*, 0, 0;  0, -m*, 0;  t, 0, 0)
    V4 = (0, b*, 0;  -a*, 0, 0;  0, d, 0)

    rho = N * sum_j |Vj><Vj|,   N = 1 / sum_j <Vj|Vj>

with components listed in the order 00, 10, 20, 01, ... (first-subsystem
index fastest, see linalg).  The resulting 9x9 matrix has an exactly
vanishing 9th row and column and is nonzero only where row and column
index share parity, like a chessboard.

Local diagonal phase rotations on either subsystem, together with an
overall phase per vector, change only the phases of the eight parameters.
Two combinations are invariant: c*m/(b*s) and conj(b)*t/(conj(n)*d).
This gauge freedom is used to bring any parameter set to a canonical
form in which a, b, c, d, m, n are real and nonnegative while s and t
keep the residual phases.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .tolerances import GENERIC_PARAM_TOL

PARAM_NAMES = ("a", "b", "c", "d", "m", "n", "s", "t")

#: Documented once, emitted in every state file.
INDEX_CONVENTION = "i = m + 3*mu"


@dataclass(frozen=True)
class RawParams:
    """The eight family parameters, all allowed to be complex."""

    a: complex
    b: complex
    c: complex
    d: complex
    m: complex
    n: complex
    s: complex
    t: complex

    def __post_init__(self):
        for name in PARAM_NAMES:
            value = complex(getattr(self, name))
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise ValueError(f"parameter {name} is not finite: {value}")
            object.__setattr__(self, name, value)

    def as_tuple(self):
        return tuple(getattr(self, name) for name in PARAM_NAMES)


@dataclass(frozen=True)
class CanonicalParams:
    """Gauge-fixed parameters: a..n real nonnegative, phases on s and t."""

    a: float
    b: float
    c: float
    d: float
    m: float
    n: float
    s: complex
    t: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "m", "n"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"parameter {name} is not finite: {value}")
            if value < 0.0:
                raise ValueError(f"parameter {name} must be nonnegative, got {value}")
            object.__setattr__(self, name, value)
        for name in ("s", "t"):
            value = complex(getattr(self, name))
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise ValueError(f"parameter {name} is not finite: {value}")
            object.__setattr__(self, name, value)

    def as_tuple(self):
        return tuple(getattr(self, name) for name in PARAM_NAMES)

    def scaled(self, factor):
        """Same state, all eight parameters multiplied by ``factor`` > 0."""
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return CanonicalParams(*(factor * x for x in self.as_tuple()))


@dataclass(frozen=True)
class GaugeTransform:
    """Diagonal local phases and per-vector phases, all in (-pi, pi].

    alpha[k] rotates basis vector k of the first subsystem, beta[mu] of
    the second; gamma[j] is the overall phase applied to vector j.
    """

    alpha: tuple
    beta: tuple
    gamma: tuple

    def local_unitary(self):
        """9x9 matrix of U_A x U_B in the package's state layout."""
        phases = np.array([self.alpha[i % 3] + self.beta[i // 3] for i in range(9)])
        return np.diag(np.exp(1j * phases))


@dataclass(frozen=True)
class StateMatrix:
    """A constructed family member: 9x9 density matrix plus provenance."""

    rho: np.ndarray
    norm_constant: float
    params: object  # CanonicalParams or RawParams


def build_vectors(params):
    """The four unnormalized vectors as rows of a 4x9 complex array."""
    a, b, c, d, m, n, s, t = (complex(x) for x in params.as_tuple())
    v = np.zeros((4, 9), dtype=complex)
    v[0, 0] = m
    v[0, 2] = s
    v[0, 4] = n
    v[1, 1] = a
    v[1, 3] = b
    v[1, 5] = c
    v[2, 0] = n.conjugate()
    v[2, 4] = -m.conjugate()
    v[2, 6] = t
    v[3, 1] = b.conjugate()
    v[3, 3] = -a.conjugate()
    v[3, 7] = d
    return v


def build_rho(params):
    """Assemble the normalized density matrix from the four vectors.

    Raises ``ValueError`` when all parameters vanish (the normalization
    is undefined).
    """
    vectors = build_vectors(params)
    total = float(np.sum(np.abs(vectors) ** 2))
    if total == 0.0:
        raise ValueError("all parameters are zero: normalization undefined")
    rho = np.zeros((9, 9), dtype=complex)
    for vec in vectors:
        rho += np.outer(vec, vec.conj())
    rho /= total
    return StateMatrix(rho=rho, norm_constant=1.0 / total, params=params)


def family_a(a, b, c, d, m, n):
    """The sigma == rho sub-family: s = a*c/n and t = a*d/m, both real."""
    _check_family_magnitudes(a, b, c, d, m, n)
    return CanonicalParams(a, b, c, d, m, n, s=complex(a * c / n), t=complex(a * d / m))


def family_b(a, b, c, d, m, n, phi_s, phi_t):
    """Moduli-constrained sub-family: |s| = a*c/n, |t| = a*d/m, free phases.

    Zero phases reduce exactly to :func:`family_a`.  Note that the
    partial transpose of a member is positive semidefinite only on the
    discrete phase set phi_s = phi_t in {0, pi}; see the package
    documentation and the certification criteria, which measure this.
    """
    _check_family_magnitudes(a, b, c, d, m, n)
    s = (a * c / n) * cmath.exp(1j * phi_s)
    t = (a * d / m) * cmath.exp(1j * phi_t)
    return CanonicalParams(a, b, c, d, m, n, s=s, t=t)


def _check_family_magnitudes(a, b, c, d, m, n):
    for name, value in zip(("a", "b", "c", "d", "m", "n"), (a, b, c, d, m, n)):
        if value < 0:
            raise ValueError(f"family parameter {name} must be positive, got {value}")
    if m == 0 or n == 0:
        raise ValueError("m and n must be nonzero (s = a*c/n, t = a*d/m)")


def invariant_ratios(params):
    """The two gauge-invariant combinations (c*m/(b*s), conj(b)*t/(conj(n)*d)).

    Raises ``ValueError`` when a denominator parameter (b, s, n or d) has
    magnitude below the generic threshold.
    """
    a, b, c, d, m, n, s, t = (complex(x) for x in params.as_tuple())
    for name, value in (("b", b), ("s", s), ("n", n), ("d", d)):
        if abs(value) < GENERIC_PARAM_TOL:
            raise ValueError(f"invariant undefined: parameter {name} is (near) zero")
    first = c * m / (b * s)
    second = b.conjugate() * t / (n.conjugate() * d)
    return first, second


class DegenerateGaugeError(ValueError):
    """Canonical gauge is not unique because a parameter (nearly) vanishes."""


def _wrap_phase(x):
    """Map a phase to the interval (-pi, pi]."""
    r = math.remainder(x, 2.0 * math.pi)
    if r <= -math.pi:
        r += 2.0 * math.pi
    return r


# Linear phase system for gauge fixing.  Unknowns, in this order:
#   g1, g2, g3, g4  - per-vector phases
#   A2, A3          - first-subsystem basis phases (index 1 and 2; index 0 fixed to 0)
#   B2, B3          - second-subsystem basis phases (index 1 and 2; index 0 fixed to 0)
# Rows 1-6 make the transformed m, n, a, b, c, d real nonnegative; the
# last two rows tie g3 and g4 so that V3 and V4 keep their conjugate
# structure relative to V1 and V2.
_PHASE_SYSTEM = np.array(
    [
        # g1 g2 g3 g4 A2 A3 B2 B3
        [1, 0, 0, 0, 0, 0, 0, 0],  # phase shift of m
        [1, 0, 0, 0, 1, 0, 1, 0],  # phase shift of n
        [0, 1, 0, 0, 1, 0, 0, 0],  # phase shift of a
        [0, 1, 0, 0, 0, 0, 1, 0],  # phase shift of b
        [0, 1, 0, 0, 0, 1, 1, 0],  # phase shift of c
        [0, 0, 0, 1, 1, 0, 0, 1],  # phase shift of d
        [1, 0, 1, 0, 1, 0, 1, 0],  # structure tie for V3
        [0, 1, 0, 1, 1, 0, 1, 0],  # structure tie for V4
    ],
    dtype=float,
)


def canonicalize(raw):
    """Gauge-fix raw parameters; returns (CanonicalParams, GaugeTransform).

    Solves the linear phase system above so that a, b, c, d, m, n become
    their magnitudes and all residual phase moves onto s and t.  The two
    invariant ratios and all component magnitudes are unchanged, and
    rebuilding from the canonical parameters reproduces
    (U_A x U_B) rho_raw (U_A x U_B)^dagger for the returned transform.

    Raises :class:`DegenerateGaugeError` when any of the six gauge-fixed
    magnitudes is below the generic threshold (the canonical form is
    then not unique).
    """
    a, b, c, d, m, n, s, t = (complex(x) for x in raw.as_tuple())
    for name, value in zip(("a", "b", "c", "d", "m", "n"), (a, b, c, d, m, n)):
        if abs(value) < GENERIC_PARAM_TOL:
            raise DegenerateGaugeError(
                f"parameter {name} has magnitude {abs(value):.3e}; canonical gauge not unique"
            )
    rhs = np.array(
        [
            -cmath.phase(m),
            -cmath.phase(n),
            -cmath.phase(a),
            -cmath.phase(b),
            -cmath.phase(c),
            -cmath.phase(d),
            0.0,
            0.0,
        ]
    )
    g1, g2, g3, g4, a2, a3, b2, b3 = np.linalg.solve(_PHASE_SYSTEM, rhs)
    canonical = CanonicalParams(
        a=abs(a),
        b=abs(b),
        c=abs(c),
        d=abs(d),
        m=abs(m),
        n=abs(n),
        s=s * cmath.exp(1j * (g1 + a3)),
        t=t * cmath.exp(1j * (g3 + b3)),
    )
    transform = GaugeTransform(
        alpha=(0.0, _wrap_phase(a2), _wrap_phase(a3)),
        beta=(0.0, _wrap_phase(b2), _wrap_phase(b3)),
        gamma=tuple(_wrap_phase(g) for g in (g1, g2, g3, g4)),
    )
    return canonical, transform


def apply_gauge(params, transform):
    """Transform a state by local phases: rho -> W rho W^dagger.

    Convenience wrapper used by tests and the gauge suite; W is the
    9x9 matrix of ``transform.local_unitary()``.
    """
    state = build_rho(params)
    w = transform.local_unitary()
    return w @ state.rho @ w.conj().T


def is_chessboard(rho, *, atol=0.0):
    """True when all cross-parity entries and the 9th row/column vanish.

    With the default ``atol=0`` the zeros must be exact, which holds for
    every matrix produced by :func:`build_rho`.
    """
    rho = np.asarray(rho)
    for i in range(9):
        for j in range(9):
            if (i - j) % 2 == 1 and abs(rho[i, j]) > atol:
                return False
    if np.any(np.abs(rho[8, :]) > atol) or np.any(np.abs(rho[:, 8]) > atol):
        return False
    return True
