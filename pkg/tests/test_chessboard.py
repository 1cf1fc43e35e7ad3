import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chessboard_states import (
    CanonicalParams,
    DegenerateGaugeError,
    RawParams,
    build_rho,
    build_vectors,
    canonicalize,
    family_a,
    family_b,
    hermitian_eigen,
    invariant_ratios,
    is_chessboard,
)
from chessboard_states.sampling import draw_family_a, draw_family_b, draw_raw, rng_for

PARAM_123 = CanonicalParams(1, 2, 3, 1, 1, 1, 3.0, 1.0)


def complex_params(draw_seed):
    rng = np.random.default_rng(draw_seed)
    mags = np.exp(rng.uniform(math.log(0.1), math.log(10), 8))
    phases = rng.uniform(-math.pi, math.pi, 8)
    return RawParams(*(mags * np.exp(1j * phases)))


class TestVectors:
    def test_all_ones_v1(self):
        v = build_vectors(CanonicalParams(1, 1, 1, 1, 1, 1, 1.0, 1.0))
        assert np.array_equal(v[0], np.array([1, 0, 1, 0, 1, 0, 0, 0, 0], complex))

    def test_direct_substitution(self):
        v = build_vectors(PARAM_123)
        assert np.array_equal(v[1], np.array([0, 1, 0, 2, 0, 3, 0, 0, 0], complex))
        assert np.array_equal(v[3], np.array([0, 2, 0, -1, 0, 0, 0, 1, 0], complex))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_pairwise_orthogonality(self, seed):
        v = build_vectors(complex_params(seed))
        norms = np.linalg.norm(v, axis=1)
        for i in range(4):
            for j in range(i + 1, 4):
                assert abs(np.vdot(v[i], v[j])) <= 1e-12 * norms[i] * norms[j]


class TestBuildRho:
    def test_structure(self):
        rng = rng_for(2024)
        for draw in (draw_family_a, draw_family_b, draw_raw):
            state = build_rho(draw(rng))
            assert abs(np.trace(state.rho).real - 1.0) <= 1e-12
            assert np.max(np.abs(state.rho - state.rho.conj().T)) <= 1e-12
            assert is_chessboard(state.rho)

    def test_nonzero_spectrum_is_vector_norms(self):
        rng = rng_for(77)
        for _ in range(25):
            params = draw_raw(rng)
            vectors = build_vectors(params)
            state = build_rho(params)
            expected = np.sort(np.sum(np.abs(vectors) ** 2, axis=1))[::-1]
            expected = expected * state.norm_constant
            values = hermitian_eigen(state.rho).eigenvalues
            assert np.max(np.abs(values[:4] - expected)) <= 1e-10
            assert np.max(np.abs(values[4:])) <= 1e-12

    def test_all_ones_spectrum(self):
        state = build_rho(CanonicalParams(1, 1, 1, 1, 1, 1, 1.0, 1.0))
        values = hermitian_eigen(state.rho).eigenvalues
        assert np.max(np.abs(values[:4] - 0.25)) <= 1e-12

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            build_rho(RawParams(0, 0, 0, 0, 0, 0, 0, 0))

    def test_scaling_leaves_state_unchanged(self):
        params = PARAM_123
        rho = build_rho(params).rho
        rho_scaled = build_rho(params.scaled(3.7)).rho
        assert np.max(np.abs(rho - rho_scaled)) <= 1e-12


class TestFamilies:
    def test_family_a_closed_form(self):
        p = family_a(1, 2, 3, 1, 1, 1)
        assert p.s == 3.0 and p.t == 1.0

    def test_family_a_all_ones(self):
        p = family_a(1, 1, 1, 1, 1, 1)
        assert p.s == 1.0 and p.t == 1.0

    def test_family_a_rejects_zero_m(self):
        with pytest.raises(ValueError):
            family_a(1, 2, 3, 1, 0, 1)

    def test_family_b_zero_phases_reduce_to_a(self):
        assert family_b(1, 2, 3, 1, 1, 1, 0.0, 0.0) == family_a(1, 2, 3, 1, 1, 1)

    def test_family_b_moduli(self):
        p = family_b(1, 2, 3, 1, 1, 1, math.pi / 2, 0.7)
        assert abs(abs(p.s) - 3.0) <= 1e-12
        assert abs(abs(p.t) - 1.0) <= 1e-12
        assert abs(cmath.phase(p.s) - math.pi / 2) <= 1e-12
        assert abs(cmath.phase(p.t) - 0.7) <= 1e-12


class TestInvariantRatios:
    def test_reference_point(self):
        first, second = invariant_ratios(RawParams(1, 2, 3, 1, 1, 1, 3, 1))
        assert first == pytest.approx(0.5, abs=1e-15)
        assert second == pytest.approx(2.0, abs=1e-15)

    def test_all_ones(self):
        assert invariant_ratios(CanonicalParams(1, 1, 1, 1, 1, 1, 1.0, 1.0)) \
            == (1.0, 1.0)

    def test_zero_denominator(self):
        with pytest.raises(ValueError):
            invariant_ratios(RawParams(1, 0, 3, 1, 1, 1, 3, 1))


class TestCanonicalize:
    def test_identity_on_canonical(self):
        canonical, transform = canonicalize(RawParams(*PARAM_123.as_tuple()))
        assert canonical == PARAM_123
        assert all(x == 0.0 for x in transform.alpha + transform.beta + transform.gamma)

    def test_vector_phase_absorbed(self):
        # Rotating the first vector pair, V1 -> e^{i theta} V1 and
        # V3 -> e^{-i theta} V3, multiplies (m, n, s) by e^{i theta} and
        # t by e^{-i theta} without changing the state at all.
        theta = 0.9
        ph = cmath.exp(1j * theta)
        raw = RawParams(1, 2, 3, 1, 1 * ph, 1 * ph, 3 * ph, 1 / ph)
        canonical, transform = canonicalize(raw)
        assert canonical.m == pytest.approx(1.0)
        assert canonical.s == pytest.approx(3.0, abs=1e-12)
        assert canonical.t == pytest.approx(1.0, abs=1e-12)
        assert transform.gamma[0] == pytest.approx(-theta)
        assert np.max(np.abs(build_rho(canonical).rho - build_rho(raw).rho)) <= 1e-12

    def test_v1_phase_with_t_fixed_moves_phase_onto_t(self):
        # Multiplying only (m, n, s) by a phase changes V3 as well, so the
        # second invariant rotates and the canonical t keeps that phase.
        theta = 0.9
        ph = cmath.exp(1j * theta)
        raw = RawParams(1, 2, 3, 1, ph, ph, 3 * ph, 1.0)
        canonical, transform = canonicalize(raw)
        assert transform.gamma[0] == pytest.approx(-theta)
        assert canonical.t == pytest.approx(cmath.exp(1j * theta), abs=1e-12)
        w = transform.local_unitary()
        rebuilt = w @ build_rho(raw).rho @ w.conj().T
        assert np.max(np.abs(build_rho(canonical).rho - rebuilt)) <= 1e-12

    def test_random_raw_params(self):
        rng = rng_for(31337)
        for _ in range(60):
            raw = draw_raw(rng)
            canonical, transform = canonicalize(raw)
            assert min(canonical.a, canonical.b, canonical.c, canonical.d,
                       canonical.m, canonical.n) >= 0.0
            inv_raw = invariant_ratios(raw)
            inv_can = invariant_ratios(canonical)
            for x, y in zip(inv_raw, inv_can):
                assert abs(x - y) <= 1e-10 * abs(x)
            w = transform.local_unitary()
            rebuilt = w @ build_rho(raw).rho @ w.conj().T
            assert np.max(np.abs(build_rho(canonical).rho - rebuilt)) <= 1e-12
            for phase in transform.alpha + transform.beta + transform.gamma:
                assert -math.pi < phase <= math.pi
            # vectors map with the reported per-vector phases
            vr = build_vectors(raw)
            vc = build_vectors(canonical)
            for j in range(4):
                mapped = cmath.exp(1j * transform.gamma[j]) * (w @ vr[j])
                assert np.max(np.abs(vc[j] - mapped)) <= 1e-12 * max(
                    1.0, float(np.linalg.norm(vr[j])))

    def test_idempotent(self):
        raw = draw_raw(rng_for(5))
        canonical, _ = canonicalize(raw)
        again, transform = canonicalize(RawParams(*canonical.as_tuple()))
        assert all(abs(x) <= 1e-12 for x in
                   transform.alpha + transform.beta + transform.gamma)
        assert np.max(np.abs(np.array(again.as_tuple())
                             - np.array(canonical.as_tuple()))) <= 1e-12

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateGaugeError):
            canonicalize(RawParams(1e-13, 2, 3, 1, 1, 1, 3, 1))
