"""Seeded parameter sampling shared by the CLI and the test suites.

Magnitudes are log-uniform on [0.1, 10] (spanning two decades without
degenerate near-zeros), phases uniform on (-pi, pi].  Each sample is
derived from (master seed, index) through ``numpy.random.SeedSequence``
so that row order and content never depend on how work is partitioned.
"""

import math

import numpy as np

from .chessboard import CanonicalParams, RawParams, family_a, family_b

MAGNITUDE_LOW = 0.1
MAGNITUDE_HIGH = 10.0


def seed_sequence_for(master_seed, index=None):
    if index is None:
        return np.random.SeedSequence(entropy=master_seed)
    return np.random.SeedSequence(entropy=master_seed, spawn_key=(index,))


def rng_for(master_seed, index=None):
    """Deterministic generator for one (master seed, index) pair."""
    return np.random.default_rng(seed_sequence_for(master_seed, index))


def child_seed(master_seed, index):
    """Reportable integer identifying the sample's seed material."""
    return int(seed_sequence_for(master_seed, index).generate_state(1)[0])


def search_seed(master_seed, index):
    """Seed for the product search of sample ``index``, distinct from the
    parameter-draw stream."""
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(index, 1))
    return int(ss.generate_state(1)[0])


def draw_magnitudes(rng, count):
    lo, hi = math.log(MAGNITUDE_LOW), math.log(MAGNITUDE_HIGH)
    return np.exp(rng.uniform(lo, hi, count))


def draw_phases(rng, count):
    # Negating a draw from [-pi, pi) lands on (-pi, pi].
    return -rng.uniform(-math.pi, math.pi, count)


def draw_family_a(rng):
    mags = draw_magnitudes(rng, 6)
    return family_a(*mags)


def draw_family_b(rng):
    mags = draw_magnitudes(rng, 6)
    phases = draw_phases(rng, 2)
    return family_b(*mags, phases[0], phases[1])


def draw_raw(rng):
    mags = draw_magnitudes(rng, 8)
    phases = draw_phases(rng, 8)
    values = mags * np.exp(1j * phases)
    return RawParams(*values)


def draw_family_b_scaled_s(rng, factor):
    """Family-B draw with |s| multiplied by ``factor`` (constraint broken)."""
    params = draw_family_b(rng)
    return CanonicalParams(
        a=params.a, b=params.b, c=params.c, d=params.d,
        m=params.m, n=params.n, s=factor * params.s, t=params.t,
    )


DRAWERS = {
    "a": draw_family_a,
    "b": draw_family_b,
    "raw": draw_raw,
}
