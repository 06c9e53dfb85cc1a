"""Seeded random generators for specs, states, and phase points.

Used by the verification command and the test suite; everything takes an
explicit :class:`numpy.random.Generator` so runs are reproducible.
"""

from __future__ import annotations

import math

import numpy as np

from .kernel import PhasePoint, PhasePoint4
from .states import (
    BlochDensity,
    GeneralState,
    QubitSpec,
    TwoQubitSpec,
)


def random_qubit_spec(rng, max_mode: int = 8, with_delta: bool = True) -> QubitSpec:
    m0, m1 = rng.choice(np.arange(-max_mode, max_mode + 1), size=2, replace=False)
    return QubitSpec(
        int(m0),
        int(m1),
        alpha=float(rng.uniform(0.0, 2.0 * math.pi)),
        beta=float(rng.uniform(0.0, math.pi / 2)),
        delta=float(rng.uniform(0.0, 1.0)) if with_delta else 0.0,
    )


def random_two_qubit_spec(rng, max_mode: int = 8,
                          with_delta: bool = True) -> TwoQubitSpec:
    m0, m1 = rng.choice(np.arange(-max_mode, max_mode + 1), size=2, replace=False)
    n0, n1 = rng.choice(np.arange(-max_mode, max_mode + 1), size=2, replace=False)
    return TwoQubitSpec(
        int(m0), int(m1), int(n0), int(n1),
        beta=float(rng.uniform(0.0, math.pi)),
        gamma=float(rng.uniform(0.0, math.pi)),
        phi=float(rng.uniform(0.0, 2.0 * math.pi)),
        alpha10=float(rng.uniform(0.0, 2.0 * math.pi)),
        alpha01=float(rng.uniform(0.0, 2.0 * math.pi)),
        alpha11=float(rng.uniform(0.0, 2.0 * math.pi)),
        delta1=float(rng.uniform(0.0, 1.0)) if with_delta else 0.0,
        delta2=float(rng.uniform(0.0, 1.0)) if with_delta else 0.0,
    )


def random_qudit_state(rng, max_support: int = 7, max_mode: int = 8,
                       with_delta: bool = True) -> GeneralState:
    size = int(rng.integers(1, max_support + 1))
    modes = rng.choice(np.arange(-max_mode, max_mode + 1), size=size, replace=False)
    amps = rng.normal(size=size) + 1j * rng.normal(size=size)
    coeffs = {int(m): complex(c) for m, c in zip(modes, amps)}
    delta = float(rng.uniform(0.0, 1.0)) if with_delta else 0.0
    return GeneralState.normalized(coeffs, delta)


def random_bloch_density(rng, m0: int = 1, m1: int = 0, pure: bool = False,
                         delta: float = 0.0) -> BlochDensity:
    """Bloch vector uniform in the ball (or on the sphere when pure)."""
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    radius = 1.0 if pure else float(rng.uniform(0.0, 1.0) ** (1.0 / 3.0))
    return BlochDensity(m0, m1, tuple(radius * direction), delta)


def random_phase_point(rng, p_span: float = 10.5) -> PhasePoint:
    return PhasePoint(
        float(rng.uniform(-math.pi, math.pi)), float(rng.uniform(-p_span, p_span))
    )


def random_phase_point4(rng, p_span: float = 10.5) -> PhasePoint4:
    return PhasePoint4(
        float(rng.uniform(-math.pi, math.pi)),
        float(rng.uniform(-math.pi, math.pi)),
        float(rng.uniform(-p_span, p_span)),
        float(rng.uniform(-p_span, p_span)),
    )
