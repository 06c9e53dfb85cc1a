"""Phase-space points, the momentum kernel, and exact bilinear evaluation.

The quasiprobability density of a finite superposition over angular-momentum
modes is a sparse bilinear form,

    V(theta, p) = sum_{a,b} conj(c_a) c_b K_ab(theta, p),

with matrix elements

    K_ab(theta, p) = (1/2pi) exp(i (m_b - m_a) theta)
                     sinc_pi[(p - delta) - (m_a + m_b)/2].

``K`` is Hermitian in (a, b) at every point, so exact arithmetic gives a
real result; floating point leaves an imaginary residue that is checked
against a hard bound.  Momentum always enters through ``p - delta``, so a
fractional-offset state evaluated at ``p`` matches the integer-offset state
evaluated at ``p - delta`` bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels as _k
from .errors import NonNormalizedState, NumericalHermiticityViolation

TWO_PI = 2.0 * math.pi

#: Allowed deviation of sum |c|^2 from one.
NORMALIZATION_TOL = 1e-12
#: Hard bound on the imaginary residue of a bilinear value.
HERMITICITY_TOL = 1e-10


def reduce_angle(theta: float) -> float:
    """Map an angle to the canonical window [-pi, pi).

    Angles already inside the window pass through unchanged (exact), so
    grid coordinates are never perturbed.
    """
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite, got {theta!r}")
    reduced = theta - TWO_PI * math.floor((theta + math.pi) / TWO_PI)
    if reduced >= math.pi:  # rounding edge just below +pi
        reduced -= TWO_PI
    return reduced


def _finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PhasePoint:
    """A point (theta, p) on the cylinder phase space S^1 x R."""

    theta: float
    p: float

    def __post_init__(self):
        object.__setattr__(self, "theta", reduce_angle(self.theta))
        object.__setattr__(self, "p", _finite(self.p, "p"))


@dataclass(frozen=True)
class PhasePoint4:
    """A point (theta1, theta2, p1, p2) on the torus phase space."""

    theta1: float
    theta2: float
    p1: float
    p2: float

    def __post_init__(self):
        object.__setattr__(self, "theta1", reduce_angle(self.theta1))
        object.__setattr__(self, "theta2", reduce_angle(self.theta2))
        object.__setattr__(self, "p1", _finite(self.p1, "p1"))
        object.__setattr__(self, "p2", _finite(self.p2, "p2"))


@dataclass(frozen=True)
class KernelElement:
    """One matrix element of the phase-space kernel; |value| <= 1/(2 pi)."""

    value: complex


def sinc_pi(x: float) -> float:
    """sin(pi x)/(pi x) with the removable singularity filled by its limit.

    Exact at integers: 1 at x = 0 and 0 elsewhere, which keeps the
    band-limited interpolation identities exact in floating point.
    """
    return _k.sinc_pi(float(x))


def _check_delta(delta: float, name: str = "delta") -> float:
    delta = float(delta)
    if not (0.0 <= delta < 1.0):
        raise ValueError(f"{name} must lie in [0, 1), got {delta!r}")
    return delta


def kernel_element(m: int, n: int, delta: float, point: PhasePoint) -> KernelElement:
    """Kernel matrix element between modes m and n at a phase point.

    Returns ``(1/2pi) exp(i (n - m) theta) sinc_pi[(p - delta) - (m + n)/2]``
    wrapped in :class:`KernelElement`.
    """
    delta = _check_delta(delta)
    arg = (point.p - delta) - 0.5 * (m + n)
    phase = (n - m) * point.theta
    radial = _k.sinc_pi(arg) / TWO_PI
    return KernelElement(complex(radial * math.cos(phase), radial * math.sin(phase)))


def _require_normalized(state) -> None:
    norm_sq = float(np.sum(np.abs(state.amplitudes) ** 2))
    if abs(norm_sq - 1.0) > NORMALIZATION_TOL:
        raise NonNormalizedState(
            f"sum |c|^2 = {norm_sq!r} deviates from 1 beyond {NORMALIZATION_TOL}"
        )


def _check_residue(residue: float) -> None:
    if residue > HERMITICITY_TOL:
        raise NumericalHermiticityViolation(
            f"imaginary residue {residue:.3e} exceeds {HERMITICITY_TOL:.0e}"
        )


def evaluate_bilinear_1d(state, theta, p) -> np.ndarray:
    """Bilinear quasiprobability values over broadcastable coordinate arrays.

    ``state`` must expose ``modes``, ``amplitudes`` and ``delta`` (see
    :class:`cylwigner.states.GeneralState`).
    """
    _require_normalized(state)
    theta_b, p_b = np.broadcast_arrays(
        np.asarray(theta, dtype=np.float64), np.asarray(p, dtype=np.float64)
    )
    values, residue = _k.bilinear_1d(
        state.modes, state.amplitudes, state.delta,
        np.ascontiguousarray(theta_b).ravel(), np.ascontiguousarray(p_b).ravel(),
    )
    _check_residue(residue)
    return np.asarray(values).reshape(theta_b.shape)


def evaluate_bilinear_2d(state, theta1, theta2, p1, p2) -> np.ndarray:
    """Torus analogue of :func:`evaluate_bilinear_1d`."""
    _require_normalized(state)
    broadcast = np.broadcast_arrays(
        np.asarray(theta1, dtype=np.float64),
        np.asarray(theta2, dtype=np.float64),
        np.asarray(p1, dtype=np.float64),
        np.asarray(p2, dtype=np.float64),
    )
    flat = [np.ascontiguousarray(arr).ravel() for arr in broadcast]
    values, residue = _k.bilinear_2d(
        state.modes1, state.modes2, state.amplitudes,
        state.delta1, state.delta2, *flat,
    )
    _check_residue(residue)
    return np.asarray(values).reshape(broadcast[0].shape)


def wigner_bilinear_1d(state, point: PhasePoint) -> float:
    """Quasiprobability density of a one-mode-axis state at one point."""
    return float(evaluate_bilinear_1d(state, point.theta, point.p))


def wigner_bilinear_2d(state, point: PhasePoint4) -> float:
    """Quasiprobability density of a two-mode-axis state at one point."""
    return float(
        evaluate_bilinear_2d(state, point.theta1, point.theta2, point.p1, point.p2)
    )
