"""Closed-form quasiprobability densities for parametrized states.

Every function here is an explicit formula in sinc and cosine factors; the
bilinear kernel sum of :mod:`cylwigner.kernel` is the ground truth each one
is tested against.  Momentum arguments are always formed as
``(p - delta) - center`` so fractional offsets shift the profiles without
touching the angular interference factors.

The ``*_arrays`` variants broadcast over coordinate arrays; the scalar
operations take a :class:`~cylwigner.kernel.PhasePoint` /
:class:`~cylwigner.kernel.PhasePoint4`.
"""

from __future__ import annotations

import math

import numpy as np

from ._backend import kernels as _k
from .errors import DegenerateModes, InvalidBlochVector
from .kernel import PhasePoint, PhasePoint4
from .states import BellSpec, BlochDensity, QubitSpec, TwoQubitSpec

TWO_PI = 2.0 * math.pi
FOUR_PI_SQ = TWO_PI * TWO_PI


def qubit_wigner_arrays(spec: QubitSpec, theta, p) -> np.ndarray:
    """Qubit density over broadcastable (theta, p) arrays.

    2 pi V = cos^2(beta) sinc_pi(q - m0) + sin^2(beta) sinc_pi(q - m1)
             + sin(2 beta) cos[(m0 - m1) theta - alpha]
               sinc_pi(q - (m0 + m1)/2),      q = p - delta.
    """
    s = _k.sinc_pi_array
    theta = np.asarray(theta, dtype=np.float64)
    q = np.asarray(p, dtype=np.float64) - spec.delta
    cos_b = math.cos(spec.beta)
    sin_b = math.sin(spec.beta)
    mid = 0.5 * (spec.m0 + spec.m1)
    value = (
        cos_b * cos_b * s(q - spec.m0)
        + sin_b * sin_b * s(q - spec.m1)
        + math.sin(2.0 * spec.beta)
        * np.cos((spec.m0 - spec.m1) * theta - spec.alpha)
        * s(q - mid)
    )
    return value / TWO_PI


def qubit_wigner(spec: QubitSpec, point: PhasePoint) -> float:
    """Qubit density at one phase point."""
    return float(qubit_wigner_arrays(spec, point.theta, point.p))


def density_wigner_arrays(rho: BlochDensity, theta, p) -> np.ndarray:
    """Density-matrix (Bloch vector) version of :func:`qubit_wigner_arrays`.

    2 pi V = (1 + a3)/2 sinc_pi(q - m0) + (1 - a3)/2 sinc_pi(q - m1)
             + [a1 cos((m0 - m1) theta) + a2 sin((m0 - m1) theta)]
               sinc_pi(q - (m0 + m1)/2).
    """
    a1, a2, a3 = rho.a
    if math.sqrt(a1 * a1 + a2 * a2 + a3 * a3) > 1.0 + 1e-12:
        raise InvalidBlochVector("|a| > 1")
    s = _k.sinc_pi_array
    theta = np.asarray(theta, dtype=np.float64)
    q = np.asarray(p, dtype=np.float64) - rho.delta
    gap_angle = (rho.m0 - rho.m1) * theta
    mid = 0.5 * (rho.m0 + rho.m1)
    value = (
        0.5 * (1.0 + a3) * s(q - rho.m0)
        + 0.5 * (1.0 - a3) * s(q - rho.m1)
        + (a1 * np.cos(gap_angle) + a2 * np.sin(gap_angle)) * s(q - mid)
    )
    return value / TWO_PI


def density_wigner(rho: BlochDensity, point: PhasePoint) -> float:
    """Density-matrix quasiprobability at one phase point."""
    return float(density_wigner_arrays(rho, point.theta, point.p))


def two_qubit_wigner_arrays(spec: TwoQubitSpec, theta1, theta2, p1, p2) -> np.ndarray:
    """General 2-qubit density: four direct terms plus six interference terms.

    Each interference term carries a cosine in the angle gaps with the
    appropriate phase differences, times sinc factors centered between the
    participating modes.  Fractional offsets shift only the momentum
    arguments (q1 = p1 - delta1, q2 = p2 - delta2).
    """
    s = _k.sinc_pi_array
    t1 = np.asarray(theta1, dtype=np.float64)
    t2 = np.asarray(theta2, dtype=np.float64)
    q1 = np.asarray(p1, dtype=np.float64) - spec.delta1
    q2 = np.asarray(p2, dtype=np.float64) - spec.delta2

    b00, b10, b01, b11 = spec.amplitudes4
    a10, a01, a11 = spec.alpha10, spec.alpha01, spec.alpha11
    dm = spec.m1 - spec.m0
    dn = spec.n1 - spec.n0
    m_mid = 0.5 * (spec.m0 + spec.m1)
    n_mid = 0.5 * (spec.n0 + spec.n1)

    s_m0 = s(q1 - spec.m0)
    s_m1 = s(q1 - spec.m1)
    s_mm = s(q1 - m_mid)
    s_n0 = s(q2 - spec.n0)
    s_n1 = s(q2 - spec.n1)
    s_nm = s(q2 - n_mid)

    value = (
        b00 * b00 * s_m0 * s_n0
        + b10 * b10 * s_m1 * s_n0
        + b01 * b01 * s_m0 * s_n1
        + b11 * b11 * s_m1 * s_n1
        + 2.0 * b00 * b10 * np.cos(dm * t1 + a10) * s_mm * s_n0
        + 2.0 * b00 * b01 * np.cos(dn * t2 + a01) * s_m0 * s_nm
        + 2.0 * b00 * b11 * np.cos(dm * t1 + dn * t2 + a11) * s_mm * s_nm
        + 2.0 * b01 * b10 * np.cos(dm * t1 - dn * t2 + a10 - a01) * s_mm * s_nm
        + 2.0 * b01 * b11 * np.cos(dm * t1 + a11 - a01) * s_mm * s_n1
        + 2.0 * b10 * b11 * np.cos(dn * t2 + a11 - a10) * s_m1 * s_nm
    )
    return value / FOUR_PI_SQ


def two_qubit_wigner(spec: TwoQubitSpec, point: PhasePoint4) -> float:
    """General 2-qubit density at one torus phase point."""
    return float(
        two_qubit_wigner_arrays(spec, point.theta1, point.theta2, point.p1, point.p2)
    )


def bell_wigner_arrays(kind: str, m0: int, theta1, theta2, p1, p2) -> np.ndarray:
    """Density of one of the four entangled basis states on modes (m0, -m0).

    phi family: (1/2)[s(p1-m0)s(p2-m0) + s(p1+m0)s(p2+m0)]
                +/- cos[2 m0 (theta1 + theta2)] s(p1) s(p2);
    psi family: same with the momentum branches crossed and the angle sum
                replaced by the difference.
    """
    spec = BellSpec(kind, int(m0))
    s = _k.sinc_pi_array
    t1 = np.asarray(theta1, dtype=np.float64)
    t2 = np.asarray(theta2, dtype=np.float64)
    q1 = np.asarray(p1, dtype=np.float64)
    q2 = np.asarray(p2, dtype=np.float64)
    sign = 1.0 if spec.kind.endswith("+") else -1.0
    m = spec.m0
    if spec.kind.startswith("phi"):
        direct = 0.5 * (s(q1 - m) * s(q2 - m) + s(q1 + m) * s(q2 + m))
        cross = np.cos(2.0 * m * (t1 + t2))
    else:
        direct = 0.5 * (s(q1 - m) * s(q2 + m) + s(q1 + m) * s(q2 - m))
        cross = np.cos(2.0 * m * (t1 - t2))
    return (direct + sign * cross * s(q1) * s(q2)) / FOUR_PI_SQ


def bell_wigner(kind: str, m0: int, point: PhasePoint4) -> float:
    """Entangled-basis-state density at one torus phase point."""
    return float(
        bell_wigner_arrays(kind, m0, point.theta1, point.theta2, point.p1, point.p2)
    )


def bell_family_wigner_arrays(
    family: str, mixing: float, phase: float, modes, theta1, theta2, p1, p2,
    deltas=(0.0, 0.0),
) -> np.ndarray:
    """Two-branch entangled superposition density.

    family '00-11' mixes (m0, n0) with (m1, n1); its interference argument
    is ``vartheta_plus = dm theta1 + dn theta2 + phase``.  family '10-01'
    mixes (m1, n0) with (m0, n1); its argument is
    ``vartheta_minus = dm theta1 - dn theta2 - phase``.
    """
    m0, m1, n0, n1 = (int(m) for m in modes)
    if m0 == m1 or n0 == n1:
        raise DegenerateModes("both mode gaps must be nonzero")
    s = _k.sinc_pi_array
    d1, d2 = (float(d) for d in deltas)
    t1 = np.asarray(theta1, dtype=np.float64)
    t2 = np.asarray(theta2, dtype=np.float64)
    q1 = np.asarray(p1, dtype=np.float64) - d1
    q2 = np.asarray(p2, dtype=np.float64) - d2
    dm = m1 - m0
    dn = n1 - n0
    cos_mix = math.cos(mixing)
    sin_mix = math.sin(mixing)
    s_mid = s(q1 - 0.5 * (m0 + m1)) * s(q2 - 0.5 * (n0 + n1))
    if family == "00-11":
        direct = (cos_mix ** 2 * s(q1 - m0) * s(q2 - n0)
                  + sin_mix ** 2 * s(q1 - m1) * s(q2 - n1))
        argument = dm * t1 + dn * t2 + phase
    elif family == "10-01":
        direct = (cos_mix ** 2 * s(q1 - m1) * s(q2 - n0)
                  + sin_mix ** 2 * s(q1 - m0) * s(q2 - n1))
        argument = dm * t1 - dn * t2 - phase
    else:
        raise ValueError(f"family must be '00-11' or '10-01', got {family!r}")
    value = direct + math.sin(2.0 * mixing) * np.cos(argument) * s_mid
    return value / FOUR_PI_SQ


def bell_family_wigner(
    family: str, mixing: float, phase: float, modes, point: PhasePoint4,
    deltas=(0.0, 0.0),
) -> float:
    """Two-branch entangled superposition density at one point."""
    return float(
        bell_family_wigner_arrays(
            family, mixing, phase, modes,
            point.theta1, point.theta2, point.p1, point.p2, deltas,
        )
    )


# ---------------------------------------------------------------------------
# interference geometry on the configuration torus


def interference_argument(spec: TwoQubitSpec, theta1, theta2):
    """Forward map to the two interference arguments.

    vartheta_plus  = dm theta1 + dn theta2 + alpha11
    vartheta_minus = dm theta1 - dn theta2 - alpha01
    """
    dm = spec.m1 - spec.m0
    dn = spec.n1 - spec.n0
    t1 = np.asarray(theta1, dtype=np.float64)
    t2 = np.asarray(theta2, dtype=np.float64)
    plus = dm * t1 + dn * t2 + spec.alpha11
    minus = dm * t1 - dn * t2 - spec.alpha01
    if plus.ndim == 0:
        return float(plus), float(minus)
    return plus, minus


def invert_interference(vartheta_plus, vartheta_minus, spec: TwoQubitSpec):
    """Inverse of :func:`interference_argument`.

    theta1 = [v+ + v- + alpha01 - alpha11] / (2 dm)
    theta2 = [v+ - v- - alpha01 - alpha11] / (2 dn)

    Composing with the forward map is the identity up to the 2 pi lattice
    of the torus.
    """
    dm = spec.m1 - spec.m0
    dn = spec.n1 - spec.n0
    vp = np.asarray(vartheta_plus, dtype=np.float64)
    vm = np.asarray(vartheta_minus, dtype=np.float64)
    theta1 = (vp + vm + spec.alpha01 - spec.alpha11) / (2.0 * dm)
    theta2 = (vp - vm - spec.alpha01 - spec.alpha11) / (2.0 * dn)
    if theta1.ndim == 0:
        return float(theta1), float(theta2)
    return theta1, theta2


def spiral_slopes(spec: TwoQubitSpec) -> tuple:
    """d theta1 / d v+ and d theta2 / d v+ along the interference curve."""
    return (1.0 / (2.0 * (spec.m1 - spec.m0)), 1.0 / (2.0 * (spec.n1 - spec.n0)))


def spiral_period(spec: TwoQubitSpec) -> float:
    """Advance of v+ after which the torus curve closes: 4 pi lcm(|dm|, |dn|)."""
    dm = abs(spec.m1 - spec.m0)
    dn = abs(spec.n1 - spec.n0)
    return 4.0 * math.pi * math.lcm(dm, dn)


def spiral_samples(spec: TwoQubitSpec, n_samples: int,
                   vartheta_minus: float = 0.0) -> np.ndarray:
    """Sample the interference curve over one closed winding of the torus.

    Returns an (n_samples, 3) array of (v+, theta1, theta2) with uniform
    v+ steps over [0, period) and angles reduced to [-pi, pi).
    """
    if n_samples < 1:
        raise ValueError("need at least one sample")
    period = spiral_period(spec)
    v_plus = np.linspace(0.0, period, int(n_samples), endpoint=False)
    theta1, theta2 = invert_interference(v_plus, vartheta_minus, spec)
    reduce = lambda t: t - TWO_PI * np.floor((t + math.pi) / TWO_PI)
    return np.column_stack([v_plus, reduce(np.atleast_1d(theta1)),
                            reduce(np.atleast_1d(theta2))])
