"""Pure-NumPy implementations of the numerical hot loops.

This module mirrors the interface of the optional compiled extension
``cylwigner._kernels_cy``; ``cylwigner._backend`` picks whichever is
importable.  Everything here is vectorized, so the fallback stays usable
for grid sweeps, just slower than the compiled core.

Conventions shared by both backends:

* ``sinc_pi(x)`` is sin(pi x)/(pi x) with the limit 1 at x = 0 and exact
  zeros at nonzero integers (so band-limited interpolation identities
  hold exactly in floating point).
* Bilinear evaluators take the sparse state support as parallel arrays of
  mode indices and complex amplitudes, plus flat coordinate arrays of one
  common length, and return ``(values, max_imag)`` where ``max_imag`` is
  the largest imaginary residue seen before taking the real part.
* Oscillatory-offset integrators (``oracle_*``) take a quadrature rule
  for the offset window [-pi, pi] and return the complex quadrature sum
  including all normalization prefactors.
"""

from __future__ import annotations

import math

import numpy as np

TWO_PI = 2.0 * math.pi

# Below this threshold sin(z)/z loses digits to cancellation; the nested
# 5-term Taylor polynomial is exact to double precision for |z| < 1e-4.
_SMALL_Z = 1e-4


def sinc_pi(x: float) -> float:
    """sin(pi x)/(pi x); 1 at x = 0, exactly 0 at other integers."""
    x = float(x)
    if x == math.floor(x):
        return 1.0 if x == 0.0 else 0.0
    z = math.pi * x
    if abs(z) < _SMALL_Z:
        z2 = z * z
        return 1.0 - (z2 / 6.0) * (
            1.0 - (z2 / 20.0) * (1.0 - (z2 / 42.0) * (1.0 - z2 / 72.0))
        )
    return math.sin(z) / z


def sinc_pi_array(x) -> np.ndarray:
    """Elementwise :func:`sinc_pi` on a float64 array."""
    x = np.asarray(x, dtype=np.float64)
    z = np.pi * x
    small = np.abs(z) < _SMALL_Z
    z2 = np.where(small, z * z, 0.0)
    series = 1.0 - (z2 / 6.0) * (
        1.0 - (z2 / 20.0) * (1.0 - (z2 / 42.0) * (1.0 - z2 / 72.0))
    )
    out = np.where(small, series, np.sin(z) / np.where(small, 1.0, z))
    exact_zero = (x == np.floor(x)) & (x != 0.0)
    return np.where(exact_zero, 0.0, out)


def bilinear_1d(modes, coeffs, delta, theta, p):
    """Sparse double sum over the state's support at each phase point.

    Evaluates ``(1/2pi) sum_ab conj(c_a) c_b exp(i (m_b - m_a) theta)
    sinc_pi((p - delta) - (m_a + m_b)/2)`` for flat, equal-length
    ``theta``/``p`` arrays.  Returns ``(real values, max imag residue)``.
    """
    modes = np.asarray(modes, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    theta = np.asarray(theta, dtype=np.float64)
    q = np.asarray(p, dtype=np.float64) - delta

    acc = np.zeros(theta.shape, dtype=np.complex128)
    phase_cache: dict[int, np.ndarray] = {}
    sinc_cache: dict[int, np.ndarray] = {}
    n_sup = modes.shape[0]
    for a in range(n_sup):
        wa = coeffs[a].conjugate()
        ma = int(modes[a])
        for b in range(n_sup):
            mb = int(modes[b])
            gap = mb - ma
            ph = phase_cache.get(gap)
            if ph is None:
                ph = np.exp(1j * gap * theta)
                phase_cache[gap] = ph
            ssum = ma + mb
            sc = sinc_cache.get(ssum)
            if sc is None:
                sc = sinc_pi_array(q - 0.5 * ssum)
                sinc_cache[ssum] = sc
            acc += (wa * coeffs[b]) * ph * sc
    acc /= TWO_PI
    return acc.real.copy(), float(np.max(np.abs(acc.imag), initial=0.0))


def bilinear_2d(modes1, modes2, coeffs, delta1, delta2, theta1, theta2, p1, p2):
    """Two-mode analogue of :func:`bilinear_1d` on the torus phase space."""
    modes1 = np.asarray(modes1, dtype=np.int64)
    modes2 = np.asarray(modes2, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    theta1 = np.asarray(theta1, dtype=np.float64)
    theta2 = np.asarray(theta2, dtype=np.float64)
    q1 = np.asarray(p1, dtype=np.float64) - delta1
    q2 = np.asarray(p2, dtype=np.float64) - delta2

    acc = np.zeros(theta1.shape, dtype=np.complex128)
    phase_cache: dict[tuple[int, int], np.ndarray] = {}
    sinc1_cache: dict[int, np.ndarray] = {}
    sinc2_cache: dict[int, np.ndarray] = {}
    n_sup = modes1.shape[0]
    for a in range(n_sup):
        wa = coeffs[a].conjugate()
        ma, na = int(modes1[a]), int(modes2[a])
        for b in range(n_sup):
            mb, nb = int(modes1[b]), int(modes2[b])
            key = (mb - ma, nb - na)
            ph = phase_cache.get(key)
            if ph is None:
                ph = np.exp(1j * (key[0] * theta1 + key[1] * theta2))
                phase_cache[key] = ph
            s1 = sinc1_cache.get(ma + mb)
            if s1 is None:
                s1 = sinc_pi_array(q1 - 0.5 * (ma + mb))
                sinc1_cache[ma + mb] = s1
            s2 = sinc2_cache.get(na + nb)
            if s2 is None:
                s2 = sinc_pi_array(q2 - 0.5 * (na + nb))
                sinc2_cache[na + nb] = s2
            acc += (wa * coeffs[b]) * ph * (s1 * s2)
    acc /= TWO_PI * TWO_PI
    return acc.real.copy(), float(np.max(np.abs(acc.imag), initial=0.0))


def oracle_1d(modes, coeffs, delta, theta, p, nodes, weights):
    """Quadrature sum of the angular-offset integral at one phase point.

    The wave function is evaluated directly from its mode expansion at the
    shifted angles; nothing about the closed-form kernel enters.  Returns
    the complex value including the 1/(2 pi)^2 prefactors.
    """
    modes = np.asarray(modes, dtype=np.float64)
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    nodes = np.asarray(nodes, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)

    freq = (modes + delta)[:, None]
    half = 0.5 * nodes
    psi_plus = coeffs @ np.exp(1j * freq * (theta + half))
    psi_minus = coeffs @ np.exp(1j * freq * (theta - half))
    integrand = np.exp(-1j * p * nodes) * np.conj(psi_minus) * psi_plus
    return complex((weights @ integrand) / (4.0 * math.pi ** 2))


def oracle_2d(modes1, modes2, coeffs, delta1, delta2,
              theta1, theta2, p1, p2, nodes, weights):
    """Tensor-product quadrature of the two-axis offset integral."""
    modes1 = np.asarray(modes1, dtype=np.float64)
    modes2 = np.asarray(modes2, dtype=np.float64)
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    nodes = np.asarray(nodes, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)

    half = 0.5 * nodes
    f1 = (modes1 + delta1)[:, None]
    f2 = (modes2 + delta2)[:, None]
    u_plus = np.exp(1j * f1 * (theta1 + half))
    u_minus = np.exp(1j * f1 * (theta1 - half))
    v_plus = np.exp(1j * f2 * (theta2 + half))
    v_minus = np.exp(1j * f2 * (theta2 - half))

    psi_plus = (coeffs[:, None] * u_plus).T @ v_plus
    psi_minus = (coeffs[:, None] * u_minus).T @ v_minus
    kernel = np.exp(-1j * p1 * nodes)[:, None] * np.exp(-1j * p2 * nodes)[None, :]
    integrand = np.conj(psi_minus) * psi_plus * kernel
    total = weights @ integrand @ weights
    return complex(total / (16.0 * math.pi ** 4))
