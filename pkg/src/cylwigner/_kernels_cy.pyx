# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the numerical hot loops.

Same interface and semantics as ``cylwigner._kernels_py``; see that module
for the contract each function satisfies.
"""

from libc.math cimport M_PI, cos, fabs, floor, sin

import numpy as np

cdef double TWO_PI = 2.0 * M_PI
cdef double _SMALL_Z = 1e-4


cdef inline double c_sinc_pi(double x) nogil:
    cdef double z, z2
    if x == floor(x):
        return 1.0 if x == 0.0 else 0.0
    z = M_PI * x
    if fabs(z) < _SMALL_Z:
        z2 = z * z
        return 1.0 - (z2 / 6.0) * (
            1.0 - (z2 / 20.0) * (1.0 - (z2 / 42.0) * (1.0 - z2 / 72.0)))
    return sin(z) / z


def sinc_pi(double x):
    """sin(pi x)/(pi x); 1 at x = 0, exactly 0 at other integers."""
    return c_sinc_pi(x)


def sinc_pi_array(x):
    """Elementwise :func:`sinc_pi` on a float64 array."""
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    for i in range(xv.shape[0]):
        ov[i] = c_sinc_pi(xv[i])
    return out.reshape(np.shape(x))


def bilinear_1d(modes, coeffs, double delta, theta, p):
    """Sparse double sum over the state's support at each phase point."""
    cdef const long[::1] mv = np.ascontiguousarray(modes, dtype=np.int64)
    cdef const double complex[::1] cv = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double[::1] tv = np.ascontiguousarray(theta, dtype=np.float64)
    cdef const double[::1] pv = np.ascontiguousarray(p, dtype=np.float64)
    cdef Py_ssize_t n = tv.shape[0], n_sup = mv.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double max_imag = 0.0
    cdef Py_ssize_t i, a, b
    cdef double q, acc_re, acc_im, wr, wi, ang, sc, ca, sa, im
    for i in range(n):
        q = pv[i] - delta
        acc_re = 0.0
        acc_im = 0.0
        for a in range(n_sup):
            for b in range(n_sup):
                # conj(c_a) * c_b
                wr = cv[a].real * cv[b].real + cv[a].imag * cv[b].imag
                wi = cv[a].real * cv[b].imag - cv[a].imag * cv[b].real
                ang = (mv[b] - mv[a]) * tv[i]
                sc = c_sinc_pi(q - 0.5 * (mv[a] + mv[b]))
                ca = cos(ang)
                sa = sin(ang)
                acc_re += sc * (wr * ca - wi * sa)
                acc_im += sc * (wr * sa + wi * ca)
        ov[i] = acc_re / TWO_PI
        im = fabs(acc_im) / TWO_PI
        if im > max_imag:
            max_imag = im
    return out, max_imag


def bilinear_2d(modes1, modes2, coeffs, double delta1, double delta2,
                theta1, theta2, p1, p2):
    """Two-mode analogue of :func:`bilinear_1d` on the torus phase space."""
    cdef const long[::1] m1v = np.ascontiguousarray(modes1, dtype=np.int64)
    cdef const long[::1] m2v = np.ascontiguousarray(modes2, dtype=np.int64)
    cdef const double complex[::1] cv = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double[::1] t1v = np.ascontiguousarray(theta1, dtype=np.float64)
    cdef const double[::1] t2v = np.ascontiguousarray(theta2, dtype=np.float64)
    cdef const double[::1] p1v = np.ascontiguousarray(p1, dtype=np.float64)
    cdef const double[::1] p2v = np.ascontiguousarray(p2, dtype=np.float64)
    cdef Py_ssize_t n = t1v.shape[0], n_sup = m1v.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double max_imag = 0.0
    cdef Py_ssize_t i, a, b
    cdef double q1, q2, acc_re, acc_im, wr, wi, ang, sc, ca, sa, im
    for i in range(n):
        q1 = p1v[i] - delta1
        q2 = p2v[i] - delta2
        acc_re = 0.0
        acc_im = 0.0
        for a in range(n_sup):
            for b in range(n_sup):
                wr = cv[a].real * cv[b].real + cv[a].imag * cv[b].imag
                wi = cv[a].real * cv[b].imag - cv[a].imag * cv[b].real
                ang = (m1v[b] - m1v[a]) * t1v[i] + (m2v[b] - m2v[a]) * t2v[i]
                sc = (c_sinc_pi(q1 - 0.5 * (m1v[a] + m1v[b]))
                      * c_sinc_pi(q2 - 0.5 * (m2v[a] + m2v[b])))
                ca = cos(ang)
                sa = sin(ang)
                acc_re += sc * (wr * ca - wi * sa)
                acc_im += sc * (wr * sa + wi * ca)
        ov[i] = acc_re / (TWO_PI * TWO_PI)
        im = fabs(acc_im) / (TWO_PI * TWO_PI)
        if im > max_imag:
            max_imag = im
    return out, max_imag


def oracle_1d(modes, coeffs, double delta, double theta, double p,
              nodes, weights):
    """Quadrature sum of the angular-offset integral at one phase point."""
    cdef const long[::1] mv = np.ascontiguousarray(modes, dtype=np.int64)
    cdef const double complex[::1] cv = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double[::1] xv = np.ascontiguousarray(nodes, dtype=np.float64)
    cdef const double[::1] wv = np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t nq = xv.shape[0], n_sup = mv.shape[0]
    cdef Py_ssize_t i, s
    cdef double x, freq, ap, am, cp, sp, cm, sm
    cdef double pp_re, pp_im, pm_re, pm_im, pr_re, pr_im, kr, ki
    cdef double acc_re = 0.0, acc_im = 0.0
    for i in range(nq):
        x = xv[i]
        pp_re = pp_im = pm_re = pm_im = 0.0
        for s in range(n_sup):
            freq = mv[s] + delta
            ap = freq * (theta + 0.5 * x)
            am = freq * (theta - 0.5 * x)
            cp = cos(ap)
            sp = sin(ap)
            cm = cos(am)
            sm = sin(am)
            pp_re += cv[s].real * cp - cv[s].imag * sp
            pp_im += cv[s].real * sp + cv[s].imag * cp
            pm_re += cv[s].real * cm - cv[s].imag * sm
            pm_im += cv[s].real * sm + cv[s].imag * cm
        # conj(psi_minus) * psi_plus
        pr_re = pm_re * pp_re + pm_im * pp_im
        pr_im = pm_re * pp_im - pm_im * pp_re
        kr = cos(p * x)
        ki = -sin(p * x)
        acc_re += wv[i] * (pr_re * kr - pr_im * ki)
        acc_im += wv[i] * (pr_re * ki + pr_im * kr)
    cdef double norm = 4.0 * M_PI * M_PI
    return complex(acc_re / norm, acc_im / norm)


def oracle_2d(modes1, modes2, coeffs, double delta1, double delta2,
              double theta1, double theta2, double p1, double p2,
              nodes, weights):
    """Tensor-product quadrature of the two-axis offset integral."""
    cdef const double complex[::1] cv = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double[::1] xv = np.ascontiguousarray(nodes, dtype=np.float64)
    cdef const double[::1] wv = np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t nq = xv.shape[0], n_sup = cv.shape[0]

    xs = np.asarray(nodes, dtype=np.float64)
    f1 = (np.asarray(modes1, dtype=np.float64) + delta1)[:, None]
    f2 = (np.asarray(modes2, dtype=np.float64) + delta2)[:, None]
    half = 0.5 * xs
    cdef double complex[:, ::1] up = np.ascontiguousarray(np.exp(1j * f1 * (theta1 + half)))
    cdef double complex[:, ::1] um = np.ascontiguousarray(np.exp(1j * f1 * (theta1 - half)))
    cdef double complex[:, ::1] vp = np.ascontiguousarray(np.exp(1j * f2 * (theta2 + half)))
    cdef double complex[:, ::1] vm = np.ascontiguousarray(np.exp(1j * f2 * (theta2 - half)))

    cdef Py_ssize_t i, j, s
    cdef double complex psi_p, psi_m, prod
    cdef double ang, kr, ki, wij, pr_re, pr_im
    cdef double acc_re = 0.0, acc_im = 0.0
    for i in range(nq):
        for j in range(nq):
            psi_p = 0
            psi_m = 0
            for s in range(n_sup):
                psi_p = psi_p + cv[s] * up[s, i] * vp[s, j]
                psi_m = psi_m + cv[s] * um[s, i] * vm[s, j]
            pr_re = psi_m.real * psi_p.real + psi_m.imag * psi_p.imag
            pr_im = psi_m.real * psi_p.imag - psi_m.imag * psi_p.real
            ang = p1 * xv[i] + p2 * xv[j]
            kr = cos(ang)
            ki = -sin(ang)
            wij = wv[i] * wv[j]
            acc_re += wij * (pr_re * kr - pr_im * ki)
            acc_im += wij * (pr_re * ki + pr_im * kr)
    cdef double norm = 16.0 * M_PI * M_PI * M_PI * M_PI
    return complex(acc_re / norm, acc_im / norm)
