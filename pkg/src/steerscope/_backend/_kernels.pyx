# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled per-state kernels: correlation matrix extraction and the two
state-level maxima.

The steering maximum uses a closed-form trigonometric eigensolve of T^T T
(with Newton polish of the smallest root); the CHSH maximum uses cyclic
Jacobi rotations on T T^T.  Distinct algorithms on distinct matrix products
keep the equivalence certificate non-circular, matching the split used by
the pure-numpy backend.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, cos, sin, acos, fabs, atan2, M_PI

cnp.import_array()

BACKEND_NAME = "cython"

# Pauli matrices, row-major 2x2.
cdef double complex SIG[3][2][2]
SIG[0][0][0] = 0;  SIG[0][0][1] = 1;   SIG[0][1][0] = 1;   SIG[0][1][1] = 0
SIG[1][0][0] = 0;  SIG[1][0][1] = -1j; SIG[1][1][0] = 1j;  SIG[1][1][1] = 0
SIG[2][0][0] = 1;  SIG[2][0][1] = 0;   SIG[2][1][0] = 0;   SIG[2][1][1] = -1


cdef void _tmat(const double complex[:, :] rho, double[:, :] t) noexcept nogil:
    # T[m, n] = Re sum_{ijkl} rho[2i+j, 2k+l] sigma_n[k, i] sigma_m[l, j]
    cdef int m, n, i, j, k, l
    cdef double complex acc
    for m in range(3):
        for n in range(3):
            acc = 0
            for i in range(2):
                for j in range(2):
                    for k in range(2):
                        for l in range(2):
                            acc = acc + rho[2 * i + j, 2 * k + l] * SIG[n][k][i] * SIG[m][l][j]
            t[m, n] = acc.real


cdef double _det_shift(double* m, double lam) noexcept nogil:
    # det(M - lam I) for symmetric M stored row-major in m[9]
    cdef double a = m[0] - lam, b = m[4] - lam, c = m[8] - lam
    return (a * (b * c - m[5] * m[5])
            - m[1] * (m[1] * c - m[5] * m[2])
            + m[2] * (m[1] * m[5] - b * m[2]))


cdef double _min_eig_trig(double* m) noexcept nogil:
    """Smallest eigenvalue of a symmetric 3x3 matrix (row-major m[9]):
    trigonometric closed form plus Newton refinement."""
    cdef double p1 = m[1] * m[1] + m[2] * m[2] + m[5] * m[5]
    cdef double q = (m[0] + m[4] + m[8]) / 3.0
    cdef double p2, p, r, phi, lam, f, fp
    cdef double b[9]
    cdef int i, it
    if p1 == 0.0:
        lam = m[0]
        if m[4] < lam:
            lam = m[4]
        if m[8] < lam:
            lam = m[8]
        return lam
    p2 = (m[0] - q) ** 2 + (m[4] - q) ** 2 + (m[8] - q) ** 2 + 2.0 * p1
    p = sqrt(p2 / 6.0)
    for i in range(9):
        b[i] = m[i] / p
    b[0] -= q / p
    b[4] -= q / p
    b[8] -= q / p
    r = _det_shift(b, 0.0) / 2.0
    if r < -1.0:
        r = -1.0
    elif r > 1.0:
        r = 1.0
    phi = acos(r) / 3.0
    lam = q + 2.0 * p * cos(phi + 2.0 * M_PI / 3.0)
    for it in range(3):
        f = _det_shift(m, lam)
        # f'(lam) = -(sum of 2x2 principal minors of M - lam I)
        fp = -(((m[4] - lam) * (m[8] - lam) - m[5] * m[5])
               + ((m[0] - lam) * (m[8] - lam) - m[2] * m[2])
               + ((m[0] - lam) * (m[4] - lam) - m[1] * m[1]))
        if fabs(fp) < 1e-300:
            break
        lam = lam - f / fp
    return lam


cdef double _min_eig_jacobi(double* a) noexcept nogil:
    """Smallest eigenvalue of a symmetric 3x3 matrix (row-major a[9], clobbered)
    via cyclic Jacobi rotations."""
    cdef int sweep, p, q, i
    cdef double off, theta, c, s, apq, aip, aiq, lam
    for sweep in range(30):
        off = a[1] * a[1] + a[2] * a[2] + a[5] * a[5]
        if off < 1e-32:
            break
        for p in range(2):
            for q in range(p + 1, 3):
                apq = a[3 * p + q]
                if fabs(apq) < 1e-300:
                    continue
                theta = 0.5 * atan2(2.0 * apq, a[3 * q + q] - a[3 * p + p])
                c = cos(theta)
                s = sin(theta)
                for i in range(3):
                    aip = a[3 * i + p]
                    aiq = a[3 * i + q]
                    a[3 * i + p] = c * aip - s * aiq
                    a[3 * i + q] = s * aip + c * aiq
                for i in range(3):
                    aip = a[3 * p + i]
                    aiq = a[3 * q + i]
                    a[3 * p + i] = c * aip - s * aiq
                    a[3 * q + i] = s * aip + c * aiq
    lam = a[0]
    if a[4] < lam:
        lam = a[4]
    if a[8] < lam:
        lam = a[8]
    return lam


cdef double _steering_from_t(const double[:, :] t) noexcept nogil:
    cdef double m[9]
    cdef int i, j, k
    cdef double tr, lam
    for i in range(3):
        for j in range(3):
            m[3 * i + j] = 0.0
            for k in range(3):
                m[3 * i + j] += t[k, i] * t[k, j]  # M = T^T T
    tr = m[0] + m[4] + m[8]
    lam = _min_eig_trig(m)
    if tr - lam < 0.0:
        return 0.0
    return 2.0 * sqrt(tr - lam)


cdef double _chsh_from_t(const double[:, :] t) noexcept nogil:
    cdef double n[9]
    cdef int i, j, k
    cdef double tr, lam
    for i in range(3):
        for j in range(3):
            n[3 * i + j] = 0.0
            for k in range(3):
                n[3 * i + j] += t[i, k] * t[j, k]  # N = T T^T
    tr = n[0] + n[4] + n[8]
    lam = _min_eig_jacobi(n)
    if tr - lam < 0.0:
        return 0.0
    return 2.0 * sqrt(tr - lam)


def tmat(rho):
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] r = np.ascontiguousarray(rho, dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] t = np.empty((3, 3), dtype=np.float64)
    _tmat(r, t)
    return t


def tmat_batch(rhos):
    cdef cnp.ndarray[cnp.complex128_t, ndim=3] r = np.ascontiguousarray(rhos, dtype=np.complex128)
    cdef Py_ssize_t n = r.shape[0], k
    cdef cnp.ndarray[cnp.float64_t, ndim=3] t = np.empty((n, 3, 3), dtype=np.float64)
    cdef const double complex[:, :, :] rv = r
    cdef double[:, :, :] tv = t
    with nogil:
        for k in range(n):
            _tmat(rv[k], tv[k])
    return t


def steering_max(t):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] tt = np.ascontiguousarray(t, dtype=np.float64)
    return _steering_from_t(tt)


def chsh_max(t):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] tt = np.ascontiguousarray(t, dtype=np.float64)
    return _chsh_from_t(tt)


def batch_maxima(rhos):
    """(steering, chsh) maxima for a stack of 4x4 density matrices."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=3] r = np.ascontiguousarray(rhos, dtype=np.complex128)
    cdef Py_ssize_t n = r.shape[0], k
    cdef cnp.ndarray[cnp.float64_t, ndim=1] steer = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] chsh = np.empty(n, dtype=np.float64)
    cdef const double complex[:, :, :] rv = r
    cdef double[:] sv = steer
    cdef double[:] cv = chsh
    cdef double tbuf[3][3]
    cdef double[:, :] t = tbuf
    with nogil:
        for k in range(n):
            _tmat(rv[k], t)
            sv[k] = _steering_from_t(t)
            cv[k] = _chsh_from_t(t)
    return steer, chsh
