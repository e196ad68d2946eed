# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, pow, sqrt, isfinite

cnp.import_array()

DEF MAX_WINDOW = 64
DEF HORNER_BLOCK = 256

CONVERGED = 0
EXHAUSTED = 1
NONFINITE = 2

CONSTANT = 0
INCREASING = 1
DECREASING = -1
NOT_MONOTONE = 2


def series_sum(const double[::1] c, double x, double tol, double rtol,
               double q_max, int window):
    cdef Py_ssize_t n, m = c.shape[0]
    cdef double s = 0.0, comp = 0.0, xp = 1.0, t, y, at, r, q, bound, lim
    cdef double prev = 0.0
    cdef Py_ssize_t prev_n = -1
    cdef double buf[MAX_WINDOW]
    cdef int filled = 0, head = 0, k
    if window > MAX_WINDOW:
        window = MAX_WINDOW
    with nogil:
        for n in range(m):
            t = c[n] * xp
            y = s + t
            if fabs(s) >= fabs(t):
                comp += (s - y) + t
            else:
                comp += (t - y) + s
            s = y
            at = fabs(t)
            if at != 0.0:
                if prev != 0.0:
                    r = at / prev
                    if n - prev_n > 1:
                        r = pow(r, 1.0 / (n - prev_n))
                    if r < q_max:
                        buf[head] = r
                        head = (head + 1) % window
                        if filled < window:
                            filled += 1
                    else:
                        filled = 0
                        head = 0
                prev = at
                prev_n = n
                if filled == window:
                    q = buf[0]
                    for k in range(1, window):
                        if buf[k] > q:
                            q = buf[k]
                    bound = at * q / (1.0 - q)
                    lim = rtol * fabs(s + comp)
                    if tol > lim:
                        lim = tol
                    if bound <= lim:
                        with gil:
                            return s + comp, n + 1, CONVERGED
            xp *= x
            if not (isfinite(xp) and isfinite(s)):
                with gil:
                    return s + comp, n + 1, NONFINITE
    return s + comp, m, EXHAUSTED


def horner_many(const double[::1] c, xs):
    cdef cnp.ndarray[cnp.double_t, ndim=1] xa = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    cdef cnp.ndarray[cnp.double_t, ndim=1] out = np.empty_like(xa)
    cdef double[::1] xv = xa
    cdef double[::1] ov = out
    cdef Py_ssize_t i, j, k, nb, m = c.shape[0], nx = xa.shape[0]
    cdef double acc[HORNER_BLOCK]
    cdef double top = c[m - 1] if m > 0 else 0.0
    with nogil:
        # a block of points per coefficient keeps independent chains in flight
        for i in range(0, nx, HORNER_BLOCK):
            nb = nx - i if nx - i < HORNER_BLOCK else HORNER_BLOCK
            for j in range(nb):
                acc[j] = top
            for k in range(m - 2, -1, -1):
                for j in range(nb):
                    acc[j] = acc[j] * xv[i + j] + c[k]
            for j in range(nb):
                ov[i + j] = acc[j]
    return out.reshape(np.shape(xs))


def monotone_scan(const double[::1] t, double rel_tie):
    cdef Py_ssize_t i, m = t.shape[0]
    cdef int direction = 0, s
    cdef long ties = 0
    cdef double d, scale
    for i in range(1, m):
        d = t[i] - t[i - 1]
        scale = fabs(t[i]) if fabs(t[i]) > fabs(t[i - 1]) else fabs(t[i - 1])
        if fabs(d) <= rel_tie * scale:
            ties += 1
            continue
        s = 1 if d > 0 else -1
        if direction == 0:
            direction = s
        elif s != direction:
            return NOT_MONOTONE, i, ties
    return direction, -1, ties


def agm_many(a, b):
    cdef cnp.ndarray[cnp.double_t, ndim=1] aa = np.array(a, dtype=np.float64, copy=True).ravel()
    cdef cnp.ndarray[cnp.double_t, ndim=1] bb = np.broadcast_to(
        np.asarray(b, dtype=np.float64), np.shape(a)).ravel().copy()
    cdef double[::1] av = aa
    cdef double[::1] bv = bb
    cdef Py_ssize_t i, n = aa.shape[0]
    cdef int it
    cdef double x, y, nx
    with nogil:
        for i in range(n):
            x = av[i]
            y = bv[i]
            for it in range(64):
                if fabs(x - y) <= 4e-16 * fabs(x):
                    break
                nx = 0.5 * (x + y)
                y = sqrt(x * y)
                x = nx
            av[i] = 0.5 * (x + y)
    return aa.reshape(np.shape(a))
