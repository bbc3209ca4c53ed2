# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: egocentric camera painting, proximity raycasts,
CSR first-layer products and the fused Adam/soft-target update.

Function-for-function mirror of `_purepy.py`; plain loops only, so each
build is bit-deterministic for fixed inputs.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, floor, ceil, pow, INFINITY

BACKEND_NAME = "compiled"

DEF SIDE = 64


def camera_render(double px, double py, double heading,
                  double[::1] ex, double[::1] ey, double[::1] er,
                  const unsigned char[::1] ecode, const unsigned char[::1] eactive,
                  double window, double[::1] out):
    cdef Py_ssize_t n = ex.shape[0], i, r, c, idx
    cdef Py_ssize_t r_lo, r_hi, c_lo, c_hi
    cdef double cell = window / SIDE
    cdef double fx = cos(heading), fy = sin(heading)
    cdef double rx = sin(heading), ry = -cos(heading)
    cdef double dx, dy, fe, le, rad, rad2, fc, lc, d2, code
    cdef cnp.ndarray[cnp.float64_t, ndim=1] best_arr = np.full(SIDE * SIDE, np.inf)
    cdef double[::1] best = best_arr

    out[:] = 0.0
    for i in range(n):
        if not eactive[i]:
            continue
        dx = ex[i] - px
        dy = ey[i] - py
        fe = dx * fx + dy * fy
        le = dx * rx + dy * ry
        rad = er[i]
        rad2 = rad * rad
        code = ecode[i] / 10.0
        r_lo = <Py_ssize_t>floor((fe - rad) / cell - 0.5)
        r_hi = <Py_ssize_t>ceil((fe + rad) / cell - 0.5)
        c_lo = <Py_ssize_t>floor((le - rad) / cell - 0.5 + SIDE / 2)
        c_hi = <Py_ssize_t>ceil((le + rad) / cell - 0.5 + SIDE / 2)
        if r_lo < 0:
            r_lo = 0
        if r_hi > SIDE - 1:
            r_hi = SIDE - 1
        if c_lo < 0:
            c_lo = 0
        if c_hi > SIDE - 1:
            c_hi = SIDE - 1
        for r in range(r_lo, r_hi + 1):
            fc = (r + 0.5) * cell
            for c in range(c_lo, c_hi + 1):
                lc = (c + 0.5 - SIDE / 2) * cell
                d2 = (fc - fe) * (fc - fe) + (lc - le) * (lc - le)
                if d2 <= rad2:
                    idx = r * SIDE + c
                    if d2 < best[idx]:
                        best[idx] = d2
                        out[idx] = code


def raycast_proximity(double px, double py, double heading, double robot_radius,
                      double[::1] ox, double[::1] oy, double[::1] orad,
                      const unsigned char[::1] oactive,
                      double arena_size, double sensor_range, double[::1] out):
    cdef Py_ssize_t n_rays = out.shape[0], n_obs = ox.shape[0], i, k
    cdef double ang, dx, dy, best, cx, cy, b, c0, disc, root, t, reading

    for i in range(n_rays):
        ang = heading + i * (2.0 * np.pi / n_rays)
        dx = cos(ang)
        dy = sin(ang)
        best = INFINITY
        if dx > 1e-12:
            t = (arena_size - px) / dx
            if t < best:
                best = t
        elif dx < -1e-12:
            t = -px / dx
            if t < best:
                best = t
        if dy > 1e-12:
            t = (arena_size - py) / dy
            if t < best:
                best = t
        elif dy < -1e-12:
            t = -py / dy
            if t < best:
                best = t
        for k in range(n_obs):
            if not oactive[k]:
                continue
            cx = ox[k] - px
            cy = oy[k] - py
            b = dx * cx + dy * cy
            c0 = cx * cx + cy * cy - orad[k] * orad[k]
            disc = b * b - c0
            if disc < 0.0:
                continue
            root = sqrt(disc)
            t = b - root
            if t < 0.0:
                t = b + root
                if t < 0.0:
                    continue
                t = 0.0
            if t < best:
                best = t
        reading = (best - robot_radius) / sensor_range
        if reading > 1.0:
            reading = 1.0
        elif reading < 0.0:
            reading = 0.0
        out[i] = reading


def csr_matmul(double[::1] data, int[::1] indices, int[::1] indptr,
               double[:, ::1] w, double[:, ::1] out):
    cdef Py_ssize_t nrows = out.shape[0], nout = out.shape[1]
    cdef Py_ssize_t i, jj, k, col
    cdef double val
    for i in range(nrows):
        for jj in range(indptr[i], indptr[i + 1]):
            col = indices[jj]
            val = data[jj]
            for k in range(nout):
                out[i, k] += val * w[col, k]


def csr_grad_weights(double[::1] data, int[::1] indices, int[::1] indptr,
                     double[:, ::1] dz, double[:, ::1] out_w):
    cdef Py_ssize_t nrows = dz.shape[0], nout = dz.shape[1]
    cdef Py_ssize_t i, jj, k, col
    cdef double val
    for i in range(nrows):
        for jj in range(indptr[i], indptr[i + 1]):
            col = indices[jj]
            val = data[jj]
            for k in range(nout):
                out_w[col, k] += val * dz[i, k]


def adam_soft_step(double[::1] p, double[::1] g, double[::1] m, double[::1] v,
                   double[::1] tgt, long t, double lr, double b1, double b2,
                   double eps, double tau):
    cdef Py_ssize_t n = p.shape[0], i
    cdef double bc1 = 1.0 - pow(b1, <double>t)
    cdef double bc2 = 1.0 - pow(b2, <double>t)
    cdef double om1 = 1.0 - b1, om2 = 1.0 - b2, omt = 1.0 - tau
    cdef bint with_target = tgt.shape[0] > 0
    for i in range(n):
        m[i] = b1 * m[i] + om1 * g[i]
        v[i] = b2 * v[i] + om2 * g[i] * g[i]
        p[i] -= lr * (m[i] / bc1) / (sqrt(v[i] / bc2) + eps)
        if with_target:
            tgt[i] = omt * tgt[i] + tau * p[i]


def soft_update_arr(double[::1] tgt, double[::1] src, double tau):
    cdef Py_ssize_t n = tgt.shape[0], i
    cdef double omt = 1.0 - tau
    for i in range(n):
        tgt[i] = omt * tgt[i] + tau * src[i]
