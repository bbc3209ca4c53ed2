"""Pure numpy/scipy implementations of the hot kernels.

Mirrors the compiled extension in `_core.pyx` function-for-function; the
package selects one of the two at import time (see `__init__.py`). Keep
the two in sync: `tests/test_kernels.py` checks them against each other.
"""

import numpy as np
import scipy.sparse as sp

CAMERA_SIDE = 64

BACKEND_NAME = "purepy"


def camera_render(px, py, heading, ex, ey, er, ecode, eactive, window, out):
    """Paint the egocentric top-down grid into ``out`` (length 4096).

    Rows index forward distance from the robot, columns index lateral
    offset (column 0 is far left). A cell takes the kind code of the
    nearest entity disc overlapping its centre, 0.0 if none.
    """
    out[:] = 0.0
    n = ex.shape[0]
    if n == 0:
        return
    cell = window / CAMERA_SIDE
    fx, fy = np.cos(heading), np.sin(heading)
    rx, ry = np.sin(heading), -np.cos(heading)
    best = np.full(CAMERA_SIDE * CAMERA_SIDE, np.inf)
    for i in range(n):
        if not eactive[i]:
            continue
        dx, dy = ex[i] - px, ey[i] - py
        fe = dx * fx + dy * fy
        le = dx * rx + dy * ry
        rad = er[i]
        # grid bounds of the disc's bounding box
        r_lo = max(0, int(np.floor((fe - rad) / cell - 0.5)))
        r_hi = min(CAMERA_SIDE - 1, int(np.ceil((fe + rad) / cell - 0.5)))
        c_lo = max(0, int(np.floor((le - rad) / cell - 0.5 + CAMERA_SIDE / 2)))
        c_hi = min(CAMERA_SIDE - 1, int(np.ceil((le + rad) / cell - 0.5 + CAMERA_SIDE / 2)))
        if r_lo > r_hi or c_lo > c_hi:
            continue
        rows = np.arange(r_lo, r_hi + 1)
        cols = np.arange(c_lo, c_hi + 1)
        fc = (rows + 0.5) * cell
        lc = (cols + 0.5 - CAMERA_SIDE / 2) * cell
        d2 = (fc[:, None] - fe) ** 2 + (lc[None, :] - le) ** 2
        hit = d2 <= rad * rad
        if not hit.any():
            continue
        idx = (rows[:, None] * CAMERA_SIDE + cols[None, :])[hit]
        d2 = d2[hit]
        closer = d2 < best[idx]
        idx = idx[closer]
        best[idx] = d2[closer]
        out[idx] = ecode[i] / 10.0


def raycast_proximity(px, py, heading, robot_radius, ox, oy, orad, oactive,
                      arena_size, sensor_range, out):
    """Cast 16 equally spaced rays; readings normalised to [0, 1].

    Rays start at the robot centre; the reported distance is measured
    from the robot surface (centre distance minus ``robot_radius``) so a
    reading of 0 means physical contact. Rays hit obstacle discs and the
    arena boundary.
    """
    n_rays = out.shape[0]
    for i in range(n_rays):
        ang = heading + i * (2.0 * np.pi / n_rays)
        dx, dy = np.cos(ang), np.sin(ang)
        best = np.inf
        if dx > 1e-12:
            best = min(best, (arena_size - px) / dx)
        elif dx < -1e-12:
            best = min(best, -px / dx)
        if dy > 1e-12:
            best = min(best, (arena_size - py) / dy)
        elif dy < -1e-12:
            best = min(best, -py / dy)
        for k in range(ox.shape[0]):
            if not oactive[k]:
                continue
            cx, cy = ox[k] - px, oy[k] - py
            b = dx * cx + dy * cy
            c0 = cx * cx + cy * cy - orad[k] * orad[k]
            disc = b * b - c0
            if disc < 0.0:
                continue
            root = np.sqrt(disc)
            t = b - root
            if t < 0.0:
                t = b + root  # ray origin inside the disc
                if t < 0.0:
                    continue
                t = 0.0
            best = min(best, t)
        out[i] = min(1.0, max(0.0, (best - robot_radius) / sensor_range))


def csr_matmul(data, indices, indptr, w, out):
    """out += X @ w for CSR-encoded X; w is (n_in, n_out)."""
    nrows = out.shape[0]
    x = sp.csr_matrix((data, indices, indptr), shape=(nrows, w.shape[0]))
    out += x @ w


def csr_grad_weights(data, indices, indptr, dz, out_w):
    """out_w += X.T @ dz for CSR-encoded X; out_w is (n_in, n_out)."""
    nrows = dz.shape[0]
    x = sp.csr_matrix((data, indices, indptr), shape=(nrows, out_w.shape[0]))
    out_w += x.T @ dz


def adam_soft_step(p, g, m, v, tgt, t, lr, b1, b2, eps, tau):
    """Fused bias-corrected Adam step, optionally followed by a soft
    target update (skipped when ``tgt`` has length 0)."""
    m *= b1
    m += (1.0 - b1) * g
    v *= b2
    v += (1.0 - b2) * (g * g)
    bc1 = 1.0 - b1 ** t
    bc2 = 1.0 - b2 ** t
    p -= lr * (m / bc1) / (np.sqrt(v / bc2) + eps)
    if tgt.shape[0]:
        tgt *= 1.0 - tau
        tgt += tau * p


def soft_update_arr(tgt, src, tau):
    """tgt = tau * src + (1 - tau) * tgt, elementwise in place."""
    tgt *= 1.0 - tau
    tgt += tau * src
