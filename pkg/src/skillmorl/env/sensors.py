"""Observation rendering: proximity raycasts and the egocentric camera.

Thin wrappers over the kernel backend that convert the entity list into
flat arrays once per call. The camera covers a camera_window-sized
square directly ahead of the robot; proximity rays hit obstacle discs
and the arena boundary (readings measured from the robot surface).
"""

import numpy as np

from .._kernels import camera_render as _camera_kernel
from .._kernels import raycast_proximity as _raycast_kernel
from .types import CAMERA_CELLS, N_PROXIMITY, Observation


def _entity_arrays(entities, kinds=None):
    sel = [e for e in entities if kinds is None or e.kind in kinds]
    n = len(sel)
    ex = np.empty(n)
    ey = np.empty(n)
    er = np.empty(n)
    code = np.empty(n, dtype=np.uint8)
    active = np.empty(n, dtype=np.uint8)
    for i, e in enumerate(sel):
        ex[i] = e.x
        ey[i] = e.y
        er[i] = e.radius
        code[i] = e.code
        active[i] = 1 if e.active else 0
    return ex, ey, er, code, active


def render_camera(state, entities, config):
    """64x64 egocentric grid flattened to 4096 values in [0, 1]."""
    out = np.zeros(CAMERA_CELLS)
    ex, ey, er, code, active = _entity_arrays(entities)
    _camera_kernel(state.x, state.y, state.heading, ex, ey, er, code, active,
                   config.camera_window, out)
    return out


def sense_proximity(state, entities, config):
    """16 normalised readings, ray i at heading + i * (2*pi/16)."""
    out = np.empty(N_PROXIMITY)
    ex, ey, er, _, active = _entity_arrays(entities, kinds=("obstacle",))
    _raycast_kernel(state.x, state.y, state.heading, config.robot_radius,
                    ex, ey, er, active, config.arena_size, config.sensor_range, out)
    return out


def observe(state, entities, config):
    return Observation(
        proximity=sense_proximity(state, entities, config),
        camera=render_camera(state, entities, config),
    )
