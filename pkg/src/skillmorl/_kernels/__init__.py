"""Kernel backend selection.

The compiled extension (`_core`, Cython) is preferred; the numpy/scipy
fallback (`_purepy`) is used when the extension is unavailable or when
the environment variable ``SKILLMORL_PURE_PY`` is set to a non-empty
value. Both expose the same functions; `backend_name()` reports which
one is active.
"""

import os

if os.environ.get("SKILLMORL_PURE_PY"):
    from . import _purepy as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purepy as _impl

camera_render = _impl.camera_render
raycast_proximity = _impl.raycast_proximity
csr_matmul = _impl.csr_matmul
csr_grad_weights = _impl.csr_grad_weights
adam_soft_step = _impl.adam_soft_step
soft_update_arr = _impl.soft_update_arr


def backend_name() -> str:
    return _impl.BACKEND_NAME
