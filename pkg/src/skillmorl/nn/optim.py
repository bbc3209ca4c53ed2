"""Adam optimisation and soft target updates over Network parameters."""

from dataclasses import dataclass, field

import numpy as np

from .._kernels import adam_soft_step, soft_update_arr
from ..errors import ShapeError

_EMPTY = np.empty(0)


@dataclass
class AdamState:
    """Per-parameter first/second moment accumulators plus step count."""

    m: list
    v: list
    learning_rate: float
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    step_count: int = field(default=0)


def init_adam(net, learning_rate, beta1=0.9, beta2=0.999, eps=1e-8):
    m = [np.zeros_like(a) for a in net.param_arrays()]
    v = [np.zeros_like(a) for a in net.param_arrays()]
    return AdamState(m=m, v=v, learning_rate=learning_rate,
                     beta1=beta1, beta2=beta2, eps=eps)


def _grad_arrays(grads):
    out = []
    for dw, db in grads:
        out.append(dw)
        out.append(db)
    return out


def adam_step(net, grads, state, target=None, tau=0.0):
    """Standard bias-corrected Adam update, in place.

    When ``target`` is given, the matching soft target update
    (tau * new_param + (1 - tau) * target) is fused into the same pass.
    Returns (net, state) for call-site convenience.
    """
    params = net.param_arrays()
    garrs = _grad_arrays(grads)
    if len(params) != len(garrs):
        raise ShapeError("gradient set does not match network layout")
    targets = target.param_arrays() if target is not None else None
    state.step_count += 1
    for i, (p, g) in enumerate(zip(params, garrs)):
        if p.shape != g.shape:
            raise ShapeError(f"gradient shape {g.shape} != parameter {p.shape}")
        tgt = targets[i].reshape(-1) if targets is not None else _EMPTY
        adam_soft_step(p.reshape(-1), g.reshape(-1),
                       state.m[i].reshape(-1), state.v[i].reshape(-1),
                       tgt, state.step_count, state.learning_rate,
                       state.beta1, state.beta2, state.eps, tau)
    return net, state


def soft_update(target, source, tau):
    """target <- tau * source + (1 - tau) * target, parameter-wise."""
    if not 0.0 <= tau <= 1.0:
        raise ShapeError("tau must lie in [0, 1]")
    tp, sp = target.param_arrays(), source.param_arrays()
    if len(tp) != len(sp):
        raise ShapeError("networks have different layouts")
    for t, s in zip(tp, sp):
        if t.shape != s.shape:
            raise ShapeError(f"shape mismatch {t.shape} vs {s.shape}")
        soft_update_arr(t.reshape(-1), s.reshape(-1), tau)
    return target
