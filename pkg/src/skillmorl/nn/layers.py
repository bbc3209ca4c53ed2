"""Dense feed-forward networks with reverse-mode gradients.

Weights are stored (fan_in, fan_out) so batched forward passes are plain
``X @ W`` products and the CSR kernels can index weight rows directly.
The vector API (`forward` / `backward`) is the reference path used by
the gradient-check tests; the batch/block API is the hot path used by
the trainers and supports sparse column blocks for the camera part of
an observation.
"""

from dataclasses import dataclass

import numpy as np

from .._kernels import csr_grad_weights, csr_matmul
from ..errors import NumericError, ShapeError, ValidationError

ACTIVATIONS = ("linear", "relu", "tanh")
LOSSES = ("mse", "cross_entropy")

CROSS_ENTROPY_CLAMP = 1e-6


@dataclass(frozen=True)
class LayerSpec:
    """Width, activation and train-time dropout rate of one dense layer."""

    width: int
    activation: str = "linear"
    dropout: float = 0.0

    def __post_init__(self):
        if self.width <= 0:
            raise ValidationError("layer width must be positive", key="width")
        if self.activation not in ACTIVATIONS:
            raise ValidationError(
                f"unknown activation {self.activation!r}", key="activation"
            )
        if not 0.0 <= self.dropout < 1.0:
            raise ValidationError("dropout rate must lie in [0, 1)", key="dropout")


class Network:
    """Ordered dense layers; the parameter container for every learned
    function in the package (actors, critics, targets, predictive model)."""

    def __init__(self, input_width, specs, weights, biases):
        self.input_width = int(input_width)
        self.specs = list(specs)
        self.weights = weights
        self.biases = biases
        self._validate()

    def _validate(self):
        if len(self.specs) != len(self.weights) or len(self.specs) != len(self.biases):
            raise ShapeError("specs and parameter lists must have equal length")
        fan_in = self.input_width
        for i, (spec, w, b) in enumerate(zip(self.specs, self.weights, self.biases)):
            if w.shape != (fan_in, spec.width) or b.shape != (spec.width,):
                raise ShapeError(
                    f"layer {i}: expected weight {(fan_in, spec.width)}, got {w.shape}"
                )
            if not np.isfinite(w).all() or not np.isfinite(b).all():
                raise NumericError(f"layer {i}: non-finite parameter", layer=i)
            fan_in = spec.width

    @property
    def output_width(self):
        return self.specs[-1].width

    def param_arrays(self):
        """Flat list of parameter arrays, weights and biases interleaved."""
        out = []
        for w, b in zip(self.weights, self.biases):
            out.append(w)
            out.append(b)
        return out

    def copy(self):
        return Network(
            self.input_width,
            self.specs,
            [w.copy() for w in self.weights],
            [b.copy() for b in self.biases],
        )

    def checksum(self):
        """Order-stable fingerprint of all parameters (frozen-skill checks)."""
        import hashlib

        h = hashlib.sha256()
        for a in self.param_arrays():
            h.update(a.tobytes())
        return h.hexdigest()


def init_network(input_width, specs, rng):
    """Fresh network, every layer drawn uniform in +-1/sqrt(fan_in)."""
    weights, biases = [], []
    fan_in = input_width
    for spec in specs:
        bound = 1.0 / np.sqrt(fan_in)
        weights.append(rng.uniform(-bound, bound, size=(fan_in, spec.width)))
        biases.append(rng.uniform(-bound, bound, size=spec.width))
        fan_in = spec.width
    return Network(input_width, specs, weights, biases)


def _activate(z, kind):
    if kind == "relu":
        return np.maximum(z, 0.0)
    if kind == "tanh":
        return np.tanh(z)
    return z


def _activation_grad(z, a, kind):
    if kind == "relu":
        return (z > 0.0).astype(np.float64)
    if kind == "tanh":
        return 1.0 - a * a
    return np.ones_like(z)


def forward(net, x, training=False, rng=None):
    """Evaluate the network on one input vector.

    Dropout (inverted scaling) is applied only when ``training``; in that
    case a generator is required whenever any layer has a nonzero rate.
    Evaluation mode is a pure function of (net, x).
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (net.input_width,):
        raise ShapeError(f"input width {x.shape} != {net.input_width}")
    needs_rng = training and any(s.dropout > 0.0 for s in net.specs)
    if needs_rng and rng is None:
        raise ValidationError("training forward with dropout requires an rng")
    a = x
    for spec, w, b in zip(net.specs, net.weights, net.biases):
        z = a @ w + b
        a = _activate(z, spec.activation)
        if training and spec.dropout > 0.0:
            keep = rng.random(spec.width) >= spec.dropout
            a = a * keep / (1.0 - spec.dropout)
    return a


def _forward_cache(net, x, training=False, rng=None):
    """Forward pass keeping pre/post activations (and dropout masks)."""
    zs, acts, masks = [], [x], []
    a = x
    for i, (spec, w, b) in enumerate(zip(net.specs, net.weights, net.biases)):
        z = a @ w + b
        if not np.isfinite(z).all():
            raise NumericError("non-finite pre-activation", layer=i)
        a = _activate(z, spec.activation)
        mask = None
        if training and spec.dropout > 0.0:
            keep = rng.random(spec.width) >= spec.dropout
            mask = keep / (1.0 - spec.dropout)
            a = a * mask
        zs.append(z)
        acts.append(a)
        masks.append(mask)
    return zs, acts, masks


def loss_value_and_grad(y, target, loss_kind):
    """Loss and dL/dy for the two supported losses.

    mse is the plain sum of squared errors. cross_entropy squashes the
    raw output through a logistic and applies binary cross entropy with
    targets clamped away from {0, 1}.
    """
    y = np.asarray(y, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    if y.shape != target.shape:
        raise ShapeError(f"target shape {target.shape} != output {y.shape}")
    if loss_kind == "mse":
        diff = y - target
        return float(diff @ diff), 2.0 * diff
    if loss_kind == "cross_entropy":
        p = 1.0 / (1.0 + np.exp(-y))
        t = np.clip(target, CROSS_ENTROPY_CLAMP, 1.0 - CROSS_ENTROPY_CLAMP)
        eps = 1e-300  # guards the log only; p is strictly inside (0,1)
        loss = -np.sum(t * np.log(p + eps) + (1.0 - t) * np.log(1.0 - p + eps))
        return float(loss), p - t
    raise ValidationError(f"unknown loss {loss_kind!r}", key="loss_kind")


def backprop(net, x, dout, cache=None, training=False, rng=None):
    """Gradients of sum(output * dout) w.r.t. every parameter and x."""
    x = np.asarray(x, dtype=np.float64)
    if cache is None:
        cache = _forward_cache(net, x, training=training, rng=rng)
    zs, acts, masks = cache
    grads = []
    delta = np.asarray(dout, dtype=np.float64)
    for i in reversed(range(len(net.specs))):
        spec = net.specs[i]
        if masks[i] is not None:
            delta = delta * masks[i]
        delta = delta * _activation_grad(zs[i], _activate(zs[i], spec.activation),
                                         spec.activation)
        if not np.isfinite(delta).all():
            raise NumericError("non-finite gradient", layer=i)
        a_prev = acts[i]
        dw = np.outer(a_prev, delta)
        db = delta.copy()
        grads.append((dw, db))
        delta = net.weights[i] @ delta
    grads.reverse()
    return grads, delta


def backward(net, x, loss_kind, target, training=False, rng=None):
    """Gradient of the chosen loss at one sample, same shapes as the net."""
    cache = _forward_cache(net, np.asarray(x, dtype=np.float64),
                           training=training, rng=rng)
    y = cache[1][-1]
    _, dy = loss_value_and_grad(y, target, loss_kind)
    grads, _ = backprop(net, x, dout=dy, cache=cache)
    return grads


# ---------------------------------------------------------------------------
# Batched path with block-structured first-layer input. A block is either a
# dense (batch, width) array or a ("csr", data, indices, indptr, width) tuple.
# Dropout is not supported here (the trainers never use it).


def _block_width(block):
    if isinstance(block, tuple):
        return block[4]
    return block.shape[1]


def forward_blocks(net, blocks, batch):
    """Batched forward returning (pre-activations, activations per layer)."""
    if any(s.dropout > 0.0 for s in net.specs):
        raise ValidationError("block forward does not support dropout")
    total = sum(_block_width(b) for b in blocks)
    if total != net.input_width:
        raise ShapeError(f"block widths sum to {total}, expected {net.input_width}")
    w0 = net.weights[0]
    z = np.tile(net.biases[0], (batch, 1))
    off = 0
    for blk in blocks:
        width = _block_width(blk)
        wpart = w0[off:off + width, :]
        if isinstance(blk, tuple):
            _, data, indices, indptr, _ = blk
            csr_matmul(data, indices, indptr, wpart, z)
        else:
            z += blk @ wpart
        off += width
    zs, acts = [z], []
    a = _activate(z, net.specs[0].activation)
    acts.append(a)
    for i in range(1, len(net.specs)):
        z = a @ net.weights[i] + net.biases[i]
        if not np.isfinite(z).all():
            raise NumericError("non-finite pre-activation", layer=i)
        a = _activate(z, net.specs[i].activation)
        zs.append(z)
        acts.append(a)
    return zs, acts


def backprop_blocks(net, blocks, cache, dout, dx_block=None):
    """Batched gradients; optionally also dL/dX for one input block.

    Returns (grads, dx) where dx is None unless ``dx_block`` names a
    (dense) block index.
    """
    zs, acts = cache
    batch = dout.shape[0]
    grads = [None] * len(net.specs)
    delta = dout
    for i in reversed(range(1, len(net.specs))):
        spec = net.specs[i]
        delta = delta * _activation_grad(zs[i], acts[i], spec.activation)
        a_prev = acts[i - 1]
        grads[i] = (a_prev.T @ delta, delta.sum(axis=0))
        delta = delta @ net.weights[i].T
    spec = net.specs[0]
    delta = delta * _activation_grad(zs[0], acts[0], spec.activation)
    dw0 = np.zeros_like(net.weights[0])
    off = 0
    dx = None
    for bi, blk in enumerate(blocks):
        width = _block_width(blk)
        if isinstance(blk, tuple):
            _, data, indices, indptr, _ = blk
            csr_grad_weights(data, indices, indptr, delta, dw0[off:off + width, :])
        else:
            dw0[off:off + width, :] = blk.T @ delta
        if dx_block == bi:
            dx = delta @ net.weights[0][off:off + width, :].T
        off += width
    grads[0] = (dw0, delta.sum(axis=0))
    return grads, dx
