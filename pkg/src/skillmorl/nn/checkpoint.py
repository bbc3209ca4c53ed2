"""Network checkpoints: a single .npz container per network.

Layout (format version 1): ``format_version`` scalar, ``input_width``
scalar, per-layer ``widths``/``activations``/``dropouts`` arrays and one
``w{i}``/``b{i}`` pair per layer. Arrays are stored as raw float64, so a
save/load round trip is bit-exact.
"""

import numpy as np

from ..errors import ValidationError
from .layers import ACTIVATIONS, LayerSpec, Network

FORMAT_VERSION = 1


def save_network(path, net):
    arrays = {
        "format_version": np.int64(FORMAT_VERSION),
        "input_width": np.int64(net.input_width),
        "widths": np.array([s.width for s in net.specs], dtype=np.int64),
        "activations": np.array(
            [ACTIVATIONS.index(s.activation) for s in net.specs], dtype=np.int64
        ),
        "dropouts": np.array([s.dropout for s in net.specs], dtype=np.float64),
    }
    for i, (w, b) in enumerate(zip(net.weights, net.biases)):
        arrays[f"w{i}"] = w
        arrays[f"b{i}"] = b
    with open(path, "wb") as fh:
        np.savez(fh, **arrays)


def load_network(path):
    with np.load(path) as data:
        version = int(data["format_version"])
        if version != FORMAT_VERSION:
            raise ValidationError(
                f"unsupported checkpoint format version {version}", key="format_version"
            )
        widths = data["widths"]
        acts = data["activations"]
        drops = data["dropouts"]
        specs = [
            LayerSpec(int(w), ACTIVATIONS[int(a)], float(d))
            for w, a, d in zip(widths, acts, drops)
        ]
        weights = [data[f"w{i}"].copy() for i in range(len(specs))]
        biases = [data[f"b{i}"].copy() for i in range(len(specs))]
        return Network(int(data["input_width"]), specs, weights, biases)
