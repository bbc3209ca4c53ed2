from .checkpoint import load_network, save_network
from .layers import (
    LayerSpec,
    Network,
    backprop,
    backprop_blocks,
    backward,
    forward,
    forward_blocks,
    init_network,
    loss_value_and_grad,
)
from .optim import AdamState, adam_step, init_adam, soft_update

__all__ = [
    "AdamState",
    "LayerSpec",
    "Network",
    "adam_step",
    "backprop",
    "backprop_blocks",
    "backward",
    "forward",
    "forward_blocks",
    "init_adam",
    "init_network",
    "load_network",
    "loss_value_and_grad",
    "save_network",
    "soft_update",
]
