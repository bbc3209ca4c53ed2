"""Domain types for the 2D differential-drive world."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import ValidationError

SCENARIOS = ("static", "sar", "ts", "rg")

ENTITY_KINDS = ("obstacle", "victim", "fire", "treasure", "enemy", "gold", "gem", "home")

# Fixed camera kind codes; cell value = code / 10. Gold and gems share the
# resource code.
KIND_CODES = {
    "obstacle": 2,
    "victim": 4,
    "fire": 5,
    "treasure": 6,
    "enemy": 7,
    "gold": 8,
    "gem": 8,
    "home": 9,
}

N_PROXIMITY = 16
CAMERA_CELLS = 64 * 64
OBS_WIDTH = N_PROXIMITY + CAMERA_CELLS


@dataclass
class RobotState:
    x: float
    y: float
    heading: float  # radians, normalised to (-pi, pi]
    left_rpm: float = 0.0
    right_rpm: float = 0.0


@dataclass(frozen=True)
class Action:
    """Wheel command: normalised forces in [0,1], directions exactly +-1."""

    f_left: float
    f_right: float
    d_left: int
    d_right: int

    def __post_init__(self):
        if not (0.0 <= self.f_left <= 1.0 and 0.0 <= self.f_right <= 1.0):
            raise ValidationError("wheel forces must lie in [0, 1]", key="force")
        if self.d_left not in (-1, 1) or self.d_right not in (-1, 1):
            raise ValidationError("wheel directions must be -1 or +1", key="direction")

    def to_array(self):
        return np.array(
            [self.f_left, self.f_right, float(self.d_left), float(self.d_right)]
        )


@dataclass
class Entity:
    kind: str
    x: float
    y: float
    radius: float
    value: float = 0.0  # treasure worth; unused otherwise
    active: bool = True

    def __post_init__(self):
        if self.kind not in ENTITY_KINDS:
            raise ValidationError(f"unknown entity kind {self.kind!r}", key="kind")
        if self.radius <= 0:
            raise ValidationError("entity radius must be positive", key="radius")

    @property
    def code(self):
        return KIND_CODES[self.kind]


@dataclass
class Observation:
    """16 proximity readings plus the flattened 64x64 egocentric camera."""

    proximity: np.ndarray
    camera: np.ndarray

    def vector(self):
        return np.concatenate([self.proximity, self.camera])


@dataclass
class ScenarioConfig:
    scenario: str = "static"
    arena_size: float = 10.0
    entities: list = field(default_factory=list)
    spawn_region: tuple = ((1.5, 8.5), (1.5, 8.5))
    victim_death_prob: float = 0.001
    enemy_attack_prob: float = 0.10
    nonstationary: bool = False
    relocation_fraction: float = 0.25
    relocation_period: int = 100
    episode_length: int = 150
    seed: int = 0
    # physics
    v_max: float = 0.5            # m/s at full force
    wheel_base: float = 0.38      # m
    wheel_radius: float = 0.0975  # m
    dt: float = 0.1               # s
    robot_radius: float = 0.2     # m
    sensor_range: float = 1.0     # m
    camera_window: float = 4.0    # m, square window ahead of the robot

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ValidationError(f"unknown scenario {self.scenario!r}", key="scenario")
        if not 0.0 <= self.relocation_fraction <= 1.0:
            raise ValidationError("relocation_fraction must lie in [0, 1]",
                                  key="relocation_fraction")
        for name in ("victim_death_prob", "enemy_attack_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValidationError(f"{name} must lie in [0, 1]", key=name)
        if self.scenario == "rg":
            homes = [e for e in self.entities if e.kind == "home"]
            if len(homes) != 1:
                raise ValidationError("rg scenario requires exactly one home entity",
                                      key="entities")
        for e in self.entities:
            margin = e.radius
            if not (0 <= e.x <= self.arena_size and 0 <= e.y <= self.arena_size):
                raise ValidationError(
                    f"entity at ({e.x}, {e.y}) outside the arena", key="entities"
                )
            del margin

    @property
    def max_rpm(self):
        return self.v_max / (2.0 * np.pi * self.wheel_radius) * 60.0
