"""
Room coordinates, poses and the link geometry between an access point and a user.

Right-handed frame, z up, origin at a floor corner, all lengths in metres.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from ..errors import CoincidentEndpoints, DomainError

logger = logging.getLogger(__name__)

UNIT_NORMAL_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Point3:
    """A position or direction in room coordinates"""
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"coordinate {name} must be finite, got {value!r}")

    @classmethod
    def from_sequence(cls, values) -> "Point3":
        x, y, z = (float(v) for v in values)
        return cls(x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))


DOWN = Point3(0.0, 0.0, -1.0)
UP = Point3(0.0, 0.0, 1.0)


@dataclass(frozen=True)
class Room:
    """Empty rectangular room with a horizontal communication plane"""
    width_x: float
    length_y: float
    height_z: float
    comm_plane_z: float
    wall_reflectivity: float = 0.8  # carried for completeness; LOS math ignores it

    def __post_init__(self):
        if not (self.width_x > 0 and self.length_y > 0 and self.height_z > 0):
            raise DomainError("room dimensions must be positive")
        if not 0 <= self.comm_plane_z < self.height_z:
            raise DomainError("communication plane must satisfy 0 <= z < height")
        if not 0 <= self.wall_reflectivity <= 1:
            raise DomainError("wall reflectivity must lie in [0, 1]")

    def contains(self, point: Point3) -> bool:
        """Check whether a point lies inside the room volume"""
        return (0 <= point.x <= self.width_x and
                0 <= point.y <= self.length_y and
                0 <= point.z <= self.height_z)

    def check_position(self, point: Point3, label: str) -> bool:
        """Log a warning for positions outside the room; positions are never clamped."""
        inside = self.contains(point)
        if not inside:
            logger.warning(f"{label} at ({point.x}, {point.y}, {point.z}) lies outside the room")
        return inside


@dataclass(frozen=True)
class Pose:
    """Position plus the unit normal a device faces along"""
    position: Point3
    normal: Point3

    def __post_init__(self):
        length = self.normal.norm()
        if abs(length - 1.0) > UNIT_NORMAL_TOLERANCE:
            raise DomainError(f"normal must be a unit vector, |n| = {length!r}")

    def moved_to(self, position: Point3) -> "Pose":
        return Pose(position=position, normal=self.normal)


@dataclass(frozen=True)
class LinkAngles:
    """Irradiance angle at the emitter, incidence angle at the receiver, and range"""
    irradiance: float
    incidence: float
    distance: float
    cos_irradiance: float
    cos_incidence: float


def distance(a: Point3, b: Point3) -> float:
    """Euclidean distance between two points in metres."""
    return float(np.linalg.norm(b.as_array() - a.as_array()))


def link_angles(tx: Pose, rx: Pose) -> LinkAngles:
    """
    Compute the angles that enter the LOS channel gain.

    Args:
        tx: Emitter pose
        rx: Receiver pose

    Returns:
        LinkAngles with both angles in [0, pi] and the tx-rx distance

    Raises:
        CoincidentEndpoints: if both poses share a position
    """
    offset = rx.position.as_array() - tx.position.as_array()
    d = float(np.linalg.norm(offset))
    if d == 0.0:
        raise CoincidentEndpoints("transmitter and receiver positions coincide")

    direction = offset / d
    cos_phi = float(np.clip(np.dot(tx.normal.as_array(), direction), -1.0, 1.0))
    cos_psi = float(np.clip(np.dot(rx.normal.as_array(), -direction), -1.0, 1.0))

    return LinkAngles(
        irradiance=math.acos(cos_phi),
        incidence=math.acos(cos_psi),
        distance=d,
        cos_irradiance=cos_phi,
        cos_incidence=cos_psi,
    )
