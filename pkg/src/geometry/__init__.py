"""
Geometry package: room, points, poses and link angles.
"""
from .coordinates import (
    DOWN,
    UP,
    LinkAngles,
    Point3,
    Pose,
    Room,
    distance,
    link_angles,
)

__all__ = [
    'DOWN',
    'UP',
    'LinkAngles',
    'Point3',
    'Pose',
    'Room',
    'distance',
    'link_angles',
]
