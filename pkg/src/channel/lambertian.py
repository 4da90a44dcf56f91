"""
Lambertian line-of-sight channel gain between a ceiling access point and a user.

    h = (m+1) A / (2 pi d^2) * cos^m(phi) * T * g(Psi) * cos(psi),  psi <= Psi
    h = 0,                                                          psi >  Psi
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum

from ..errors import DomainError
from ..geometry import Pose, link_angles

logger = logging.getLogger(__name__)


class ConcentratorForm(str, Enum):
    """Reading of the concentrator gain formula"""
    STANDARD = "standard"            # n^2 / sin^2(Psi)
    PAPER_LITERAL = "paper_literal"  # n / sin^2(Psi)


@dataclass(frozen=True)
class EmitterOptics:
    """Emitter beam shape and electro-optic efficiency"""
    semi_angle: float  # radians, half-power semi-angle
    efficiency: float  # W/A

    def __post_init__(self):
        if not 0 < self.semi_angle < math.pi / 2:
            raise DomainError("semi-angle at half power must lie in (0, pi/2)")
        if not self.efficiency > 0:
            raise DomainError("emitter efficiency must be positive")


@dataclass(frozen=True)
class ReceiverOptics:
    """Photodetector front end"""
    detector_area: float       # m^2
    fov: float                 # radians
    filter_gain: float = 1.0
    refractive_index: float = 1.5

    def __post_init__(self):
        if not self.detector_area > 0:
            raise DomainError("detector area must be positive")
        if not 0 < self.fov <= math.pi / 2:
            raise DomainError("field of view must lie in (0, pi/2]")
        if not self.filter_gain >= 0:
            raise DomainError("filter gain must be non-negative")
        if not self.refractive_index >= 1:
            raise DomainError("refractive index must be at least 1")


@dataclass(frozen=True)
class Emitter:
    """Access point geometry and optics"""
    pose: Pose
    optics: EmitterOptics


@dataclass(frozen=True)
class Receiver:
    """User geometry and optics"""
    pose: Pose
    optics: ReceiverOptics


def lambertian_order(semi_angle: float) -> float:
    """
    Lambertian emission order m = -1 / log2(cos(semi_angle)).

    Raises:
        DomainError: when the order is undefined or infinite
    """
    if not 0 < semi_angle < math.pi / 2:
        raise DomainError(f"semi-angle {semi_angle!r} rad outside (0, pi/2)")
    cos_half = math.cos(semi_angle)
    if cos_half <= 0 or cos_half >= 1:
        raise DomainError(f"cos(semi-angle) = {cos_half!r} gives no finite order")
    return -1.0 / math.log2(cos_half)


def concentrator_gain(refractive_index: float, fov: float,
                      form: ConcentratorForm = ConcentratorForm.STANDARD) -> float:
    """Gain of a non-imaging concentrator, constant inside the acceptance cone."""
    if refractive_index < 1:
        raise DomainError("refractive index must be at least 1")
    if not 0 < fov <= math.pi / 2:
        raise DomainError(f"field of view {fov!r} rad outside (0, pi/2]")
    sin_sq = math.sin(fov) ** 2
    if ConcentratorForm(form) is ConcentratorForm.PAPER_LITERAL:
        return refractive_index / sin_sq
    return refractive_index ** 2 / sin_sq


def los_gain(tx: Emitter, rx: Receiver,
             form: ConcentratorForm = ConcentratorForm.STANDARD) -> float:
    """
    LOS optical channel gain from an emitter to a receiver.

    Args:
        tx: Emitter pose and optics
        rx: Receiver pose and optics
        form: Which concentrator gain reading to apply

    Returns:
        Non-negative dimensionless gain; exactly 0 outside the FOV or behind the emitter
    """
    angles = link_angles(tx.pose, rx.pose)

    if angles.incidence > rx.optics.fov:
        return 0.0
    if angles.cos_irradiance <= 0 or angles.cos_incidence <= 0:
        return 0.0

    m = lambertian_order(tx.optics.semi_angle)
    g = concentrator_gain(rx.optics.refractive_index, rx.optics.fov, form)
    spread = (m + 1) * rx.optics.detector_area / (2 * math.pi * angles.distance ** 2)

    return (spread
            * angles.cos_irradiance ** m
            * rx.optics.filter_gain
            * g
            * angles.cos_incidence)
