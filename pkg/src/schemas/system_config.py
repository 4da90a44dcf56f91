"""
Schema definitions for the simulation config document.

Angles are degrees in the document and radians everywhere else.
"""
import math
from typing import Annotated, List, Tuple

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, confloat, field_validator, model_validator

from ..allocation import AllocationForm, AllocationScheme
from ..channel import ConcentratorForm, Emitter, EmitterOptics, Receiver, ReceiverOptics
from ..geometry import Point3, Pose, Room
from ..link import ColourChannel, ColourId, InterferenceMode, NoiseModel
from ..scenario import AccessPoint, SweepAxis, SweepSpec, SystemConfig, SystemKind, User
from ..scenario import defaults

Vector = Tuple[float, float, float]
PositiveFloat = confloat(gt=0, allow_inf_nan=False)
NonNegativeFloat = confloat(ge=0, allow_inf_nan=False)


def _unit(vector: Vector) -> Vector:
    length = math.sqrt(sum(c * c for c in vector))
    if abs(length - 1.0) > 1e-9:
        raise ValueError(f"normal must be a unit vector, |n| = {length}")
    return vector


UnitVector = Annotated[Vector, AfterValidator(_unit)]


class Section(BaseModel):
    """Base for every section: unknown keys are rejected"""
    model_config = ConfigDict(extra="forbid", frozen=True)


class RoomSection(Section):
    """Room dimensions in metres"""
    width_x: PositiveFloat = defaults.ROOM_WIDTH_X
    length_y: PositiveFloat = defaults.ROOM_LENGTH_Y
    height_z: PositiveFloat = defaults.ROOM_HEIGHT_Z
    comm_plane_z: NonNegativeFloat = defaults.COMM_PLANE_Z
    wall_reflectivity: confloat(ge=0, le=1) = defaults.WALL_REFLECTIVITY

    @model_validator(mode="after")
    def plane_below_ceiling(self):
        if self.comm_plane_z >= self.height_z:
            raise ValueError("comm_plane_z must be below height_z")
        return self


class AccessPointSection(Section):
    """Ceiling access point"""
    position: Vector = defaults.AP_POSITION
    normal: UnitVector = defaults.AP_NORMAL
    semi_angle_deg: confloat(gt=0, lt=90) = Field(defaults.SEMI_ANGLE_DEG, description="degrees")
    efficiency: PositiveFloat = defaults.EFFICIENCY_W_PER_A
    total_power: PositiveFloat = Field(defaults.NOMA_TOTAL_POWER_W, description="plain NOMA P_t, W")
    responsivity: PositiveFloat = Field(defaults.NOMA_RESPONSIVITY_A_PER_W,
                                        description="plain NOMA responsivity, A/W")


class ColourSection(Section):
    """One laser colour"""
    id: ColourId
    optical_power: PositiveFloat
    responsivity: PositiveFloat


class UserSection(Section):
    """One receiver"""
    id: str = Field(min_length=1)
    position: Vector
    normal: UnitVector = defaults.RX_NORMAL
    detector_area: PositiveFloat = Field(defaults.DETECTOR_AREA_M2, description="m^2")
    fov_deg: confloat(gt=0, le=90) = Field(defaults.FOV_DEG, description="degrees")
    filter_gain: NonNegativeFloat = defaults.FILTER_GAIN
    refractive_index: confloat(ge=1) = defaults.REFRACTIVE_INDEX


class NoiseSection(Section):
    """Receiver noise"""
    noise_density: NonNegativeFloat = Field(defaults.NOISE_DENSITY_A2_PER_HZ, description="A^2/Hz")
    bandwidth: PositiveFloat = Field(defaults.BANDWIDTH_HZ, description="Hz")
    dark_current: NonNegativeFloat = defaults.DARK_CURRENT_A
    background_power: NonNegativeFloat = defaults.BACKGROUND_POWER_W

    @model_validator(mode="after")
    def some_noise(self):
        if self.noise_density == 0 and self.dark_current == 0 and self.background_power == 0:
            raise ValueError("at least one of noise_density, dark_current, background_power must be positive")
        return self


class SweepSection(Section):
    """Mobile user sweep"""
    mobile_user: str
    axis: SweepAxis = SweepAxis(defaults.SWEEP_AXIS)
    start: float = defaults.SWEEP_START_M
    stop: float = defaults.SWEEP_STOP_M
    step: PositiveFloat = defaults.SWEEP_STEP_M

    @model_validator(mode="after")
    def ordered(self):
        if self.start > self.stop:
            raise ValueError("sweep start must not exceed stop")
        return self


class SwitchesSection(Section):
    """Model-ambiguity switches"""
    interference_mode: InterferenceMode = InterferenceMode.AS_WRITTEN
    concentrator_form: ConcentratorForm = ConcentratorForm.STANDARD
    allocation_form: AllocationForm = AllocationForm.NORMALIZED


def _default_colours() -> List[ColourSection]:
    return [ColourSection(id=c, optical_power=p, responsivity=r) for c, p, r in defaults.COLOURS]


class ConfigDocument(Section):
    """Complete simulation config"""
    room: RoomSection = Field(default_factory=RoomSection)
    access_point: AccessPointSection = Field(default_factory=AccessPointSection)
    colours: List[ColourSection] = Field(default_factory=_default_colours)
    users: List[UserSection]
    noise: NoiseSection = Field(default_factory=NoiseSection)
    scheme: AllocationScheme = AllocationScheme.FAIR
    system: SystemKind = SystemKind.NOMA
    sweep: SweepSection
    switches: SwitchesSection = Field(default_factory=SwitchesSection)

    @field_validator("users")
    @classmethod
    def at_least_one_user(cls, users):
        if len(users) < 1:
            raise ValueError("at least 1 user is required")
        ids = [u.id for u in users]
        if len(set(ids)) != len(ids):
            raise ValueError(f"user ids must be unique, got {ids}")
        return users

    @model_validator(mode="after")
    def consistent(self):
        if self.system is SystemKind.WDM_NOMA:
            if len(self.colours) != 4 or len({c.id for c in self.colours}) != 4:
                raise ValueError("wdm_noma needs exactly 4 colour channels with distinct ids")
        if self.sweep.mobile_user not in {u.id for u in self.users}:
            raise ValueError(f"sweep.mobile_user {self.sweep.mobile_user!r} is not a configured user")
        return self

    def to_system_config(self) -> SystemConfig:
        """Build the validated domain configuration (radians, dataclasses)."""
        ap = self.access_point
        emitter = Emitter(
            pose=Pose(Point3.from_sequence(ap.position), Point3.from_sequence(ap.normal)),
            optics=EmitterOptics(semi_angle=math.radians(ap.semi_angle_deg), efficiency=ap.efficiency),
        )
        users = tuple(
            User(u.id, Receiver(
                pose=Pose(Point3.from_sequence(u.position), Point3.from_sequence(u.normal)),
                optics=ReceiverOptics(
                    detector_area=u.detector_area,
                    fov=math.radians(u.fov_deg),
                    filter_gain=u.filter_gain,
                    refractive_index=u.refractive_index,
                ),
            ))
            for u in self.users
        )
        return SystemConfig(
            room=Room(**self.room.model_dump()),
            access_point=AccessPoint(
                emitter=emitter,
                colours=tuple(ColourChannel(c.id, c.optical_power, c.responsivity) for c in self.colours),
                total_power=ap.total_power,
                responsivity=ap.responsivity,
            ),
            users=users,
            noise=NoiseModel(**self.noise.model_dump()),
            scheme=self.scheme,
            system=self.system,
            interference_mode=self.switches.interference_mode,
            concentrator_form=self.switches.concentrator_form,
            allocation_form=self.switches.allocation_form,
        )

    def to_sweep_spec(self) -> SweepSpec:
        s = self.sweep
        return SweepSpec(mobile_user_id=s.mobile_user, axis=s.axis, start=s.start, stop=s.stop, step=s.step)
