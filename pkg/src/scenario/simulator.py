"""
Scenario assembly, single-point evaluation and position sweeps.
"""
import logging
import math
import sys
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

from joblib import Parallel, delayed
from tqdm import tqdm

from ..allocation import AllocationForm, AllocationScheme, UserGains, allocate
from ..channel import ConcentratorForm, Emitter, Receiver, los_gain
from ..errors import DomainError, EmptySweep, MismatchedUsers
from ..geometry import Point3, Room
from ..link import (
    ColourChannel,
    InterferenceMode,
    NoiseModel,
    achievable_rate,
    effective_sinr,
    noma_sinr,
    to_db,
)
from . import defaults

logger = logging.getLogger(__name__)

AGGREGATE = "aggregate"
TOTAL = "total"
ALL_USERS = "all"


class SystemKind(str, Enum):
    NOMA = "noma"
    WDM_NOMA = "wdm_noma"


class SweepAxis(str, Enum):
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class AccessPoint:
    """Ceiling emitter with its colour channels and the plain-NOMA equivalent channel"""
    emitter: Emitter
    colours: Tuple[ColourChannel, ...]
    total_power: float = defaults.NOMA_TOTAL_POWER_W
    responsivity: float = defaults.NOMA_RESPONSIVITY_A_PER_W


@dataclass(frozen=True)
class User:
    user_id: str
    receiver: Receiver


@dataclass(frozen=True)
class SystemConfig:
    """Everything needed to evaluate one user placement"""
    room: Room
    access_point: AccessPoint
    users: Tuple[User, ...]
    noise: NoiseModel
    scheme: AllocationScheme = AllocationScheme.FAIR
    system: SystemKind = SystemKind.NOMA
    interference_mode: InterferenceMode = InterferenceMode.AS_WRITTEN
    concentrator_form: ConcentratorForm = ConcentratorForm.STANDARD
    allocation_form: AllocationForm = AllocationForm.NORMALIZED

    def __post_init__(self):
        object.__setattr__(self, "scheme", AllocationScheme(self.scheme))
        object.__setattr__(self, "system", SystemKind(self.system))
        object.__setattr__(self, "interference_mode", InterferenceMode(self.interference_mode))
        object.__setattr__(self, "concentrator_form", ConcentratorForm(self.concentrator_form))
        object.__setattr__(self, "allocation_form", AllocationForm(self.allocation_form))
        object.__setattr__(self, "users", tuple(self.users))
        if not self.users:
            raise DomainError("at least 1 user is required")
        ids = [u.user_id for u in self.users]
        if len(set(ids)) != len(ids):
            raise DomainError(f"user ids must be unique: {ids}")
        if self.system is SystemKind.WDM_NOMA:
            colour_ids = {c.id for c in self.access_point.colours}
            if len(self.access_point.colours) != 4 or len(colour_ids) != 4:
                raise DomainError("wdm_noma needs exactly 4 colour channels with distinct ids")

    @property
    def user_ids(self) -> List[str]:
        return [u.user_id for u in self.users]

    def channels(self) -> List[Tuple[str, float, float]]:
        """(label, transmit power, responsivity) for each independent NOMA instance."""
        if self.system is SystemKind.WDM_NOMA:
            return [(c.id.value, c.optical_power, c.responsivity) for c in self.access_point.colours]
        return [(AGGREGATE, self.access_point.total_power, self.access_point.responsivity)]

    def user(self, user_id: str) -> User:
        for u in self.users:
            if u.user_id == user_id:
                return u
        raise MismatchedUsers(f"no user with id {user_id!r}; known users: {self.user_ids}")

    def with_user_position(self, user_id: str, position: Point3) -> "SystemConfig":
        target = self.user(user_id)
        moved = User(user_id, replace(target.receiver, pose=target.receiver.pose.moved_to(position)))
        return replace(self, users=tuple(moved if u.user_id == user_id else u for u in self.users))

    def with_bandwidth(self, bandwidth: float) -> "SystemConfig":
        return replace(self, noise=replace(self.noise, bandwidth=bandwidth))


@dataclass(frozen=True)
class SweepSpec:
    """Grid of positions for one mobile user along a horizontal axis"""
    mobile_user_id: str
    axis: SweepAxis = SweepAxis.Y
    start: float = defaults.SWEEP_START_M
    stop: float = defaults.SWEEP_STOP_M
    step: float = defaults.SWEEP_STEP_M

    def __post_init__(self):
        object.__setattr__(self, "axis", SweepAxis(self.axis))
        if not self.step > 0:
            raise DomainError("sweep step must be positive")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise DomainError("sweep bounds must be finite")

    def positions(self) -> List[float]:
        """start, start+step, ... up to stop; stop is kept when within tolerance of the grid."""
        count = math.floor((self.stop - self.start + defaults.GRID_TOLERANCE_M) / self.step) + 1
        if count < 1:
            raise EmptySweep(f"no grid point between {self.start} and {self.stop}")
        return [self.start + i * self.step for i in range(count)]

    def point_at(self, base: Point3, value: float, plane_z: float) -> Point3:
        if self.axis is SweepAxis.X:
            return Point3(value, base.y, plane_z)
        return Point3(base.x, value, plane_z)


@dataclass(frozen=True)
class LinkReport:
    """One output row: a user on one colour (or the aggregate) at one sweep position"""
    position_m: float
    user_id: str
    scheme: str
    system: str
    colour: str
    h: float
    a_k: float
    sinr: float
    sinr_db: float
    rate_bps: float


@dataclass(frozen=True)
class PointEvaluation:
    position_m: float
    reports: Tuple[LinkReport, ...]
    total_rate_bps: float
    fairness: float
    total: LinkReport

    def aggregates(self) -> List[LinkReport]:
        return [r for r in self.reports if r.colour == AGGREGATE]

    def user_rates(self) -> Dict[str, float]:
        return {r.user_id: r.rate_bps for r in self.aggregates()}

    def rows(self) -> List[LinkReport]:
        """Output rows: the per-user reports followed by the sum-rate row."""
        return [*self.reports, self.total]


def total_row(aggregates: List[LinkReport], bandwidth: float) -> LinkReport:
    """Sum-rate row: gains and coefficients summed over users, rate is the total sum rate."""
    rate = math.fsum(r.rate_bps for r in aggregates)
    try:
        sinr = effective_sinr(rate, bandwidth)
    except OverflowError:
        sinr = math.inf
    first = aggregates[0]
    return LinkReport(
        position_m=first.position_m,
        user_id=ALL_USERS,
        scheme=first.scheme,
        system=first.system,
        colour=TOTAL,
        h=math.fsum(r.h for r in aggregates),
        a_k=math.fsum(r.a_k for r in aggregates),
        sinr=sinr,
        sinr_db=to_db(sinr),
        rate_bps=rate,
    )


def jain_fairness(rates: List[float]) -> float:
    """Jain's index (sum r)^2 / (K sum r^2); 1.0 when every rate is zero."""
    squares = math.fsum(r * r for r in rates)
    if squares == 0:
        return 1.0
    return math.fsum(rates) ** 2 / (len(rates) * squares)


def evaluate_point(cfg: SystemConfig, position_m: float = math.nan) -> PointEvaluation:
    """
    Evaluate every user of a configuration at its current placement.

    Args:
        cfg: System configuration
        position_m: Sweep coordinate recorded in the rows (NaN outside a sweep)

    Returns:
        PointEvaluation with per-colour rows (WDM-NOMA only), one aggregate row
        per user, and the sum-rate row
    """
    ap = cfg.access_point
    gains = UserGains(tuple(
        (u.user_id, los_gain(ap.emitter, u.receiver, cfg.concentrator_form)) for u in cfg.users
    ))
    channel = gains.as_dict()
    for user_id, h in gains.gains:
        if h == 0.0:
            logger.warning(f"user {user_id} does not see the access point at position {position_m}")

    alloc = allocate(gains, cfg.scheme, cfg.allocation_form)
    coefficients = alloc.as_dict()
    bandwidth = cfg.noise.bandwidth
    wdm = cfg.system is SystemKind.WDM_NOMA
    scheme = cfg.scheme.value
    system = cfg.system.value

    def row(user_id: str, colour: str, sinr: float, rate: float) -> LinkReport:
        return LinkReport(
            position_m=position_m,
            user_id=user_id,
            scheme=scheme,
            system=system,
            colour=colour,
            h=channel[user_id],
            a_k=coefficients[user_id],
            sinr=sinr,
            sinr_db=to_db(sinr),
            rate_bps=rate,
        )

    reports = []
    per_user = {u: [] for u in gains.user_ids}
    last_sinr = {}
    for label, power, responsivity in cfg.channels():
        sinr = noma_sinr(alloc, gains, power, responsivity, ap.emitter.optics.efficiency,
                         cfg.noise, cfg.interference_mode)
        for user_id in gains.user_ids:
            rate = achievable_rate(sinr[user_id], bandwidth)
            per_user[user_id].append(rate)
            last_sinr[user_id] = sinr[user_id]
            if wdm:
                reports.append(row(user_id, label, sinr[user_id], rate))

    aggregates = []
    for user_id in gains.user_ids:
        rate = math.fsum(per_user[user_id])
        sinr = effective_sinr(rate, bandwidth) if wdm else last_sinr[user_id]
        aggregates.append(row(user_id, AGGREGATE, sinr, rate))
    reports.extend(aggregates)

    logger.debug(f"point {position_m}: gains={channel} coefficients={coefficients}")
    total = total_row(aggregates, bandwidth)
    return PointEvaluation(
        position_m=position_m,
        reports=tuple(reports),
        total_rate_bps=total.rate_bps,
        fairness=jain_fairness([r.rate_bps for r in aggregates]),
        total=total,
    )


def sweep_configs(cfg: SystemConfig, sweep: SweepSpec) -> List[Tuple[float, SystemConfig]]:
    """One configuration per grid position, with the mobile user moved on the communication plane."""
    base = cfg.user(sweep.mobile_user_id).receiver.pose.position
    placements = []
    for value in sweep.positions():
        point = sweep.point_at(base, value, cfg.room.comm_plane_z)
        cfg.room.check_position(point, f"user {sweep.mobile_user_id}")
        placements.append((value, cfg.with_user_position(sweep.mobile_user_id, point)))
    return placements


def run_sweep(cfg: SystemConfig, sweep: SweepSpec, n_jobs: int = 1,
              progress: bool = False) -> List[PointEvaluation]:
    """
    Evaluate the configuration at every sweep position.

    Every point is recomputed in full because allocation couples the users.
    Results come back in position order whatever n_jobs is.

    Args:
        cfg: System configuration
        sweep: Sweep grid
        n_jobs: joblib worker count; 1 evaluates sequentially in-process
        progress: Show a progress bar on stderr

    Returns:
        List of PointEvaluation ordered by position
    """
    placements = sweep_configs(cfg, sweep)
    logger.info(f"sweeping user {sweep.mobile_user_id} along {sweep.axis.value} "
                f"over {len(placements)} points ({cfg.system.value}, {cfg.scheme.value})")

    tasks = tqdm(placements, desc="sweep", file=sys.stderr, disable=not progress)
    points = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(evaluate_point)(point_cfg, value) for value, point_cfg in tasks
    )
    return list(points)


def rate_extrema(points: List[PointEvaluation]) -> Tuple[float, float]:
    """Smallest and largest per-user aggregate rate over a sweep."""
    rates = [r.rate_bps for p in points for r in p.aggregates()]
    if not rates:
        raise EmptySweep("sweep produced no rows")
    return min(rates), max(rates)


def mobile_user_peak(points: List[PointEvaluation], user_id: str) -> Optional[float]:
    """Sweep position where the given user's aggregate rate is largest."""
    best = max(points, key=lambda p: p.user_rates()[user_id], default=None)
    return best.position_m if best is not None else None
