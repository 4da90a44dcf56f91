"""
Receiver bandwidth calibration against target per-user rate extrema.
"""
import logging
import math
from dataclasses import dataclass
from typing import Tuple

from ..errors import BracketError, DomainError
from . import defaults
from .simulator import SweepSpec, SystemConfig, rate_extrema, run_sweep

logger = logging.getLogger(__name__)

SLOPE_STEP = 1e-6  # decades


@dataclass(frozen=True)
class CalibrationResult:
    bandwidth_hz: float
    achieved_min_bps: float
    achieved_max_bps: float
    residual: float


def calibrate_bandwidth(cfg: SystemConfig, sweep: SweepSpec, target_min: float, target_max: float,
                        bracket: Tuple[float, float] = defaults.CALIBRATION_BRACKET_HZ,
                        tolerance: float = 1e-10, max_iterations: int = 200,
                        n_jobs: int = 1) -> CalibrationResult:
    """
    Find the bandwidth whose sweep extrema best match the targets.

    Minimizes (min/target_min - 1)^2 + (max/target_max - 1)^2 over log10(B) by
    bisecting on the sign of the objective's slope. Noise depends on B, so every
    trial bandwidth runs a full sweep.

    Args:
        cfg: System configuration (its bandwidth is replaced)
        sweep: Sweep grid
        target_min: Target for the smallest per-user rate (bits/s)
        target_max: Target for the largest per-user rate (bits/s)
        bracket: Bandwidth search interval in Hz
        tolerance: Bisection stops when the interval is narrower than this, in decades

    Returns:
        CalibrationResult with the fitted bandwidth, achieved extrema and residual

    Raises:
        BracketError: if the best bandwidth leaves an extremum more than a
            factor of 10 from its target
    """
    if not (target_min > 0 and target_max > 0):
        raise DomainError("calibration targets must be positive")
    low_hz, high_hz = bracket
    if not 0 < low_hz < high_hz:
        raise DomainError(f"invalid bandwidth bracket {bracket}")

    def evaluate(log_b: float) -> Tuple[float, float, float]:
        points = run_sweep(cfg.with_bandwidth(10 ** log_b), sweep, n_jobs=n_jobs)
        lo, hi = rate_extrema(points)
        return (lo / target_min - 1) ** 2 + (hi / target_max - 1) ** 2, lo, hi

    def slope(log_b: float) -> float:
        return evaluate(log_b + SLOPE_STEP)[0] - evaluate(log_b - SLOPE_STEP)[0]

    left, right = math.log10(low_hz), math.log10(high_hz)
    if slope(left) >= 0:
        best = left
    elif slope(right) <= 0:
        best = right
    else:
        for _ in range(max_iterations):
            if right - left <= tolerance:
                break
            middle = 0.5 * (left + right)
            if slope(middle) > 0:
                right = middle
            else:
                left = middle
        best = 0.5 * (left + right)

    residual, lo, hi = evaluate(best)
    bandwidth = 10 ** best
    ratios = (lo / target_min, hi / target_max)
    if not all(1 / defaults.CALIBRATION_MAX_FACTOR <= r <= defaults.CALIBRATION_MAX_FACTOR for r in ratios):
        raise BracketError(
            f"best bandwidth {bandwidth:.6g} Hz gives rates ({lo:.6g}, {hi:.6g}) bit/s, "
            f"not within a factor of {defaults.CALIBRATION_MAX_FACTOR:g} of "
            f"({target_min:.6g}, {target_max:.6g})")

    logger.info(f"calibrated bandwidth {bandwidth:.6g} Hz, extrema ({lo:.6g}, {hi:.6g}) bit/s, "
                f"residual {residual:.3g}")
    return CalibrationResult(bandwidth_hz=bandwidth, achieved_min_bps=lo,
                             achieved_max_bps=hi, residual=residual)
