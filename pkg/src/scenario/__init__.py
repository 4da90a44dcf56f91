"""
Scenario package: system assembly, sweeps and bandwidth calibration.
"""
from .calibration import CalibrationResult, calibrate_bandwidth
from .simulator import (
    AGGREGATE,
    ALL_USERS,
    AccessPoint,
    LinkReport,
    PointEvaluation,
    SweepAxis,
    SweepSpec,
    SystemConfig,
    SystemKind,
    TOTAL,
    User,
    evaluate_point,
    jain_fairness,
    mobile_user_peak,
    rate_extrema,
    run_sweep,
    total_row,
)

__all__ = [
    'AGGREGATE',
    'ALL_USERS',
    'AccessPoint',
    'CalibrationResult',
    'LinkReport',
    'PointEvaluation',
    'SweepAxis',
    'SweepSpec',
    'SystemConfig',
    'SystemKind',
    'TOTAL',
    'User',
    'calibrate_bandwidth',
    'evaluate_point',
    'jain_fairness',
    'mobile_user_peak',
    'rate_extrema',
    'run_sweep',
    'total_row',
]
