"""
Link package: noise, SINR and achievable rate.
"""
from .sinr import (
    ELECTRON_CHARGE,
    RATE_MAP,
    ColourChannel,
    ColourId,
    InterferenceMode,
    NoiseModel,
    achievable_rate,
    colour_sinr,
    effective_sinr,
    noise_variance,
    noma_sinr,
    sinr_from_amplitudes,
    to_db,
)

__all__ = [
    'ELECTRON_CHARGE',
    'RATE_MAP',
    'ColourChannel',
    'ColourId',
    'InterferenceMode',
    'NoiseModel',
    'achievable_rate',
    'colour_sinr',
    'effective_sinr',
    'noise_variance',
    'noma_sinr',
    'sinr_from_amplitudes',
    'to_db',
]
