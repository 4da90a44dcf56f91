"""
Channel package: Lambertian LOS gain model.
"""
from .lambertian import (
    ConcentratorForm,
    Emitter,
    EmitterOptics,
    Receiver,
    ReceiverOptics,
    concentrator_gain,
    lambertian_order,
    los_gain,
)

__all__ = [
    'ConcentratorForm',
    'Emitter',
    'EmitterOptics',
    'Receiver',
    'ReceiverOptics',
    'concentrator_gain',
    'lambertian_order',
    'los_gain',
]
