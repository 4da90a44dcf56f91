"""
Schema package for the simulation config document.
"""
from .system_config import (
    AccessPointSection,
    ColourSection,
    ConfigDocument,
    NoiseSection,
    RoomSection,
    SweepSection,
    SwitchesSection,
    UserSection,
)
from .validators import SchemaValidator, format_validation_errors

__all__ = [
    'AccessPointSection',
    'ColourSection',
    'ConfigDocument',
    'NoiseSection',
    'RoomSection',
    'SweepSection',
    'SwitchesSection',
    'UserSection',
    'SchemaValidator',
    'format_validation_errors',
]
