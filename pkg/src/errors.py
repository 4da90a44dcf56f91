"""
Exceptions raised by the simulator.
"""
from typing import List, Optional


class VLCSimError(Exception):
    """Base class for all simulator errors"""


class DomainError(VLCSimError, ValueError):
    """A value lies outside the domain where the model is defined"""


class CoincidentEndpoints(VLCSimError, ValueError):
    """Transmitter and receiver share a position, so no direction exists"""


class AllZeroGains(VLCSimError, ValueError):
    """Every user has zero channel gain; fair allocation is undefined"""


class ZeroNoise(VLCSimError, ValueError):
    """Total noise is zero, so SINR is undefined"""


class MismatchedUsers(VLCSimError, ValueError):
    """Two inputs that must describe the same users do not"""


class EmptySweep(VLCSimError, ValueError):
    """The sweep grid has no points"""


class BracketError(VLCSimError, RuntimeError):
    """Calibration found no bandwidth in the bracket close to the targets"""


class ParseError(VLCSimError, ValueError):
    """A config document or result file is not well-formed"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        super().__init__(message)
        self.line = line
        self.column = column


class ConfigValidationError(VLCSimError, ValueError):
    """The config document is well-formed but violates an invariant"""

    def __init__(self, errors: List[str]):
        super().__init__("; ".join(errors))
        self.errors = list(errors)
