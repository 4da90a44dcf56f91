"""
Receiver noise, NOMA and per-colour SINR, and the rate map.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict

from ..allocation import PowerAllocation, UserGains, sic_order
from ..errors import DomainError, MismatchedUsers, ZeroNoise

logger = logging.getLogger(__name__)

ELECTRON_CHARGE = 1.602176634e-19  # C
RATE_MAP = "shannon"


class InterferenceMode(str, Enum):
    AS_WRITTEN = "as_written"  # every other user's amplitude interferes
    SIC = "sic"                # only users decoded after this one interfere


class ColourId(str, Enum):
    R = "R"
    Y = "Y"
    G = "G"
    B = "B"


@dataclass(frozen=True)
class NoiseModel:
    """Thermal plus shot noise at the photodetector"""
    noise_density: float           # N0, A^2/Hz
    bandwidth: float               # B, Hz
    dark_current: float = 0.0      # I_d, A
    background_power: float = 0.0  # P_bn, W
    charge: float = ELECTRON_CHARGE

    def __post_init__(self):
        if not self.bandwidth > 0:
            raise DomainError("receiver bandwidth must be positive")
        if min(self.noise_density, self.dark_current, self.background_power) < 0:
            raise DomainError("noise density, dark current and background power must be >= 0")
        if not (self.noise_density > 0 or self.dark_current > 0 or self.background_power > 0):
            raise DomainError("at least one noise source must be positive")


@dataclass(frozen=True)
class ColourChannel:
    """One laser colour: transmitted optical power and detector responsivity"""
    id: ColourId
    optical_power: float  # W
    responsivity: float   # A/W

    def __post_init__(self):
        object.__setattr__(self, "id", ColourId(self.id))
        if not self.optical_power > 0:
            raise DomainError(f"optical power of colour {self.id.value} must be positive")
        if not self.responsivity > 0:
            raise DomainError(f"responsivity of colour {self.id.value} must be positive")


def noise_variance(nm: NoiseModel, responsivity: float) -> float:
    """
    Total noise variance B*N0 + 2q(I_d + R*P_bn)*B in A^2.

    Raises:
        ZeroNoise: if the variance is zero
    """
    thermal = nm.bandwidth * nm.noise_density
    shot = 2 * nm.charge * (nm.dark_current + responsivity * nm.background_power) * nm.bandwidth
    variance = thermal + shot
    if variance <= 0:
        raise ZeroNoise("noise variance is zero; SINR is undefined")
    return variance


def sinr_from_amplitudes(signal: float, interference: float, noise_var: float) -> float:
    """signal^2 / (interference^2 + noise_var), with amplitudes in amps."""
    denominator = interference ** 2 + noise_var
    if denominator <= 0:
        raise ZeroNoise("interference plus noise is zero")
    return signal ** 2 / denominator


def noma_sinr(alloc: PowerAllocation, gains: UserGains, total_power: float,
              responsivity: float, efficiency: float, nm: NoiseModel,
              mode: InterferenceMode = InterferenceMode.AS_WRITTEN) -> Dict[str, float]:
    """
    Per-user SINR of a power-domain NOMA downlink.

    The desired amplitude of user k is a_k*P*R*h_k*eta. Interfering amplitudes
    travel the victim's channel h_k, are summed, then squared.

    Args:
        alloc: Power allocation coefficients
        gains: Channel gains of the same users
        total_power: Transmit power P (W)
        responsivity: Photodetector responsivity R (A/W)
        efficiency: Emitter efficiency eta (W/A)
        nm: Noise model
        mode: AS_WRITTEN counts every other user; SIC counts only users decoded later

    Returns:
        Dict of user id -> SINR (linear)
    """
    coefficients = alloc.as_dict()
    channel = gains.as_dict()
    if set(coefficients) != set(channel):
        raise MismatchedUsers(
            f"allocation users {sorted(coefficients)} differ from gain users {sorted(channel)}")

    noise_var = noise_variance(nm, responsivity)
    mode = InterferenceMode(mode)
    order = sic_order(gains)
    position = {u: i for i, u in enumerate(order)}

    sinr = {}
    for user_id in gains.user_ids:
        amplitude = total_power * responsivity * channel[user_id] * efficiency
        signal = coefficients[user_id] * amplitude
        if mode is InterferenceMode.SIC:
            interferers = order[position[user_id] + 1:]
        else:
            interferers = [u for u in order if u != user_id]
        interference = math.fsum(coefficients[u] for u in interferers) * amplitude
        sinr[user_id] = sinr_from_amplitudes(signal, interference, noise_var)
    return sinr


def colour_sinr(ch: ColourChannel, p_one: float, p_zero: float, sigma_sq: float,
                interference: float = 0.0) -> float:
    """
    Per-colour SINR R_c^2 (P_c1 - P_c0)^2 / (sigma_c^2 + I_c).

    With a single access point there is no inter-colour interference, I_c = 0.
    """
    if not p_one >= p_zero >= 0:
        raise DomainError("received powers must satisfy P_c1 >= P_c0 >= 0")
    denominator = sigma_sq + interference
    if denominator <= 0:
        raise ZeroNoise("noise plus interference is zero")
    return ch.responsivity ** 2 * (p_one - p_zero) ** 2 / denominator


def achievable_rate(sinr: float, bandwidth: float) -> float:
    """Shannon rate B*log2(1 + SINR) in bits/s."""
    if sinr < 0:
        raise DomainError(f"SINR must be non-negative, got {sinr!r}")
    if not bandwidth > 0:
        raise DomainError("bandwidth must be positive")
    return bandwidth * math.log1p(sinr) / math.log(2)


def effective_sinr(rate: float, bandwidth: float) -> float:
    """SINR a single Shannon link would need to carry `rate`."""
    return math.expm1(rate / bandwidth * math.log(2))


def to_db(sinr: float) -> float:
    return 10 * math.log10(sinr) if sinr > 0 else float("-inf")
