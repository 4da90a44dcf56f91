"""
NOMA user ordering and power allocation coefficients.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from ..errors import AllZeroGains, DomainError

logger = logging.getLogger(__name__)

SUM_TOLERANCE = 1e-12


class AllocationScheme(str, Enum):
    FAIR = "fair"
    EQUAL = "equal"


class AllocationForm(str, Enum):
    """Reading of the fair allocation formula"""
    NORMALIZED = "normalized"        # a_k = h_(K-k+1) / sum_i h_i
    PAPER_LITERAL = "paper_literal"  # a_k = h_(K-k+1) / sum_{i>k} h_(i), renormalized


@dataclass(frozen=True)
class UserGains:
    """Channel gain per user, in caller order"""
    gains: Tuple[Tuple[str, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "gains", tuple((str(u), float(h)) for u, h in self.gains))
        if not self.gains:
            raise DomainError("at least one user gain is required")
        ids = [u for u, _ in self.gains]
        if len(set(ids)) != len(ids):
            raise DomainError(f"user ids must be unique: {ids}")
        for user_id, h in self.gains:
            if not (math.isfinite(h) and h >= 0):
                raise DomainError(f"gain for {user_id} must be finite and >= 0, got {h!r}")

    @property
    def user_ids(self) -> List[str]:
        return [u for u, _ in self.gains]

    def as_dict(self) -> Dict[str, float]:
        return dict(self.gains)

    def __len__(self) -> int:
        return len(self.gains)


@dataclass(frozen=True)
class PowerAllocation:
    """Power fractions per user; they always sum to one"""
    coefficients: Tuple[Tuple[str, float], ...]
    scheme: AllocationScheme

    def __post_init__(self):
        total = math.fsum(a for _, a in self.coefficients)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise DomainError(f"allocation coefficients sum to {total!r}, not 1")
        for user_id, a in self.coefficients:
            if not 0 <= a <= 1:
                raise DomainError(f"coefficient for {user_id} outside [0, 1]: {a!r}")

    @property
    def user_ids(self) -> List[str]:
        return [u for u, _ in self.coefficients]

    def as_dict(self) -> Dict[str, float]:
        return dict(self.coefficients)


def sic_order(g: UserGains) -> List[str]:
    """
    Decoding order: ascending channel gain, ties broken by ascending user id.

    The first user is the weakest; it gets the most power and is decoded first.
    """
    return [u for u, _ in sorted(g.gains, key=lambda item: (item[1], item[0]))]


def fair_allocation(g: UserGains,
                    form: AllocationForm = AllocationForm.NORMALIZED) -> PowerAllocation:
    """
    Gain-proportional allocation: the k-th weakest user gets a share proportional
    to the k-th strongest gain, so weaker channels receive more power.

    Args:
        g: Channel gains
        form: Normalized reading (default) or the formula exactly as typeset

    Returns:
        PowerAllocation in the same user order as g

    Raises:
        AllZeroGains: when every gain is zero
    """
    gains = g.as_dict()
    order = sic_order(g)
    ascending = [gains[u] for u in order]
    K = len(order)

    if not any(h > 0 for h in ascending):
        raise AllZeroGains("fair allocation needs at least one non-zero gain")

    # k is 0-based here; the k-th weakest user pairs with the k-th strongest gain
    numerators = [ascending[K - 1 - k] for k in range(K)]

    if AllocationForm(form) is AllocationForm.PAPER_LITERAL:
        raw = []
        for k in range(K):
            # the last user's empty sum is read as the strongest gain
            denominator = math.fsum(ascending[k + 1:]) if k < K - 1 else ascending[-1]
            raw.append(numerators[k] / denominator)
        total = math.fsum(raw)
        if abs(total - 1.0) > SUM_TOLERANCE:
            logger.warning(f"paper_literal allocation summed to {total:.6g}; renormalized to 1")
        shares = [a / total for a in raw]
    else:
        total = math.fsum(ascending)
        shares = [h / total for h in numerators]

    by_user = dict(zip(order, shares))
    return PowerAllocation(
        coefficients=tuple((u, by_user[u]) for u in g.user_ids),
        scheme=AllocationScheme.FAIR,
    )


def equal_allocation(g: UserGains) -> PowerAllocation:
    """Every user receives 1/K of the power."""
    K = len(g)
    return PowerAllocation(
        coefficients=tuple((u, 1.0 / K) for u in g.user_ids),
        scheme=AllocationScheme.EQUAL,
    )


def allocate(g: UserGains, scheme: AllocationScheme,
             form: AllocationForm = AllocationForm.NORMALIZED) -> PowerAllocation:
    """Dispatch on the configured scheme."""
    if AllocationScheme(scheme) is AllocationScheme.EQUAL:
        return equal_allocation(g)
    return fair_allocation(g, form)
