"""
Allocation package: SIC ordering and NOMA power allocation.
"""
from .power_allocation import (
    AllocationForm,
    AllocationScheme,
    PowerAllocation,
    UserGains,
    allocate,
    equal_allocation,
    fair_allocation,
    sic_order,
)

__all__ = [
    'AllocationForm',
    'AllocationScheme',
    'PowerAllocation',
    'UserGains',
    'allocate',
    'equal_allocation',
    'fair_allocation',
    'sic_order',
]
