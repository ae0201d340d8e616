"""
Estimadores de entropia: restrita, pontual, translocal e de Lyapunov.
"""
from translocal_entropy.entropy.estimators import (
    CellCount,
    count_cell,
    restricted_entropy,
    translocal_entropy,
    translocal_radius,
    yz_entropy_function,
)
from translocal_entropy.entropy.lyapunov import (
    approach_rate,
    lyapunov_exponent,
    running_supremum,
    toral_translocal,
)
from translocal_entropy.entropy.rates import (
    RateEstimate,
    RateMode,
    Schedule,
    default_schedule,
    growth_rate,
)
from translocal_entropy.entropy.sweeps import run_cells

__all__ = [
    'CellCount', 'RateEstimate', 'RateMode', 'Schedule', 'approach_rate',
    'count_cell', 'default_schedule', 'growth_rate', 'lyapunov_exponent',
    'restricted_entropy', 'run_cells', 'running_supremum', 'toral_translocal',
    'translocal_entropy', 'translocal_radius', 'yz_entropy_function',
]
