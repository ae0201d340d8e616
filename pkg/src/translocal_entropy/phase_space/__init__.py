"""
Pontos, métricas, bolas e grades de amostragem dos espaços de fase.
"""
from translocal_entropy.phase_space.grids import (
    SampleGrid,
    estimate_grid_size,
    explicit_grid,
    sample_grid,
)
from translocal_entropy.phase_space.points import (
    BallSpec,
    MetricSpec,
    PhasePoint,
    SpaceKind,
    array_to_points,
    ball_prefix_length,
    batch_distance,
    distance,
    parse_point,
    points_to_array,
    to_cartesian,
)

__all__ = [
    'BallSpec', 'MetricSpec', 'PhasePoint', 'SampleGrid', 'SpaceKind',
    'array_to_points', 'ball_prefix_length', 'batch_distance', 'distance',
    'estimate_grid_size', 'explicit_grid', 'parse_point', 'points_to_array', 'sample_grid',
    'to_cartesian',
]
