"""
Planejamento da resolução das grades de amostragem por célula (n, ε).

A resolução ideal é ε·L^{-(n-1)}; quando a grade correspondente excede o
orçamento de pontos, a resolução é engrossada até caber e a célula recebe
um aviso, em vez de abortar a varredura.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.phase_space.grids import SampleGrid, estimate_grid_size, sample_grid
from translocal_entropy.phase_space.points import BallSpec, SpaceKind, ball_prefix_length
from translocal_entropy.separated.counting import required_resolution, separation_length
from translocal_entropy.utils.constants import LOG_RADIUS_TOLERANCE
from translocal_entropy.utils.settings import current_settings

__status__ = 'Production'

logger = logging.getLogger(__name__)

PROBE_POINTS = 257
PROBE_STEPS = 8
COARSENING_MARGIN = 1.01


@dataclass(frozen=True, eq=False)
class PlannedGrid:
    """
    Uma grade planejada para uma célula de varredura.

    Attributes:
        grid (SampleGrid): A grade construída.
        expansion (float | None): Expansão usada no planejamento.
        warnings (tuple[str, ...]): Avisos de engrossamento.
    """
    grid: SampleGrid
    expansion: float | None
    warnings: tuple[str, ...]


def expansion_bound(system: SystemDescriptor, ball: BallSpec) -> float | None:
    """
    Expansão máxima observada ao longo de órbitas curtas de pontos da bola.

    Só é calculada em espaços unidimensionais com regra de derivada; a
    estimativa nunca excede a constante de Lipschitz global.

    Returns:
        float | None: A expansão local, ou None quando não se aplica.
    """
    if system.kind not in (SpaceKind.CIRCLE, SpaceKind.INTERVAL) or not system.rule.has_derivative:
        return None
    center = ball.center.coords[0]
    radius = min(ball.radius, 0.5)
    states = np.linspace(center - radius, center + radius, PROBE_POINTS)
    if system.kind is SpaceKind.CIRCLE:
        states = np.mod(states, 1.0)
    else:
        states = np.clip(states, 0.0, 1.0)
    current = states[:, None]
    observed = 0.0
    with np.errstate(divide='ignore', invalid='ignore'):
        for _ in range(PROBE_STEPS):
            slopes = np.abs(system.rule.derivative(current))
            finite = slopes[np.isfinite(slopes)]
            if finite.size:
                observed = max(observed, float(finite.max()))
            current = system.rule.apply(current)
    if observed <= 0.0:
        return None
    return min(observed, system.lipschitz)


def _symbolic_resolution(system: SystemDescriptor, n: int, epsilon: float) -> float:
    beta = system.metric.beta
    window = n - 1 + separation_length(epsilon, beta)
    return beta ** (-(window - 0.5))


def _budget_resolution(ball: BallSpec, system: SystemDescriptor, budget: int) -> float:
    resolution = ball.radius
    while estimate_grid_size(ball, resolution / 2.0, system.metric) <= budget:
        resolution /= 2.0
    return resolution


def plan_grid(
    system: SystemDescriptor,
    ball: BallSpec,
    n: int,
    epsilon: float,
    budget: int | None = None,
) -> PlannedGrid:
    """
    Constrói a grade de uma bola com resolução adequada à célula (n, ε).

    Args:
        system (SystemDescriptor): O sistema.
        ball (BallSpec): A bola amostrada.
        n (int): Comprimento das órbitas.
        epsilon (float): Escala de separação.
        budget (int | None, optional): Limite de pontos. Defaults to o
            orçamento global.

    Returns:
        PlannedGrid: A grade, a expansão usada e os avisos.
    """
    cap = current_settings().point_budget if budget is None else budget
    warnings = []
    expansion = None
    if system.is_symbolic:
        resolution = min(_symbolic_resolution(system, n, epsilon), ball.radius)
    else:
        expansion = expansion_bound(system, ball)
        resolution = required_resolution(system, n, epsilon, expansion)
        if resolution <= 0.0:
            resolution = _budget_resolution(ball, system, cap)
            warnings.append(f'Sem expansão finita conhecida; resolução limitada pelo orçamento ({resolution:.3g}).')
        resolution = min(resolution, ball.radius)
    size = estimate_grid_size(ball, resolution, system.metric)
    if size > cap:
        if system.is_symbolic:
            fixed = ball_prefix_length(ball, system.metric)
            free = max(int(math.log(cap) / math.log(system.metric.alphabet_size)), 0)
            resolution = min(system.metric.beta ** (-(fixed + free - 0.5)), ball.radius)
        else:
            dimension = 2 if system.kind is SpaceKind.DISK else ball.center.dimension
            while estimate_grid_size(ball, resolution, system.metric) > cap:
                ratio = estimate_grid_size(ball, resolution, system.metric) / cap
                resolution *= max(ratio ** (1.0 / dimension), 1.0 + LOG_RADIUS_TOLERANCE) * COARSENING_MARGIN
            resolution = min(resolution, ball.radius)
        warnings.append(f'Grade engrossada para caber no orçamento de {cap} pontos (n = {n}, ε = {epsilon:g}).')
    for message in warnings:
        logger.warning(message)
    grid = sample_grid(ball, resolution, system.metric, budget=cap)
    return PlannedGrid(grid=grid, expansion=expansion, warnings=tuple(warnings))
