"""
Conjuntos Z para a pressão de Carathéodory e seus substitutos amostrais.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.phase_space.grids import sample_grid
from translocal_entropy.phase_space.points import BallSpec, PhasePoint, points_to_array
from translocal_entropy.separated.planning import plan_grid
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegionSpec:
    """
    União finita de bolas fechadas ou lista explícita de pontos.

    Attributes:
        balls (tuple[BallSpec, ...]): As bolas da união.
        points (tuple[PhasePoint, ...]): Pontos explícitos.
    """
    balls: tuple[BallSpec, ...] = ()
    points: tuple[PhasePoint, ...] = ()

    def __post_init__(self) -> None:
        if not self.balls and not self.points:
            raise ContractViolationError(' ERRO: Região vazia.')

    @classmethod
    def whole_space(cls, system: SystemDescriptor, anchor: PhasePoint) -> RegionSpec:
        return cls(balls=(BallSpec(anchor, system.metric.whole_space_radius()),))

    @classmethod
    def from_points(cls, *points: PhasePoint) -> RegionSpec:
        return cls(points=tuple(points))

    def union(self, other: RegionSpec) -> RegionSpec:
        return RegionSpec(self.balls + other.balls, self.points + other.points)

    def check_system(self, system: SystemDescriptor) -> None:
        """
        Raises:
            ContractViolationError: Se a região não estiver no espaço do
                sistema ou o sistema for simbólico.
        """
        if system.is_symbolic:
            raise ContractViolationError(' ERRO: Coberturas de Carathéodory exigem um espaço contínuo.')
        centers = [ball.center for ball in self.balls] + list(self.points)
        if any(point.kind is not system.kind for point in centers):
            raise ContractViolationError(' ERRO: A região não pertence ao espaço do sistema.')


@dataclass(frozen=True, eq=False)
class RegionSurrogate:
    """
    Amostra finita de uma região, comum a todos os níveis de cobertura.

    Attributes:
        states (np.ndarray): Estados de forma (N, k).
        warnings (tuple[str, ...]): Avisos de engrossamento das grades.
    """
    states: np.ndarray
    warnings: tuple[str, ...] = ()

    @property
    def count(self) -> int:
        return int(self.states.shape[0])


def bowen_surrogate(
    system: SystemDescriptor,
    region: RegionSpec,
    max_level: int,
    radius: float,
    budget: int | None = None,
) -> RegionSurrogate:
    """
    Amostra a região com resolução adequada a bolas de Bowen B_n(x, r), n ≤ max_level.

    Raises:
        BudgetExceededError: Se alguma grade exceder o orçamento.
    """
    region.check_system(system)
    blocks, warnings = [], []
    for ball in region.balls:
        planned = plan_grid(system, ball, max_level, radius, budget)
        blocks.append(planned.grid.states)
        warnings.extend(planned.warnings)
    if region.points:
        blocks.append(points_to_array(list(region.points), system.metric))
    return RegionSurrogate(np.concatenate(blocks, axis=0), tuple(dict.fromkeys(warnings)))


def metric_surrogate(
    system: SystemDescriptor,
    region: RegionSpec,
    max_level: int,
    omega: float,
    budget: int | None = None,
) -> RegionSurrogate:
    """
    Amostra a região com resolução e^{-ω·max_level}/2, adequada às bolas
    métricas da cobertura translocal.

    Raises:
        BudgetExceededError: Se alguma grade exceder o orçamento.
    """
    region.check_system(system)
    finest = math.exp(-omega * max_level)
    blocks = [
        sample_grid(ball, min(finest, ball.radius) / 2.0, system.metric, budget).states
        for ball in region.balls
    ]
    if region.points:
        blocks.append(points_to_array(list(region.points), system.metric))
    return RegionSurrogate(np.concatenate(blocks, axis=0))
