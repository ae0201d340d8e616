"""
Grades de amostragem determinísticas dentro de bolas.

Uma `SampleGrid` é o substituto finito de uma bola: todo ponto da grade
pertence à bola e todo ponto da bola está a no máximo `resolution` de algum
ponto da grade. As grades não usam aleatoriedade, de modo que todas as
estimativas construídas sobre elas são reprodutíveis bit a bit.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from translocal_entropy.phase_space.points import (
    BallSpec,
    MetricSpec,
    PhasePoint,
    SpaceKind,
    array_to_points,
    ball_prefix_length,
    points_to_array,
)
from translocal_entropy.utils.constants import DISTANCE_TOLERANCE, LOG_RADIUS_TOLERANCE
from translocal_entropy.utils.errors import BudgetExceededError, ContractViolationError
from translocal_entropy.utils.settings import current_settings

__status__ = 'Production'

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SampleGrid:
    """
    Grade determinística de pontos de uma bola.

    Attributes:
        ball (BallSpec): A bola amostrada.
        resolution (float): Raio de cobertura garantido.
        states (np.ndarray): Os pontos na representação vetorizada, na ordem
                             determinística de varredura.
        metric (MetricSpec): A métrica sob a qual a grade foi construída.
    """
    ball: BallSpec
    resolution: float
    states: np.ndarray
    metric: MetricSpec

    @cached_property
    def points(self) -> tuple[PhasePoint, ...]:
        """
        Os pontos da grade como `PhasePoint`, na ordem de varredura.
        """
        return array_to_points(self.states, self.metric, past=self.ball.center.past)

    @property
    def count(self) -> int:
        return int(self.states.shape[0])

    def __len__(self) -> int:
        return self.count


def _offsets(radius: float, resolution: float) -> np.ndarray:
    steps = math.floor(radius / resolution + LOG_RADIUS_TOLERANCE)
    return np.arange(-steps, steps + 1, dtype=float) * resolution


def _circle_axis(center: float, radius: float, resolution: float) -> np.ndarray:
    if radius >= 0.5:
        count = math.ceil(1.0 / resolution - LOG_RADIUS_TOLERANCE)
        return np.arange(count, dtype=float) / count
    return (center + _offsets(radius, resolution)) % 1.0


def _symbolic_length(resolution: float, metric: MetricSpec) -> int:
    return max(math.ceil(math.log(1.0 / resolution) / math.log(metric.beta) - LOG_RADIUS_TOLERANCE), 0)


def estimate_grid_size(ball: BallSpec, resolution: float, metric: MetricSpec) -> float:
    """
    Número de pontos (aproximado por cima) que `sample_grid` produziria.

    Usado para planejar resoluções sem materializar a grade.
    """
    radius = ball.radius
    match metric.kind:
        case SpaceKind.CIRCLE:
            return float(_circle_axis_size(radius, resolution))
        case SpaceKind.TORUS:
            return float(_circle_axis_size(radius, resolution)) ** metric.dimension
        case SpaceKind.INTERVAL:
            return 2.0 * math.floor(min(radius, 1.0) / resolution + LOG_RADIUS_TOLERANCE) + 1.0
        case SpaceKind.DISK:
            spacing = resolution / 2.0
            return (2.0 * min(radius, 1.0) / spacing + 1.0) ** 2
        case SpaceKind.SYMBOLIC:
            free = _symbolic_length(resolution, metric) - ball_prefix_length(ball, metric)
            return float(metric.alphabet_size) ** max(free, 0)


def _circle_axis_size(radius: float, resolution: float) -> int:
    if radius >= 0.5:
        return math.ceil(1.0 / resolution - LOG_RADIUS_TOLERANCE)
    return 2 * math.floor(radius / resolution + LOG_RADIUS_TOLERANCE) + 1


def sample_grid(
    ball: BallSpec,
    resolution: float,
    metric: MetricSpec,
    budget: int | None = None,
) -> SampleGrid:
    """
    Constrói a grade determinística de uma bola.

    O espaçamento é uniforme em cada coordenada; no toro a grade é o produto
    das grades das coordenadas (bolas de Chebyshev são caixas); no disco usa
    um reticulado cartesiano de passo `resolution / 2` restrito à bola; no
    espaço simbólico enumera, em ordem lexicográfica, todas as palavras
    admissíveis de comprimento ⌈log_β(1/resolution)⌉ compatíveis com o
    prefixo fixado pela bola (em subdeslocamentos, só as da linguagem).

    Args:
        ball (BallSpec): A bola a ser amostrada.
        resolution (float): Resolução desejada, 0 < resolution ≤ raio.
        metric (MetricSpec): Métrica do espaço.
        budget (int | None, optional): Limite de pontos. Defaults to o
            orçamento global (`TRANSLOCAL_POINT_BUDGET`).

    Raises:
        ContractViolationError: Se a resolução for inválida.
        BudgetExceededError: Se a grade excederia o limite de pontos.

    Returns:
        SampleGrid: A grade construída.
    """
    if not resolution > 0.0:
        raise ContractViolationError(f' ERRO: Resolução deve ser positiva, recebida {resolution!r}.')
    if resolution > ball.radius + DISTANCE_TOLERANCE:
        raise ContractViolationError(
            f' ERRO: Resolução {resolution!r} maior que o raio {ball.radius!r}.'
        )
    if ball.center.kind is not metric.kind:
        raise ContractViolationError(' ERRO: Centro da bola fora do espaço da métrica.')
    cap = current_settings().point_budget if budget is None else budget
    expected = estimate_grid_size(ball, resolution, metric)
    if expected > cap:
        raise BudgetExceededError(cap)

    center = ball.center
    match metric.kind:
        case SpaceKind.CIRCLE:
            states = _circle_axis(center.coords[0], ball.radius, resolution)[:, None]
        case SpaceKind.TORUS:
            axes = [_circle_axis(c, ball.radius, resolution) for c in center.coords]
            mesh = np.meshgrid(*axes, indexing='ij')
            states = np.stack([m.ravel() for m in mesh], axis=-1)
        case SpaceKind.INTERVAL:
            raw = center.coords[0] + _offsets(ball.radius, resolution)
            states = raw[(raw >= -DISTANCE_TOLERANCE) & (raw <= 1.0 + DISTANCE_TOLERANCE)]
            states = np.clip(states, 0.0, 1.0)[:, None]
        case SpaceKind.DISK:
            states = _disk_states(ball, resolution)
        case SpaceKind.SYMBOLIC:
            states = _symbolic_states(ball, resolution, metric)

    logger.debug('Grade com %d pontos (raio %.3g, resolução %.3g).', len(states), ball.radius, resolution)
    return SampleGrid(ball=ball, resolution=resolution, states=states, metric=metric)


def _disk_states(ball: BallSpec, resolution: float) -> np.ndarray:
    spacing = resolution / 2.0
    radius, angle = ball.center.coords
    cx, cy = radius * math.cos(angle), radius * math.sin(angle)
    axis = _offsets(ball.radius, spacing)
    xs, ys = np.meshgrid(cx + axis, cy + axis, indexing='ij')
    xs, ys = xs.ravel(), ys.ravel()
    inside = (np.hypot(xs - cx, ys - cy) <= ball.radius + DISTANCE_TOLERANCE)
    inside &= np.hypot(xs, ys) <= 1.0 + DISTANCE_TOLERANCE
    xs, ys = xs[inside], ys[inside]
    radii = np.minimum(np.hypot(xs, ys), 1.0)
    angles = np.arctan2(ys, xs) % (2.0 * math.pi)
    return np.stack((radii, angles), axis=-1)


def _symbolic_states(ball: BallSpec, resolution: float, metric: MetricSpec) -> np.ndarray:
    fixed = ball_prefix_length(ball, metric)
    length = max(_symbolic_length(resolution, metric), fixed, 1)
    prefix = list(ball.center.symbols[:fixed])
    prefix += [0] * (fixed - len(prefix))
    if metric.words is not None:
        words = [list(word) for word in metric.words(length, prefix)]
    else:
        suffixes = itertools.product(range(metric.alphabet_size), repeat=length - fixed)
        words = [prefix + list(suffix) for suffix in suffixes]
    return np.array(words, dtype=np.int16).reshape(len(words), length)


def explicit_grid(points: list[PhasePoint], metric: MetricSpec, resolution: float = 0.0) -> SampleGrid:
    """
    Embala uma lista explícita de pontos como grade (bola fictícia no primeiro ponto).
    """
    states = points_to_array(points, metric)
    ball = BallSpec(points[0], metric.whole_space_radius())
    return SampleGrid(ball=ball, resolution=resolution, states=states, metric=metric)
