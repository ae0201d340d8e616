"""
Medida de bolas métricas e de bolas de Bowen.

A bola de Bowen aberta B_n(x, ε) = {y : d(f^j x, f^j y) < ε, 0 ≤ j < n}
tem medida exata em três situações: Dirac (pertinência do átomo), Bernoulli
no deslocamento completo (um cilindro) e Lebesgue para mapas do círculo
lineares por partes, crescentes e de ramos completos, onde o conjunto de
deslocamentos admissíveis é puxado para trás pelo levantamento contínuo do
mapa, passo a passo, como uma união finita de intervalos. Produtos de tais
mapas e seus iterados herdam a exatidão. Nos demais casos a medida é
estimada por quase Monte Carlo (sequência de Halton) dentro de B(x, ε).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.dynamics import orbit, orbit_array
from translocal_entropy.maps.rules import IterateRule, MapRule, PiecewiseRule, ProductRule
from translocal_entropy.measures.descriptors import MeasureDescriptor, MeasureKind
from translocal_entropy.phase_space.points import (
    BallSpec,
    MetricSpec,
    PhasePoint,
    SpaceKind,
    ball_prefix_length,
    batch_distance,
    points_to_array,
)
from translocal_entropy.separated.counting import separation_length
from translocal_entropy.utils.constants import QMC_RELATIVE_ERROR_THRESHOLD, QMC_SAMPLE_SIZE
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)

EXACT = 'exact'
QUASI_MONTE_CARLO = 'qmc'

Intervals = list[tuple[float, float]]


@dataclass(frozen=True)
class MeasureEstimate:
    """
    Medida (exata ou estimada) de uma bola.

    Attributes:
        value (float): A medida.
        std_error (float): Erro padrão (0 quando exata).
        method (str): `exact` ou `qmc`.
        warnings (tuple[str, ...]): Avisos da estimativa.
    """
    value: float
    std_error: float = 0.0
    method: str = EXACT
    warnings: tuple[str, ...] = ()

    @property
    def flagged(self) -> bool:
        return bool(self.warnings)


def _cylinder(measure: MeasureDescriptor, point: PhasePoint, length: int, two_sided: bool) -> float:
    """
    Massa de Bernoulli do cilindro que fixa os índices |i| < `length` de `point`.
    """
    if point.horizon < length:
        raise ContractViolationError(f' ERRO: O ponto tem {point.horizon} símbolos; o cilindro exige {length}.')
    mass = math.prod(measure.weights[s] for s in point.symbols[:length])
    if two_sided and length > 1:
        if len(point.past) < length - 1:
            raise ContractViolationError(' ERRO: Passado insuficiente para o cilindro bilateral.')
        mass *= math.prod(measure.weights[s] for s in point.past[:length - 1])
    return mass


def ball_measure(measure: MeasureDescriptor, ball: BallSpec, metric: MetricSpec) -> MeasureEstimate:
    """
    Medida μ(B) de uma bola métrica.

    Args:
        measure (MeasureDescriptor): A medida.
        ball (BallSpec): A bola.
        metric (MetricSpec): A métrica do espaço.

    Raises:
        ContractViolationError: Se a medida ou a bola não estiverem no
            espaço da métrica.

    Returns:
        MeasureEstimate: Sempre exata.
    """
    measure.check_space(metric)
    if ball.center.kind is not metric.kind:
        raise ContractViolationError(' ERRO: A bola não pertence ao espaço da medida.')
    match measure.kind:
        case MeasureKind.LEBESGUE_CIRCLE | MeasureKind.LEBESGUE_TORUS:
            return MeasureEstimate(min(2.0 * ball.radius, 1.0) ** measure.dimension)
        case MeasureKind.BERNOULLI:
            length = ball_prefix_length(ball, metric)
            return MeasureEstimate(_cylinder(measure, ball.center, length, metric.two_sided))
        case MeasureKind.DIRAC:
            return MeasureEstimate(1.0 if ball.contains(measure.point, metric) else 0.0)


def _lift_table(rule: PiecewiseRule) -> tuple[np.ndarray, np.ndarray, float] | None:
    """
    Nós e valores do levantamento contínuo G de um mapa do círculo linear
    por partes, crescente e de ramos completos, e o seu grau.
    """
    branches = rule.linear_branches()
    if not rule.periodic or branches is None:
        return None
    positions = [branches[0][0]]
    values = [branches[0][2] * branches[0][0] + branches[0][3]]
    for left, right, slope, intercept in branches:
        if slope <= 0.0:
            return None
        offset = slope * left + intercept - values[-1]
        if not math.isclose(offset, round(offset), abs_tol=1e-9):
            return None
        positions.append(right)
        values.append(values[-1] + slope * (right - left))
    degree = values[-1] - values[0]
    if not math.isclose(degree, round(degree), abs_tol=1e-9):
        return None
    return np.array(positions), np.array(values), float(round(degree))


def _merge(intervals: Intervals) -> Intervals:
    merged: Intervals = []
    for low, high in sorted(intervals):
        if high <= low:
            continue
        if merged and low <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], high))
        else:
            merged.append((low, high))
    return merged


class _CircleLift:
    """
    Levantamento G(y + 1) = G(y) + D de um mapa de ramos completos.
    """

    def __init__(self, positions: np.ndarray, values: np.ndarray, degree: float) -> None:
        self._positions = positions
        self._values = values
        self._degree = degree

    def __call__(self, y: np.ndarray) -> np.ndarray:
        whole = np.floor(y)
        return np.interp(y - whole, self._positions, self._values) + self._degree * whole

    def local_knots(self, x: float) -> tuple[np.ndarray, np.ndarray]:
        """
        Nós de H(t) = G(x + t) − G(x) em t ∈ [−1/2, 1/2].
        """
        shifts = (self._positions[None, :] + np.arange(-1, 2)[:, None]).ravel() - x
        inside = shifts[(shifts > -0.5) & (shifts < 0.5)]
        knots = np.unique(np.concatenate(([-0.5, 0.5], inside)))
        return knots, self(x + knots) - self(np.array([x]))[0]


def _pullback(
    knots: np.ndarray,
    heights: np.ndarray,
    target: Intervals,
    drift: float,
) -> Intervals:
    low, high = heights[0], heights[-1]
    result: Intervals = []
    for a, b in target:
        first = math.floor(low - b + drift)
        last = math.ceil(high - a + drift)
        for m in range(first, last + 1):
            lo, hi = max(a + m - drift, low), min(b + m - drift, high)
            if lo < hi:
                result.append((float(np.interp(lo, heights, knots)), float(np.interp(hi, heights, knots))))
    return _merge(result)


def _circle_bowen_length(rule: MapRule, x: float, n: int, epsilon: float) -> float | None:
    """
    Comprimento exato de B_n(x, ε) para o mapa do círculo `rule`, ou None
    quando o mapa não admite o puxar para trás exato.
    """
    power = 1
    if isinstance(rule, IterateRule):
        rule, power = rule.base, rule.power
    if not isinstance(rule, PiecewiseRule):
        return None
    table = _lift_table(rule)
    if table is None:
        return None
    lift = _CircleLift(*table)
    steps = (n - 1) * power
    states = np.empty(steps + 1)
    states[0] = x
    current = np.array([[x]])
    for i in range(steps):
        current = rule.apply(current)
        states[i + 1] = current[0, 0]
    window = (-min(epsilon, 0.5), min(epsilon, 0.5))
    allowed: Intervals = [window]
    for i in range(steps - 1, -1, -1):
        knots, heights = lift.local_knots(states[i])
        jump = float(lift(np.array([states[i]]))[0]) - states[i + 1]
        drift = jump - round(jump)
        allowed = _pullback(knots, heights, allowed, drift)
        if i % power == 0:
            allowed = _merge([(max(a, window[0]), min(b, window[1])) for a, b in allowed])
    return sum(b - a for a, b in allowed)


def _exact_lebesgue(system: SystemDescriptor, point: PhasePoint, n: int, epsilon: float) -> float | None:
    rule = system.rule
    if isinstance(rule, ProductRule):
        lengths = [
            _circle_bowen_length(factor, coordinate, n, epsilon)
            for factor, coordinate in zip(rule.factors, point.coords)
        ]
        return None if any(length is None for length in lengths) else math.prod(lengths)
    if system.kind is SpaceKind.CIRCLE:
        return _circle_bowen_length(rule, point.coords[0], n, epsilon)
    return None


def _quasi_monte_carlo(system: SystemDescriptor, point: PhasePoint, n: int, epsilon: float) -> MeasureEstimate:
    dimension = len(point.coords)
    radius = min(epsilon, 0.5)
    sampler = qmc.Halton(d=dimension, scramble=False)
    unit = sampler.random(QMC_SAMPLE_SIZE)
    center = np.asarray(point.coords)
    samples = (center + (2.0 * unit - 1.0) * radius) % 1.0
    orbits = orbit_array(system, samples, n)
    reference = orbit_array(system, center[None, :], n)
    gaps = batch_distance(orbits, reference, system.metric)
    hits = int(np.count_nonzero(np.all(gaps < epsilon, axis=1)))
    fraction = hits / QMC_SAMPLE_SIZE
    volume = (2.0 * radius) ** dimension
    value = volume * fraction
    std_error = volume * math.sqrt(fraction * (1.0 - fraction) / QMC_SAMPLE_SIZE)
    warnings: tuple[str, ...] = ()
    if hits == 0:
        warnings = (f'Nenhuma amostra QMC na bola de Bowen (n={n}, ε={epsilon:g}).',)
    elif std_error / value > QMC_RELATIVE_ERROR_THRESHOLD:
        warnings = (f'Erro relativo QMC {std_error / value:.2f} na bola de Bowen (n={n}, ε={epsilon:g}).',)
    if warnings:
        logger.warning(warnings[0])
    return MeasureEstimate(value, std_error, QUASI_MONTE_CARLO, warnings)


def bowen_ball_measure(
    system: SystemDescriptor,
    measure: MeasureDescriptor,
    point: PhasePoint,
    n: int,
    epsilon: float,
) -> MeasureEstimate:
    """
    Medida da bola de Bowen aberta B_n(x, ε).

    Args:
        system (SystemDescriptor): O sistema.
        measure (MeasureDescriptor): A medida (no espaço do sistema).
        point (PhasePoint): O centro x.
        n (int): Comprimento da órbita, n ≥ 1.
        epsilon (float): O raio ε > 0.

    Raises:
        ContractViolationError: Se os parâmetros forem inválidos ou a medida
            não viver no espaço do sistema.

    Returns:
        MeasureEstimate: Exata quando possível; senão QMC com erro padrão.
    """
    if n < 1 or not epsilon > 0.0:
        raise ContractViolationError(f' ERRO: Parâmetros inválidos (n={n}, ε={epsilon}).')
    measure.check_space(system.metric)
    if point.kind is not system.kind:
        raise ContractViolationError(' ERRO: O centro não pertence ao espaço do sistema.')
    match measure.kind:
        case MeasureKind.DIRAC:
            path = orbit(system, point, n)
            atom_path = orbit(system, measure.point, n)
            gaps = batch_distance(
                points_to_array(path, system.metric), points_to_array(atom_path, system.metric), system.metric
            )
            return MeasureEstimate(1.0 if bool(np.all(gaps < epsilon)) else 0.0)
        case MeasureKind.BERNOULLI:
            metric = system.metric
            window = n - 1 + separation_length(epsilon, metric.beta, strict=False)
            return MeasureEstimate(_cylinder(measure, point, window, metric.two_sided))
    exact = _exact_lebesgue(system, point, n, epsilon)
    if exact is not None:
        return MeasureEstimate(exact)
    return _quasi_monte_carlo(system, point, n, epsilon)
