"""
Registro das formas fechadas usadas para conferir os experimentos.

Cada entrada devolve o valor esperado e uma proveniência de uma linha. Um
experimento sem forma fechada registrada não tem coluna `expected` e não
conta para o veredito.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from translocal_entropy.entropy.lyapunov import toral_translocal
from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.dynamics import evaluate, toral_eigen_data
from translocal_entropy.maps.potentials import PotentialKind, PotentialSpec
from translocal_entropy.maps.rules import StaircaseRule
from translocal_entropy.measures.descriptors import MeasureDescriptor, MeasureKind
from translocal_entropy.phase_space.points import PhasePoint, SpaceKind
from translocal_entropy.utils.constants import DISTANCE_TOLERANCE

__status__ = 'Production'

LOG2 = math.log(2.0)
LOG3 = math.log(3.0)
GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0

# Sistemas em que toda bola aberta tem a entropia do sistema inteiro.
HOMOGENEOUS_SYSTEMS = frozenset({'tripling', 'g3branch', 'identity', 'disk-rotation'})


@dataclass(frozen=True)
class Expectation:
    """
    Um valor esperado e de onde ele vem.

    Attributes:
        value (float): A forma fechada avaliada.
        provenance (str): Referência de uma linha.
    """
    value: float
    provenance: str


def _head(system: SystemDescriptor) -> str:
    return system.identifier.partition(':')[0]


def _coordinate(point: PhasePoint | None) -> float | None:
    if point is None or not point.coords:
        return None
    return point.coords[0]


def _near(value: float | None, target: float) -> bool:
    return value is not None and abs(value - target) <= DISTANCE_TOLERANCE


def _iterate(system: SystemDescriptor) -> tuple[int, SystemDescriptor]:
    return system.power, system.base


def _lyapunov(system: SystemDescriptor, point: PhasePoint | None) -> Expectation | None:
    x = _coordinate(point)
    match _head(system):
        case 'tripling':
            return Expectation(LOG3, 'tripling: |f\'| = 3 em toda parte')
        case 'g3branch':
            if _near(x, 2.0 / 3.0):
                return Expectation(math.log(4.0), 'g em 2/3: ponto fixo no ramo de inclinação 4')
            return Expectation(1.5 * LOG2, 'g em ponto típico: ∫log|g\'| dLeb = (3/2)·log 2')
        case 'identity':
            return Expectation(0.0, 'identidade: derivada 1')
        case 'toral':
            return Expectation(math.log(toral_eigen_data(system)[0][0]), 'toral: maior log-módulo dos autovalores')
        case 'iterate':
            power, base = _iterate(system)
            inner = _lyapunov(base, point)
            if inner is None or _head(base) != 'tripling':
                return None
            return Expectation(power * inner.value, f'iterado {power}: R·λ')
    return None


def _system_entropy(system: SystemDescriptor) -> Expectation | None:
    head = _head(system)
    if head in HOMOGENEOUS_SYSTEMS or head in ('toral', 'fullshift'):
        if system.known_entropy is not None:
            return Expectation(system.known_entropy, system.provenance)
    if head == 'iterate':
        power, base = _iterate(system)
        inner = _system_entropy(base)
        if inner is not None:
            return Expectation(power * inner.value, f'iterado {power}: h(f^R) = R·h(f)')
    if head == 'product':
        parts = [_system_entropy(factor) for factor in system.factors]
        if all(part is not None for part in parts):
            return Expectation(sum(part.value for part in parts), 'produto: entropias somam')
    return None


def _staircase_level(system: SystemDescriptor, point: PhasePoint | None) -> int | None:
    if _head(system) != 'staircase' or point is None:
        return None
    rule = system.rule
    if not isinstance(rule, StaircaseRule):
        return None
    return int(rule.level_of(np.asarray([point.coords[0]]))[0])


def _pointwise_entropy(system: SystemDescriptor, point: PhasePoint | None) -> Expectation | None:
    level = _staircase_level(system, point)
    if level is not None:
        if level == 0:
            return Expectation(0.0, 'escada abaixo do corte: identidade')
        return Expectation(math.log(2 * level + 1), f'escada no nível {level}: h_top(x) = log({2 * level + 1})')
    return _system_entropy(system)


def _translocal(system: SystemDescriptor, point: PhasePoint | None, omega: float) -> Expectation | None:
    x = _coordinate(point)
    match _head(system):
        case 'tripling':
            return Expectation(max(LOG3 - omega, 0.0), 'tripling: h_ω = (1 − ω/log 3)·log 3, cortada em 0')
        case 'g3branch':
            rate = _lyapunov(system, point)
            return Expectation(LOG3 * max(1.0 - omega / rate.value, 0.0), 'mapa C² expansor: h_ω(z) = (1 − ω/λ(z))·log 3')
        case 'pomeau-manneville':
            if _near(x, 0.0) and omega > 0.0:
                return Expectation(0.0, 'Pomeau–Manneville: h_ω(0) = 0 para todo ω > 0')
        case 'sqrtmap':
            if _near(x, 0.0):
                return Expectation(LOG2, 'mapa da raiz: h_ω(0) = h_top = log 2')
        case 'toral':
            return Expectation(toral_translocal(toral_eigen_data(system), omega), 'toral: Σ (log|λ_i| − ω)⁺')
        case 'disk':
            if _near(x, 0.0):
                return Expectation(max(LOG3 * (1.0 - omega / LOG2), 0.0), 'disco no centro: log 3·(1 − ω/log 2), cortada em 0')
        case 'identity':
            return Expectation(0.0, 'identidade: entropia nula')
        case 'fullshift':
            alphabet = system.metric.alphabet_size
            beta = system.metric.beta
            return Expectation(
                math.log(alphabet) * max(1.0 - omega / math.log(beta), 0.0),
                'deslocamento completo: log k·(1 − ω/log β), cortada em 0',
            )
        case 'iterate':
            power, base = _iterate(system)
            if _head(base) == 'tripling':
                return Expectation(max(power * LOG3 - omega, 0.0), f'iterado {power} do tripling: R·log 3 − ω')
        case 'product':
            if point is None:
                return None
            parts = [
                _translocal(factor, PhasePoint.circle(coordinate), omega)
                for factor, coordinate in zip(system.factors, point.coords)
            ]
            if all(part is not None for part in parts):
                return Expectation(sum(part.value for part in parts), 'produto: entropias translocais somam')
    return None


def _average(system: SystemDescriptor, potential: PotentialSpec, point: PhasePoint | None) -> float | None:
    """
    Média de Birkhoff de φ ao longo da órbita, quando conhecida.
    """
    match potential.kind:
        case PotentialKind.ZERO:
            return 0.0
        case PotentialKind.CONSTANT:
            return potential.parameter
        case PotentialKind.GEOMETRIC:
            rate = _lyapunov(system, point)
            return None if rate is None else -potential.parameter * rate.value
    return None


def _is_fixed(system: SystemDescriptor, point: PhasePoint) -> bool:
    image = evaluate(system, point)
    if point.kind is SpaceKind.SYMBOLIC:
        return image.symbols == point.symbols[: len(image.symbols)]
    return all(abs(a - b) <= DISTANCE_TOLERANCE for a, b in zip(image.coords, point.coords))


def _local_entropy(system: SystemDescriptor, measure: MeasureDescriptor, point: PhasePoint | None) -> Expectation | None:
    match measure.kind:
        case MeasureKind.DIRAC:
            return Expectation(0.0, 'medida de Dirac: entropia local nula')
        case MeasureKind.BERNOULLI:
            weights = np.asarray(measure.weights, dtype=float)
            entropy = float(-np.sum(weights[weights > 0.0] * np.log(weights[weights > 0.0])))
            return Expectation(entropy, 'Bernoulli: h_μ = −Σ p_i log p_i')
        case MeasureKind.LEBESGUE_CIRCLE:
            if _head(system) == 'g3branch':
                return Expectation(1.5 * LOG2, 'g com Lebesgue: Brin–Katok = ∫log|g\'| dLeb')
            return _system_entropy(system)
        case MeasureKind.LEBESGUE_TORUS:
            return _system_entropy(system)
    return None


def _local_pressure(
    system: SystemDescriptor,
    measure: MeasureDescriptor,
    potential: PotentialSpec,
    point: PhasePoint | None,
) -> Expectation | None:
    entropy = _local_entropy(system, measure, point)
    average = _average(system, potential, point)
    if entropy is None or average is None:
        return None
    return Expectation(entropy.value + average, f'{entropy.provenance}; mais a média de φ')


def _translocal_pressure(
    system: SystemDescriptor,
    measure: MeasureDescriptor,
    potential: PotentialSpec,
    point: PhasePoint | None,
    omega: float,
) -> Expectation | None:
    average = _average(system, potential, point)
    if average is None:
        return None
    match measure.kind:
        case MeasureKind.LEBESGUE_CIRCLE:
            return Expectation(omega + average, 'Lebesgue no círculo: μ(B(z, e^{-ωn})) ≈ e^{-ωn}')
        case MeasureKind.LEBESGUE_TORUS:
            return Expectation(measure.dimension * omega + average, 'Lebesgue no toro: d·ω mais a média de φ')
        case MeasureKind.DIRAC:
            if point is not None and point == measure.point and _is_fixed(system, point):
                return Expectation(average, 'Dirac no ponto fixo: só a média de φ')
    return None


def _caratheodory(
    system: SystemDescriptor,
    potential: PotentialSpec,
    omega: float | None,
) -> Expectation | None:
    if omega is None:
        entropy = _system_entropy(system)
        if potential.kind is PotentialKind.GEOMETRIC and _head(system) not in ('tripling', 'identity'):
            return None
        average = _average(system, potential, None)
        if entropy is None or average is None:
            return None
        return Expectation(entropy.value + average, 'pressão de Carathéodory: h_top + média de φ (expansão uniforme)')
    if _head(system) != 'tripling' or potential.kind is PotentialKind.TABLE:
        return None
    average = _average(system, potential, None)
    return Expectation(omega + average, 'coberturas por bolas de raio e^{-ωn}: ω + média de φ')


def kraft_expectation(lengths: Sequence[int]) -> Expectation | None:
    """
    Raiz conhecida da equação de Kraft para listas finitas simples.
    """
    ordered = tuple(sorted(lengths))
    if ordered == (1, 2):
        return Expectation(math.log(GOLDEN_RATIO), 'comprimentos {1, 2}: e^{-h} + e^{-2h} = 1, h = log da razão áurea')
    if ordered and len(set(ordered)) == 1 and len(ordered) > 1:
        return Expectation(math.log(len(ordered)) / ordered[0], 'k palavras de comprimento L: h = log(k)/L')
    return None


def expectation(
    kind: str,
    system: SystemDescriptor,
    point: PhasePoint | None = None,
    omega: float | None = None,
    potential: PotentialSpec | None = None,
    measure: MeasureDescriptor | None = None,
) -> Expectation | None:
    """
    Procura a forma fechada de uma célula de experimento.

    Args:
        kind (str): O tipo do experimento (valor de `ExperimentKind`).
        system (SystemDescriptor): O sistema.
        point (PhasePoint | None, optional): O ponto da célula.
        omega (float | None, optional): O ω da célula.
        potential (PotentialSpec | None, optional): O potencial.
        measure (MeasureDescriptor | None, optional): A medida.

    Returns:
        Expectation | None: O valor esperado, ou None sem forma registrada.
    """
    potential = potential or PotentialSpec.zero()
    match kind:
        case 'restricted-entropy':
            return _system_entropy(system)
        case 'yz-function':
            return _pointwise_entropy(system, point)
        case 'translocal':
            return None if omega is None else _translocal(system, point, omega)
        case 'lyapunov':
            return _lyapunov(system, point)
        case 'brin-katok':
            return None if measure is None else _local_entropy(system, measure, point)
        case 'local-pressure':
            return None if measure is None else _local_pressure(system, measure, potential, point)
        case 'translocal-pressure':
            if measure is None or omega is None:
                return None
            return _translocal_pressure(system, measure, potential, point, omega)
        case 'pressure':
            return _caratheodory(system, potential, omega)
    return None
