"""
Medidas de probabilidade invariantes endereçáveis por identificador.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.dynamics import evaluate, preimage_length
from translocal_entropy.maps.rules import PiecewiseRule
from translocal_entropy.phase_space.points import MetricSpec, PhasePoint, SpaceKind, distance, parse_point
from translocal_entropy.utils.constants import DISTANCE_TOLERANCE
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)

CERTIFICATE_PROBES = ((0.0, 0.25), (0.1, 0.35), (0.3, 0.9), (0.55, 0.6), (0.8, 1.0))
UNCERTIFIED_SYSTEMS = frozenset({'pomeau-manneville'})


class MeasureKind(Enum):
    LEBESGUE_CIRCLE = 'lebesgue-circle'
    LEBESGUE_TORUS = 'lebesgue-torus'
    BERNOULLI = 'bernoulli'
    DIRAC = 'dirac'


@dataclass(frozen=True)
class MeasureDescriptor:
    """
    Uma medida de probabilidade de Borel.

    Attributes:
        kind (MeasureKind): A variante.
        weights (tuple[float, ...]): Vetor de probabilidades (Bernoulli).
        point (PhasePoint | None): O átomo (Dirac).
        dimension (int): Dimensão do toro (Lebesgue tóral).
    """
    kind: MeasureKind
    weights: tuple[float, ...] = ()
    point: PhasePoint | None = None
    dimension: int = 1

    def __post_init__(self) -> None:
        match self.kind:
            case MeasureKind.BERNOULLI:
                if len(self.weights) < 2 or any(w < 0.0 for w in self.weights):
                    raise ContractViolationError(' ERRO: Bernoulli exige ao menos 2 pesos não negativos.')
                if not math.isclose(sum(self.weights), 1.0, abs_tol=1e-9):
                    raise ContractViolationError(' ERRO: Os pesos de Bernoulli devem somar 1.')
            case MeasureKind.DIRAC:
                if self.point is None:
                    raise ContractViolationError(' ERRO: A medida de Dirac exige um ponto.')
            case MeasureKind.LEBESGUE_TORUS:
                if self.dimension < 1:
                    raise ContractViolationError(' ERRO: Dimensão do toro deve ser ≥ 1.')

    @classmethod
    def lebesgue_circle(cls) -> MeasureDescriptor:
        return cls(MeasureKind.LEBESGUE_CIRCLE)

    @classmethod
    def lebesgue_torus(cls, dimension: int = 2) -> MeasureDescriptor:
        return cls(MeasureKind.LEBESGUE_TORUS, dimension=dimension)

    @classmethod
    def bernoulli(cls, weights: tuple[float, ...]) -> MeasureDescriptor:
        return cls(MeasureKind.BERNOULLI, weights=tuple(float(w) for w in weights))

    @classmethod
    def dirac(cls, point: PhasePoint) -> MeasureDescriptor:
        return cls(MeasureKind.DIRAC, point=point)

    @property
    def identifier(self) -> str:
        match self.kind:
            case MeasureKind.BERNOULLI:
                return 'bernoulli:' + ','.join(f'{w:g}' for w in self.weights)
            case MeasureKind.DIRAC:
                coords = self.point.coords or self.point.symbols
                return 'dirac:' + ','.join(f'{c:g}' for c in coords)
            case MeasureKind.LEBESGUE_TORUS:
                return f'lebesgue-torus:{self.dimension}'
        return self.kind.value

    def lives_on(self, metric: MetricSpec) -> bool:
        """
        Indica se a medida está definida no espaço da métrica.
        """
        match self.kind:
            case MeasureKind.LEBESGUE_CIRCLE:
                return metric.kind is SpaceKind.CIRCLE
            case MeasureKind.LEBESGUE_TORUS:
                return metric.kind is SpaceKind.TORUS and metric.dimension == self.dimension
            case MeasureKind.BERNOULLI:
                return metric.kind is SpaceKind.SYMBOLIC and metric.alphabet_size == len(self.weights)
            case MeasureKind.DIRAC:
                return self.point.kind is metric.kind

    def check_space(self, metric: MetricSpec) -> None:
        if not self.lives_on(metric):
            raise ContractViolationError(f' ERRO: A medida {self.identifier} não vive no espaço {metric.kind.value}.')


def _preserves_length(system: SystemDescriptor) -> bool:
    rule = system.rule
    if not isinstance(rule, PiecewiseRule) or rule.linear_branches() is None:
        return False
    return all(
        math.isclose(preimage_length(system, left, right), right - left, abs_tol=1e-9)
        for left, right in CERTIFICATE_PROBES
    )


def is_certified(system: SystemDescriptor, measure: MeasureDescriptor) -> bool:
    """
    Certificado de invariância do par (sistema, medida).

    Lebesgue no círculo é certificada pelo teste de comprimento de
    pré-imagens em mapas lineares por partes (e herdada pelos iterados);
    Lebesgue no toro, para automorfismos e produtos de mapas certificados;
    Bernoulli, para o deslocamento completo; Dirac, quando o átomo é fixo.
    """
    if system.identifier in UNCERTIFIED_SYSTEMS or not measure.lives_on(system.metric):
        return False
    match measure.kind:
        case MeasureKind.LEBESGUE_CIRCLE:
            if system.base is not None:
                return is_certified(system.base, measure)
            return _preserves_length(system)
        case MeasureKind.LEBESGUE_TORUS:
            if system.is_toral:
                return abs(round(float(np.linalg.det(system.matrix)))) >= 1
            if system.factors:
                circle = MeasureDescriptor.lebesgue_circle()
                return all(is_certified(factor, circle) for factor in system.factors)
            return False
        case MeasureKind.BERNOULLI:
            return system.is_symbolic and system.family is None
        case MeasureKind.DIRAC:
            image = evaluate(system, measure.point)
            if system.is_symbolic:
                return image.symbols == measure.point.symbols[:image.horizon]
            return distance(image, measure.point, system.metric) <= DISTANCE_TOLERANCE


def require_certificate(system: SystemDescriptor, measure: MeasureDescriptor) -> None:
    """
    Raises:
        ContractViolationError: Se o par não tiver certificado de invariância.
    """
    if not is_certified(system, measure):
        raise ContractViolationError(
            f' ERRO: {measure.identifier} não tem certificado de invariância para {system.identifier}.'
        )


def parse_measure(text: str, metric: MetricSpec) -> MeasureDescriptor:
    """
    Interpreta `lebesgue-circle`, `lebesgue-torus[:d]`, `bernoulli:<p1>,<p2>,...`
    ou `dirac:<coordenadas>` no espaço de `metric`.

    Raises:
        ContractViolationError: Se o identificador for malformado.
    """
    head, _, tail = text.strip().partition(':')
    try:
        match head:
            case 'lebesgue-circle':
                return MeasureDescriptor.lebesgue_circle()
            case 'lebesgue-torus':
                return MeasureDescriptor.lebesgue_torus(int(tail) if tail else metric.dimension)
            case 'bernoulli':
                return MeasureDescriptor.bernoulli(tuple(float(w) for w in tail.split(',')))
            case 'dirac':
                return MeasureDescriptor.dirac(parse_point(tail, metric))
    except ContractViolationError:
        raise
    except (ValueError, IndexError) as error:
        raise ContractViolationError(f' ERRO: Medida inválida: "{text}".') from error
    raise ContractViolationError(f' ERRO: Medida desconhecida: "{text}".')


MEASURE_IDENTIFIERS: dict[str, str] = {
    'lebesgue-circle': 'Lebesgue no círculo; invariante por mapas lineares de ramos completos, h_μ(x) = log 3 no tripling',
    'lebesgue-torus[:d]': 'Lebesgue no toro; invariante por automorfismos e produtos, h_μ = soma dos log|λ_i| positivos',
    'bernoulli:<p1>,<p2>,...': 'Bernoulli no deslocamento completo; h_μ(x) = −Σ p_i log p_i em μ-quase todo ponto',
    'dirac:<coordenadas>': 'massa pontual num ponto fixo; entropia local nula',
}
