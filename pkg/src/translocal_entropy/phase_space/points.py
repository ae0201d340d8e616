"""
Pontos, métricas e bolas dos espaços de fase suportados.

Os espaços são o círculo S¹ = [0,1), o toro T^d, o intervalo [0,1], o disco
unitário fechado (em coordenadas polares) e os espaços de sequências
simbólicas sobre um alfabeto finito. Todos os tipos são valores imutáveis;
todas as operações são puras.

Além da interface ponto a ponto (`distance`), o módulo expõe a representação
vetorizada usada pelos estimadores: um lote de pontos é um `np.ndarray` de
forma (N, k), com k = 1 para círculo e intervalo, k = d para o toro, k = 2
(raio, ângulo) para o disco e k = horizonte para sequências simbólicas
(somente o futuro; o passado é tratado ponto a ponto).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from translocal_entropy.utils.constants import (
    DEFAULT_SYMBOLIC_BETA,
    DISTANCE_TOLERANCE,
    LOG_RADIUS_TOLERANCE,
    TWO_PI,
)
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'


class SpaceKind(Enum):
    """
    Variantes de espaço de fase.
    """
    CIRCLE = 'circle'
    TORUS = 'torus'
    INTERVAL = 'interval'
    DISK = 'disk'
    SYMBOLIC = 'symbolic'


def _reduce_mod_one(value: float) -> float:
    reduced = float(value) % 1.0
    # `-1e-18 % 1.0` devolve 1.0 em ponto flutuante.
    return 0.0 if reduced >= 1.0 else reduced


@dataclass(frozen=True)
class PhasePoint:
    """
    Um ponto de um dos espaços de fase suportados.

    Prefira os construtores `circle`, `torus`, `interval`, `disk` e
    `symbolic`, que normalizam as coordenadas (redução módulo 1 no círculo e
    no toro, ângulo módulo 2π no disco).

    Attributes:
        kind (SpaceKind): A variante do espaço.
        coords (tuple[float, ...]): Coordenadas reais (vazio no caso simbólico).
        symbols (tuple[int, ...]): Símbolos de índice 0, 1, ... até o horizonte.
        past (tuple[int, ...]): Símbolos de índice -1, -2, ... (bilateral).
    """
    kind: SpaceKind
    coords: tuple[float, ...] = ()
    symbols: tuple[int, ...] = ()
    past: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        match self.kind:
            case SpaceKind.CIRCLE | SpaceKind.TORUS:
                if not self.coords:
                    raise ContractViolationError(' ERRO: Ponto do toro sem coordenadas.')
                if self.kind is SpaceKind.CIRCLE and len(self.coords) != 1:
                    raise ContractViolationError(' ERRO: Ponto do círculo exige uma coordenada.')
                object.__setattr__(self, 'coords', tuple(_reduce_mod_one(c) for c in self.coords))
            case SpaceKind.INTERVAL:
                if len(self.coords) != 1 or not 0.0 <= self.coords[0] <= 1.0:
                    raise ContractViolationError(
                        f' ERRO: Ponto do intervalo fora de [0,1]: {self.coords!r}.'
                    )
                object.__setattr__(self, 'coords', (float(self.coords[0]),))
            case SpaceKind.DISK:
                if len(self.coords) != 2:
                    raise ContractViolationError(' ERRO: Ponto do disco exige (raio, ângulo).')
                radius, angle = self.coords
                if not 0.0 <= radius <= 1.0 + DISTANCE_TOLERANCE:
                    raise ContractViolationError(f' ERRO: Raio fora de [0,1]: {radius!r}.')
                reduced_angle = float(angle) % TWO_PI
                if reduced_angle >= TWO_PI:
                    reduced_angle = 0.0
                object.__setattr__(self, 'coords', (min(float(radius), 1.0), reduced_angle))
            case SpaceKind.SYMBOLIC:
                if any(s < 0 for s in self.symbols) or any(s < 0 for s in self.past):
                    raise ContractViolationError(' ERRO: Símbolos devem ser inteiros não negativos.')
                object.__setattr__(self, 'symbols', tuple(int(s) for s in self.symbols))
                object.__setattr__(self, 'past', tuple(int(s) for s in self.past))

    @classmethod
    def circle(cls, x: float) -> PhasePoint:
        return cls(SpaceKind.CIRCLE, (x,))

    @classmethod
    def torus(cls, *coords: float) -> PhasePoint:
        return cls(SpaceKind.TORUS, tuple(coords))

    @classmethod
    def interval(cls, x: float) -> PhasePoint:
        return cls(SpaceKind.INTERVAL, (x,))

    @classmethod
    def disk(cls, radius: float, angle: float) -> PhasePoint:
        return cls(SpaceKind.DISK, (radius, angle))

    @classmethod
    def symbolic(cls, symbols: Iterable[int], past: Iterable[int] = ()) -> PhasePoint:
        return cls(SpaceKind.SYMBOLIC, symbols=tuple(symbols), past=tuple(past))

    @property
    def dimension(self) -> int:
        """
        Número de coordenadas do vetor de estado (horizonte no caso simbólico).
        """
        if self.kind is SpaceKind.SYMBOLIC:
            return len(self.symbols)
        return len(self.coords)

    @property
    def horizon(self) -> int:
        """
        Maior índice futuro (exclusivo) com símbolo disponível.
        """
        return len(self.symbols)

    def symbol_at(self, index: int) -> int:
        """
        Retorna o símbolo na posição `index` (negativo para o passado).

        Raises:
            IndexError: Se o índice estiver além do horizonte declarado.
        """
        if self.kind is not SpaceKind.SYMBOLIC:
            raise ContractViolationError(' ERRO: Acesso simbólico em ponto não simbólico.')
        if index >= 0:
            if index >= len(self.symbols):
                raise IndexError(f' Índice {index} além do horizonte {len(self.symbols)}.')
            return self.symbols[index]
        past_index = -index - 1
        if past_index >= len(self.past):
            raise IndexError(f' Índice {index} além do passado declarado.')
        return self.past[past_index]

    def shifted(self, steps: int = 1, two_sided: bool = False) -> PhasePoint:
        """
        Aplica o deslocamento à esquerda `steps` vezes (somente simbólico).

        No caso unilateral os símbolos descartados são perdidos; no bilateral
        passam a compor o passado.
        """
        if self.kind is not SpaceKind.SYMBOLIC:
            raise ContractViolationError(' ERRO: Deslocamento em ponto não simbólico.')
        if not two_sided:
            return PhasePoint.symbolic(self.symbols[steps:])
        moved = self.symbols[:steps][::-1]
        return PhasePoint.symbolic(self.symbols[steps:], moved + self.past)


@dataclass(frozen=True)
class MetricSpec:
    """
    A métrica de um espaço de fase.

    No círculo, d(a,b) = min(|a−b|, 1−|a−b|); no toro, o máximo dessa
    distância sobre as coordenadas (bolas são caixas); no intervalo, |a−b|;
    no disco, a distância euclidiana no plano; no espaço simbólico,
    d(u,v) = β^{-m}, com m o menor |índice| em que u e v diferem.

    Attributes:
        kind (SpaceKind): Variante correspondente ao espaço de fase.
        dimension (int): Dimensão (d do toro; 1 nos demais casos contínuos).
        beta (float): Base de decaimento β > 1 da métrica simbólica.
        two_sided (bool): Se as sequências simbólicas são bilaterais.
        alphabet_size (int): Tamanho do alfabeto simbólico.
        words (Callable | None): Enumerador `words(length, prefix)` das
            palavras admissíveis de um subdeslocamento; None no deslocamento
            completo.
    """
    kind: SpaceKind
    dimension: int = 1
    beta: float = DEFAULT_SYMBOLIC_BETA
    two_sided: bool = False
    alphabet_size: int = 2
    words: Callable[[int, Sequence[int]], list[tuple[int, ...]]] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.beta <= 1.0:
            raise ContractViolationError(f' ERRO: Base simbólica deve ser > 1, recebida {self.beta!r}.')
        if self.dimension < 1:
            raise ContractViolationError(' ERRO: Dimensão deve ser positiva.')
        if self.alphabet_size < 1:
            raise ContractViolationError(' ERRO: Alfabeto vazio.')

    @property
    def diameter(self) -> float:
        """
        Diâmetro do espaço nesta métrica.
        """
        match self.kind:
            case SpaceKind.CIRCLE | SpaceKind.TORUS:
                return 0.5
            case SpaceKind.INTERVAL | SpaceKind.SYMBOLIC:
                return 1.0
            case SpaceKind.DISK:
                return 2.0

    def whole_space_radius(self) -> float:
        """
        Um raio para o qual a bola fechada é o espaço inteiro.
        """
        return self.diameter


@dataclass(frozen=True)
class BallSpec:
    """
    Uma bola métrica.

    Attributes:
        center (PhasePoint): O centro.
        radius (float): O raio, estritamente positivo.
        closed (bool): Se a bola é fechada (d ≤ r) ou aberta (d < r).
    """
    center: PhasePoint
    radius: float
    closed: bool = True

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise ContractViolationError(f' ERRO: Raio da bola deve ser positivo, recebido {self.radius!r}.')

    def contains(self, point: PhasePoint, metric: MetricSpec) -> bool:
        """
        Testa a pertinência de `point` segundo `metric`.
        """
        gap = distance(self.center, point, metric)
        if self.closed:
            return gap <= self.radius + DISTANCE_TOLERANCE
        return gap < self.radius


def _check_same_space(a: PhasePoint, b: PhasePoint, metric: MetricSpec) -> None:
    if a.kind is not metric.kind or b.kind is not metric.kind:
        raise ContractViolationError(
            f' ERRO: Espaços incompatíveis: {a.kind.value}, {b.kind.value} sob métrica {metric.kind.value}.'
        )
    if metric.kind is SpaceKind.TORUS and not (len(a.coords) == len(b.coords) == metric.dimension):
        raise ContractViolationError(' ERRO: Dimensões do toro incompatíveis.')


def _circle_gap(delta: float) -> float:
    delta = abs(delta) % 1.0
    return min(delta, 1.0 - delta)


def _first_disagreement(a: Sequence[int], b: Sequence[int], offset: int = 0) -> float:
    for index, (left, right) in enumerate(zip(a, b)):
        if left != right:
            return float(index + offset)
    return math.inf


def distance(a: PhasePoint, b: PhasePoint, metric: MetricSpec) -> float:
    """
    Calcula d(a, b) segundo `metric`.

    Args:
        a (PhasePoint): Primeiro ponto.
        b (PhasePoint): Segundo ponto.
        metric (MetricSpec): Métrica do espaço comum.

    Raises:
        ContractViolationError: Se os pontos não pertencerem ao espaço da métrica.

    Returns:
        float: A distância, não negativa.
    """
    _check_same_space(a, b, metric)
    match metric.kind:
        case SpaceKind.CIRCLE | SpaceKind.TORUS:
            return max(_circle_gap(x - y) for x, y in zip(a.coords, b.coords))
        case SpaceKind.INTERVAL:
            return abs(a.coords[0] - b.coords[0])
        case SpaceKind.DISK:
            (ra, ta), (rb, tb) = a.coords, b.coords
            return math.hypot(ra * math.cos(ta) - rb * math.cos(tb), ra * math.sin(ta) - rb * math.sin(tb))
        case SpaceKind.SYMBOLIC:
            m = _first_disagreement(a.symbols, b.symbols)
            if metric.two_sided:
                m = min(m, _first_disagreement(a.past, b.past, offset=1))
            return 0.0 if math.isinf(m) else metric.beta ** (-m)


def ball_prefix_length(ball: BallSpec, metric: MetricSpec) -> int:
    """
    Número de símbolos iniciais fixados por uma bola simbólica.

    Uma bola fechada de raio r contém exatamente as sequências que concordam
    com o centro nos índices |i| < ⌈log_β(1/r)⌉; a aberta, nos índices
    |i| ≤ ⌊log_β(1/r)⌋.
    """
    log_inverse = math.log(1.0 / ball.radius) / math.log(metric.beta)
    if ball.closed:
        length = math.ceil(log_inverse - LOG_RADIUS_TOLERANCE)
    else:
        length = math.floor(log_inverse + LOG_RADIUS_TOLERANCE) + 1
    return max(length, 0)


def points_to_array(points: Sequence[PhasePoint], metric: MetricSpec) -> np.ndarray:
    """
    Converte uma sequência de pontos na representação vetorizada.

    Sequências simbólicas de horizontes distintos são completadas com o
    símbolo 0 até o maior horizonte.
    """
    if not points:
        raise ContractViolationError(' ERRO: Conjunto de pontos vazio.')
    for point in points:
        if point.kind is not metric.kind:
            raise ContractViolationError(' ERRO: Ponto fora do espaço da métrica.')
    if metric.kind is SpaceKind.SYMBOLIC:
        horizon = max(p.horizon for p in points)
        states = np.zeros((len(points), max(horizon, 1)), dtype=np.int16)
        for row, point in enumerate(points):
            states[row, :point.horizon] = point.symbols
        return states
    return np.array([p.coords for p in points], dtype=float)


def array_to_points(
    states: np.ndarray,
    metric: MetricSpec,
    past: tuple[int, ...] = (),
) -> tuple[PhasePoint, ...]:
    """
    Operação inversa de `points_to_array`.
    """
    match metric.kind:
        case SpaceKind.CIRCLE:
            return tuple(PhasePoint.circle(row[0]) for row in states)
        case SpaceKind.TORUS:
            return tuple(PhasePoint.torus(*row) for row in states)
        case SpaceKind.INTERVAL:
            return tuple(PhasePoint.interval(min(max(row[0], 0.0), 1.0)) for row in states)
        case SpaceKind.DISK:
            return tuple(PhasePoint.disk(row[0], row[1]) for row in states)
        case SpaceKind.SYMBOLIC:
            return tuple(PhasePoint.symbolic(row.tolist(), past) for row in states)


def to_cartesian(states: np.ndarray) -> np.ndarray:
    """
    Converte estados do disco (raio, ângulo) para coordenadas cartesianas.
    """
    radius, angle = states[..., 0], states[..., 1]
    return np.stack((radius * np.cos(angle), radius * np.sin(angle)), axis=-1)


def batch_distance(states: np.ndarray, others: np.ndarray, metric: MetricSpec) -> np.ndarray:
    """
    Distâncias elemento a elemento entre dois lotes (com broadcasting).

    Args:
        states (np.ndarray): Lote de forma (..., k).
        others (np.ndarray): Lote compatível por broadcasting.
        metric (MetricSpec): Métrica do espaço.

    Returns:
        np.ndarray: Distâncias de forma (...).
    """
    match metric.kind:
        case SpaceKind.CIRCLE | SpaceKind.TORUS:
            delta = np.abs(states - others) % 1.0
            return np.max(np.minimum(delta, 1.0 - delta), axis=-1)
        case SpaceKind.INTERVAL:
            return np.max(np.abs(states - others), axis=-1)
        case SpaceKind.DISK:
            return np.linalg.norm(to_cartesian(states) - to_cartesian(others), axis=-1)
        case SpaceKind.SYMBOLIC:
            differs = np.asarray(states != others)
            first = np.where(differs.any(axis=-1), differs.argmax(axis=-1), -1)
            return np.where(first < 0, 0.0, metric.beta ** (-first.astype(float)))


def _real(text: str) -> float:
    return float(Fraction(text.strip()))


def parse_point(text: str, metric: MetricSpec) -> PhasePoint:
    """
    Interpreta um ponto escrito em texto no espaço de `metric`.

    Coordenadas reais são separadas por vírgula e aceitam frações (`2/3`);
    no disco a ordem é (raio, ângulo). Sequências simbólicas são cadeias de
    dígitos; no caso bilateral, `passado|futuro`, com o passado escrito a
    partir do índice −1.

    Raises:
        ContractViolationError: Se o texto não descrever um ponto do espaço.
    """
    try:
        match metric.kind:
            case SpaceKind.SYMBOLIC:
                past, _, future = text.strip().rpartition('|')
                return PhasePoint.symbolic([int(ch) for ch in future], [int(ch) for ch in past])
            case SpaceKind.CIRCLE:
                return PhasePoint.circle(_real(text))
            case SpaceKind.INTERVAL:
                return PhasePoint.interval(_real(text))
            case SpaceKind.TORUS:
                coords = [_real(value) for value in text.split(',')]
                if len(coords) != metric.dimension:
                    raise ContractViolationError(f' ERRO: Ponto do toro exige {metric.dimension} coordenadas.')
                return PhasePoint.torus(*coords)
            case SpaceKind.DISK:
                radius, angle = (_real(value) for value in text.split(','))
                return PhasePoint.disk(radius, angle)
    except ContractViolationError:
        raise
    except (ValueError, ZeroDivisionError) as error:
        raise ContractViolationError(f' ERRO: Ponto inválido: "{text}".') from error
