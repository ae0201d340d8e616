"""
Distância de Bowen e contagem de conjuntos (n, ε)-separados.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.dynamics import orbit
from translocal_entropy.phase_space.grids import SampleGrid
from translocal_entropy.phase_space.points import MetricSpec, PhasePoint, distance
from translocal_entropy.separated.greedy import conflict_graph, greedy_independent_set, orbit_embedding
from translocal_entropy.utils.constants import LOG_RADIUS_TOLERANCE
from translocal_entropy.utils.errors import BudgetExceededError, ContractViolationError
from translocal_entropy.utils.settings import current_settings

__status__ = 'Production'

logger = logging.getLogger(__name__)

GREEDY = 'greedy'
EXACT_SYMBOLIC = 'exact-symbolic'


def bowen_distance(
    system: SystemDescriptor,
    a: PhasePoint,
    b: PhasePoint,
    n: int,
    metric: MetricSpec | None = None,
) -> float:
    """
    d_n(a, b) = max_{0 ≤ j < n} d(f^j a, f^j b).

    Args:
        system (SystemDescriptor): O sistema.
        a (PhasePoint): Primeiro ponto.
        b (PhasePoint): Segundo ponto.
        n (int): Comprimento das órbitas (≥ 1).
        metric (MetricSpec | None, optional): Métrica de base. Defaults to a
            métrica do sistema.

    Raises:
        HorizonExceededError: Se n exceder o horizonte configurado.

    Returns:
        float: A distância de Bowen.
    """
    metric = system.metric if metric is None else metric
    return max(
        distance(x, y, metric)
        for x, y in zip(orbit(system, a, n), orbit(system, b, n))
    )


@dataclass(frozen=True, eq=False)
class SeparationQuery:
    """
    Pedido de contagem de um conjunto (n, ε)-separado dentro de uma amostra.

    Attributes:
        system (SystemDescriptor): O sistema.
        samples (SampleGrid): A amostra (grade ou lista explícita).
        n (int): Comprimento das órbitas (≥ 1).
        epsilon (float): Escala de separação (> 0).
        strict (bool): Separação d_n > ε (True) ou d_n ≥ ε (False).
        expansion (float | None): Expansão local conhecida na amostra, usada
            no lugar da constante de Lipschitz global.
    """
    system: SystemDescriptor
    samples: SampleGrid
    n: int
    epsilon: float
    strict: bool = True
    expansion: float | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ContractViolationError(f' ERRO: n deve ser ≥ 1, recebido {self.n}.')
        if not self.epsilon > 0.0:
            raise ContractViolationError(f' ERRO: ε deve ser positivo, recebido {self.epsilon!r}.')


@dataclass(frozen=True)
class SeparationResult:
    """
    Resultado de `separated_count`.

    Attributes:
        count (int): Cardinalidade do conjunto separado maximal encontrado.
        method (str): `greedy` ou `exact-symbolic`.
        orbit_evaluations (int): Total de avaliações do mapa.
        warnings (tuple[str, ...]): Avisos (por exemplo, grade pouco resolvida).
    """
    count: int
    method: str
    orbit_evaluations: int
    warnings: tuple[str, ...] = field(default=())

    @property
    def flagged(self) -> bool:
        return bool(self.warnings)


def required_resolution(
    system: SystemDescriptor,
    n: int,
    epsilon: float,
    expansion: float | None = None,
) -> float:
    """
    Resolução ε·L^{-(n-1)} que garante a contagem, com L a constante de
    Lipschitz do sistema (ou uma expansão local `expansion` menor).

    Retorna 0 quando nenhuma constante finita é conhecida.
    """
    lipschitz = system.lipschitz if expansion is None else expansion
    if not math.isfinite(lipschitz):
        return 0.0
    return epsilon * max(lipschitz, 1.0) ** (-(n - 1))


def separation_length(epsilon: float, beta: float, strict: bool = True) -> int:
    """
    Menor c tal que β^{-m} > ε (ou ≥ ε) equivale a m < c.
    """
    log_inverse = math.log(1.0 / epsilon) / math.log(beta)
    if strict:
        return max(math.ceil(log_inverse - LOG_RADIUS_TOLERANCE), 0)
    return max(math.floor(log_inverse + LOG_RADIUS_TOLERANCE) + 1, 0)


def _symbolic_count(query: SeparationQuery) -> SeparationResult:
    metric = query.system.metric
    c = separation_length(query.epsilon, metric.beta, query.strict)
    window = query.n - 1 + c
    past_window = max(c - 1, 0) if metric.two_sided else 0
    states = query.samples.states
    warnings = []
    if states.shape[1] < window:
        warnings.append(
            f'Palavras da amostra com {states.shape[1]} símbolos; a separação exige {window}.'
        )
    if past_window:
        keys = {point.symbols[:window] + point.past[:past_window] for point in query.samples.points}
    else:
        keys = {tuple(row[:window].tolist()) for row in states}
    return SeparationResult(
        count=max(len(keys), 1),
        method=EXACT_SYMBOLIC,
        orbit_evaluations=0,
        warnings=tuple(warnings),
    )


def separated_count(query: SeparationQuery) -> SeparationResult:
    """
    Limite inferior guloso de S(n, ε, K) sobre a amostra de K.

    Os pontos são examinados na ordem determinística da amostra, e um ponto
    é admitido se a sua distância de Bowen a todos os já admitidos excede ε.
    Em espaços simbólicos a separação depende só dos primeiros n − 1 + c
    símbolos, e a contagem exata é o número de janelas distintas.

    Raises:
        ContractViolationError: Se a amostra estiver vazia.

    Returns:
        SeparationResult: A contagem e os diagnósticos.
    """
    samples = query.samples
    if samples.count == 0:
        raise ContractViolationError(' ERRO: Amostra vazia.')
    if query.system.is_symbolic:
        return _symbolic_count(query)
    warnings = []
    needed = required_resolution(query.system, query.n, query.epsilon, query.expansion)
    if samples.resolution > 0.0 and samples.resolution > needed * (1.0 + LOG_RADIUS_TOLERANCE):
        warnings.append(
            f'Resolução {samples.resolution:.3g} acima da necessária {needed:.3g} (n = {query.n}).'
        )
    embedding = orbit_embedding(query.system, samples.states, query.n)
    admitted, _ = greedy_independent_set(conflict_graph(embedding, query.epsilon, query.strict))
    for message in warnings:
        logger.warning(message)
    return SeparationResult(
        count=int(admitted.size),
        method=GREEDY,
        orbit_evaluations=samples.count * (query.n - 1),
        warnings=tuple(warnings),
    )


def symbolic_word_count(system: SystemDescriptor, n: int) -> int:
    """
    Número de palavras admissíveis de comprimento n do deslocamento.

    Raises:
        ContractViolationError: Se o sistema não for simbólico.
        BudgetExceededError: Se o horizonte exceder o orçamento de enumeração.
    """
    if n < 0:
        raise ContractViolationError(f' ERRO: n deve ser não negativo, recebido {n}.')
    cap = current_settings().horizon_cap
    if n > cap:
        raise BudgetExceededError(cap)
    return system.language_count((), n)

