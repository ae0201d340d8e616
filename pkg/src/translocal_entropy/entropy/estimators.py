"""
Estimadores de entropia restrita, da função de entropia pontual e da
entropia translocal superior e inferior.

Todos seguem o mesmo roteiro: para cada ε da escala e cada n do
cronograma, uma célula conta um conjunto (n, ε)-separado maximal dentro de
uma bola; as contagens viram taxas em `growth_rate`, e o valor reportado é
o do menor ε, acompanhado da tendência ao longo da escala.
"""
from __future__ import annotations

import dataclasses
import logging
import math
from dataclasses import dataclass
from typing import Sequence

from translocal_entropy.entropy.rates import RateEstimate, RateMode, Schedule, growth_rate
from translocal_entropy.entropy.sweeps import run_cells
from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.phase_space.points import BallSpec, PhasePoint, ball_prefix_length
from translocal_entropy.separated.counting import SeparationQuery, separated_count, separation_length
from translocal_entropy.separated.planning import plan_grid
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)

MIN_BALL_RADIUS = 1e-13


@dataclass(frozen=True)
class CellCount:
    """
    Contagem de uma célula (n, ε) de uma varredura.
    """
    n: int
    epsilon: float
    count: int
    warnings: tuple[str, ...]

    @property
    def log_count(self) -> float:
        return math.log(self.count)


def _symbolic_cell(system: SystemDescriptor, ball: BallSpec, n: int, epsilon: float) -> CellCount:
    window = n - 1 + separation_length(epsilon, system.metric.beta)
    fixed = min(ball_prefix_length(ball, system.metric), window)
    center = ball.center
    if center.horizon < fixed:
        raise ContractViolationError(
            f' ERRO: O centro tem {center.horizon} símbolos; a bola fixa {fixed}.'
        )
    count = system.language_count(center.symbols[:fixed], window)
    return CellCount(n, epsilon, max(count, 1), ())


def count_cell(
    system: SystemDescriptor,
    ball: BallSpec,
    n: int,
    epsilon: float,
    budget: int | None = None,
) -> CellCount:
    """
    Conta um conjunto (n, ε)-separado maximal dentro de `ball`.

    Em deslocamentos a contagem é exata: o número de palavras admissíveis
    da janela de separação que começam pelo prefixo fixado pela bola.
    """
    if system.is_symbolic:
        return _symbolic_cell(system, ball, n, epsilon)
    planned = plan_grid(system, ball, n, epsilon, budget)
    query = SeparationQuery(system, planned.grid, n, epsilon, expansion=planned.expansion)
    result = separated_count(query)
    logger.debug('Célula n=%d ε=%g: %d pontos separados de %d.', n, epsilon, result.count, planned.grid.count)
    return CellCount(n, epsilon, result.count, planned.warnings + result.warnings)


def _collect_warnings(cells: Sequence[CellCount]) -> tuple[str, ...]:
    return tuple(dict.fromkeys(w for cell in cells for w in cell.warnings))


def _ladder(
    estimates: list[RateEstimate],
    warnings: tuple[str, ...] = (),
) -> RateEstimate:
    final = estimates[-1]
    return dataclasses.replace(
        final,
        epsilon_trend=tuple(e.value for e in estimates),
        warnings=final.warnings + warnings,
    )


def _ball_rate(
    system: SystemDescriptor,
    ball: BallSpec,
    epsilon: float,
    schedule: Schedule,
) -> RateEstimate:
    cells = run_cells(
        lambda n: count_cell(system, ball, n, epsilon, schedule.point_budget),
        schedule.n_values,
    )
    estimate = growth_rate([(c.n, c.log_count) for c in cells], RateMode.LIMSUP, epsilon=epsilon)
    return dataclasses.replace(estimate, warnings=_collect_warnings(cells))


def restricted_entropy(system: SystemDescriptor, ball: BallSpec, schedule: Schedule) -> RateEstimate:
    """
    Estima h_top(f, K) para a bola K.

    Args:
        system (SystemDescriptor): O sistema.
        ball (BallSpec): O conjunto K.
        schedule (Schedule): O cronograma de n e ε.

    Raises:
        ContractViolationError: Se a bola estiver fora do espaço do sistema.
        BudgetExceededError: Se uma grade exceder o orçamento.

    Returns:
        RateEstimate: A taxa no menor ε, com a tendência ao longo da escala.
    """
    if ball.center.kind is not system.kind:
        raise ContractViolationError(' ERRO: A bola não pertence ao espaço do sistema.')
    estimates = [_ball_rate(system, ball, epsilon, schedule) for epsilon in schedule.epsilons]
    return _ladder(estimates)


def yz_entropy_function(
    system: SystemDescriptor,
    point: PhasePoint,
    deltas: Sequence[float],
    schedule: Schedule,
) -> RateEstimate:
    """
    Substituto da função de entropia pontual h_top(x).

    Para cada ε, toma o ínfimo sobre a escala δ da taxa nas bolas fechadas
    B(x, δ); reporta o valor no menor ε.

    Raises:
        ContractViolationError: Se a escala δ não for decrescente e positiva.
    """
    if not deltas or any(d <= 0.0 for d in deltas) or any(b >= a for a, b in zip(deltas, deltas[1:])):
        raise ContractViolationError(' ERRO: A escala δ deve ser positiva e decrescente.')
    estimates = []
    for epsilon in schedule.epsilons:
        per_delta = [_ball_rate(system, BallSpec(point, delta), epsilon, schedule) for delta in deltas]
        estimates.append(min(per_delta, key=lambda estimate: estimate.value))
    return _ladder(estimates)


def translocal_radius(omega: float, n: int) -> float:
    return math.exp(-omega * n)


def translocal_entropy(
    system: SystemDescriptor,
    point: PhasePoint,
    omega: float,
    schedule: Schedule,
) -> tuple[RateEstimate, RateEstimate]:
    """
    Entropia translocal superior e inferior em z.

    Para cada n a bola fechada B(z, e^{-ωn}) é amostrada e a contagem
    separada vira a sequência (n, log S); as taxas são os envelopes superior
    e inferior, cortados em 0.

    Args:
        system (SystemDescriptor): O sistema.
        point (PhasePoint): O ponto z.
        omega (float): Taxa de encolhimento ω ≥ 0.
        schedule (Schedule): O cronograma.

    Raises:
        ContractViolationError: Se ω < 0, ou se menos de três valores de n
            sobrarem depois de descartar bolas abaixo da precisão numérica.

    Returns:
        tuple[RateEstimate, RateEstimate]: (superior, inferior).
    """
    if omega < 0.0:
        raise ContractViolationError(f' ERRO: ω deve ser não negativo, recebido {omega}.')
    usable = [
        n for n in schedule.n_values
        if system.is_symbolic or translocal_radius(omega, n) >= MIN_BALL_RADIUS
    ]
    extra: tuple[str, ...] = ()
    if len(usable) < len(schedule.n_values):
        extra = (f'Janela de n reduzida a {usable[:1] + usable[-1:]} (bolas abaixo da precisão).',)
        logger.warning(extra[0])
        if len(usable) < 3:
            raise ContractViolationError(f' ERRO: ω = {omega} grande demais para o cronograma.')
    uppers, lowers = [], []
    for epsilon in schedule.epsilons:
        cells = run_cells(
            lambda n: count_cell(
                system, BallSpec(point, translocal_radius(omega, n)), n, epsilon, schedule.point_budget
            ),
            usable,
        )
        data = [(c.n, c.log_count) for c in cells]
        warnings = _collect_warnings(cells)
        for mode, bucket in ((RateMode.LIMSUP, uppers), (RateMode.LIMINF, lowers)):
            estimate = growth_rate(data, mode, clamp=True, epsilon=epsilon)
            bucket.append(dataclasses.replace(estimate, warnings=warnings))
    return _ladder(uppers, extra), _ladder(lowers, extra)
