"""
Entropias locais de Brin–Katok e pressões locais medida-teóricas.

As três operações compartilham o mesmo caminho: a sequência
(n, S_nφ(x) − log μ(B)) passa por `growth_rate`, onde B é a bola de Bowen
B_n(x, ε) (com a escala ε) ou a bola métrica B(x, e^{-ωn}) na versão
translocal. Com φ ≡ 0 a pressão local é a entropia de Brin–Katok.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from translocal_entropy.entropy.estimators import translocal_radius
from translocal_entropy.entropy.rates import RateEstimate, RateMode, Schedule, growth_rate
from translocal_entropy.entropy.sweeps import run_cells
from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.potentials import PotentialSpec, birkhoff_sums
from translocal_entropy.measures.bowen import ball_measure, bowen_ball_measure
from translocal_entropy.measures.descriptors import MeasureDescriptor, require_certificate
from translocal_entropy.phase_space.points import BallSpec, PhasePoint, points_to_array
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalPressureEstimate:
    """
    Estimativa de uma pressão local (ou entropia de Brin–Katok) em x.

    Attributes:
        value (float): A taxa; +∞ quando uma bola de medida nula aparece.
        mode (RateMode): Envelope superior ou inferior.
        omega (float | None): Taxa de encolhimento (None na versão de Bowen).
        point (PhasePoint): O ponto x.
        potential (str): Identificador do potencial.
        n_window (tuple[int, int]): Janela de n usada.
        epsilon (float | None): O menor ε (None na versão translocal).
        residual (float): Resíduo do ajuste.
        epsilon_trend (tuple[float, ...]): Valores ao longo da escala ε.
        warnings (tuple[str, ...]): Avisos das medidas estimadas.
    """
    value: float
    mode: RateMode
    omega: float | None
    point: PhasePoint
    potential: str
    n_window: tuple[int, int]
    epsilon: float | None
    residual: float
    epsilon_trend: tuple[float, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def flagged(self) -> bool:
        return bool(self.warnings)

    @classmethod
    def from_rate(
        cls,
        estimate: RateEstimate,
        point: PhasePoint,
        potential: PotentialSpec,
        omega: float | None = None,
    ) -> LocalPressureEstimate:
        return cls(
            value=estimate.value,
            mode=estimate.mode,
            omega=omega,
            point=point,
            potential=potential.identifier,
            n_window=estimate.n_window,
            epsilon=estimate.epsilon,
            residual=estimate.residual,
            epsilon_trend=estimate.epsilon_trend,
            warnings=estimate.warnings,
        )


def _neg_log(value: float) -> float:
    return math.inf if value <= 0.0 else -math.log(value)


def _orbit_sums(system: SystemDescriptor, potential: PotentialSpec, point: PhasePoint, n_max: int) -> list[float]:
    potential.check_system(system)
    states = points_to_array([point], system.metric)
    return birkhoff_sums(system, potential, states, n_max)[0].tolist()


def _envelopes(
    data: list[tuple[int, float]],
    epsilon: float | None,
    warnings: tuple[str, ...],
) -> tuple[RateEstimate, RateEstimate]:
    upper = growth_rate(data, RateMode.LIMSUP, epsilon=epsilon)
    lower = growth_rate(data, RateMode.LIMINF, epsilon=epsilon)
    return (
        RateEstimate(upper.value, upper.n_window, epsilon, upper.residual, upper.mode, warnings=warnings),
        RateEstimate(lower.value, lower.n_window, epsilon, lower.residual, lower.mode, warnings=warnings),
    )


def _with_trend(estimates: list[RateEstimate]) -> RateEstimate:
    final = estimates[-1]
    trend = tuple(e.value for e in estimates)
    warnings = tuple(dict.fromkeys(w for e in estimates for w in e.warnings))
    return RateEstimate(final.value, final.n_window, final.epsilon, final.residual, final.mode, trend, warnings)


def local_pressure(
    system: SystemDescriptor,
    measure: MeasureDescriptor,
    potential: PotentialSpec,
    point: PhasePoint,
    schedule: Schedule,
) -> tuple[LocalPressureEstimate, LocalPressureEstimate]:
    """
    Pressões locais superior e inferior de φ em x.

    Para cada ε da escala, a sequência (n, S_nφ(x) − log μ(B_n(x, ε)))
    dá os envelopes de inclinação; reporta-se o menor ε com a tendência.

    Args:
        system (SystemDescriptor): O sistema.
        measure (MeasureDescriptor): Medida invariante certificada.
        potential (PotentialSpec): O potencial φ.
        point (PhasePoint): O ponto x.
        schedule (Schedule): O cronograma.

    Raises:
        ContractViolationError: Se o par (sistema, medida) não tiver
            certificado ou φ não for avaliável no sistema.

    Returns:
        tuple[LocalPressureEstimate, LocalPressureEstimate]: (superior, inferior).
    """
    require_certificate(system, measure)
    sums = _orbit_sums(system, potential, point, schedule.n_values[-1])
    uppers, lowers = [], []
    for epsilon in schedule.epsilons:
        masses = run_cells(lambda n: bowen_ball_measure(system, measure, point, n, epsilon), schedule.n_values)
        data = [(n, sums[n - 1] + _neg_log(m.value)) for n, m in zip(schedule.n_values, masses)]
        warnings = tuple(dict.fromkeys(w for m in masses for w in m.warnings))
        upper, lower = _envelopes(data, epsilon, warnings)
        uppers.append(upper)
        lowers.append(lower)
    return (
        LocalPressureEstimate.from_rate(_with_trend(uppers), point, potential),
        LocalPressureEstimate.from_rate(_with_trend(lowers), point, potential),
    )


def brin_katok(
    system: SystemDescriptor,
    measure: MeasureDescriptor,
    point: PhasePoint,
    schedule: Schedule,
) -> tuple[LocalPressureEstimate, LocalPressureEstimate]:
    """
    Entropias locais de Brin–Katok superior e inferior em x.

    É a pressão local do potencial nulo, pelo mesmo caminho de código.
    """
    return local_pressure(system, measure, PotentialSpec.zero(), point, schedule)


def translocal_local_pressure(
    system: SystemDescriptor,
    measure: MeasureDescriptor,
    potential: PotentialSpec,
    point: PhasePoint,
    omega: float,
    schedule: Schedule,
) -> tuple[LocalPressureEstimate, LocalPressureEstimate]:
    """
    Pressões locais translocais: taxas de S_nφ(x) − log μ(B(x, e^{-ωn})).

    Usa bolas métricas fechadas, não bolas de Bowen; a escala ε não entra.

    Raises:
        ContractViolationError: Se ω < 0 ou o par não tiver certificado.
    """
    if omega < 0.0:
        raise ContractViolationError(f' ERRO: ω deve ser não negativo, recebido {omega}.')
    require_certificate(system, measure)
    sums = _orbit_sums(system, potential, point, schedule.n_values[-1])
    data = []
    for n in schedule.n_values:
        mass = ball_measure(measure, BallSpec(point, translocal_radius(omega, n)), system.metric)
        data.append((n, sums[n - 1] + _neg_log(mass.value)))
    upper, lower = _envelopes(data, None, ())
    return (
        LocalPressureEstimate.from_rate(upper, point, potential, omega),
        LocalPressureEstimate.from_rate(lower, point, potential, omega),
    )
