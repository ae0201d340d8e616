"""
Auditoria das desigualdades de tipo Ma–Wen entre pressões locais e a
pressão de Carathéodory de um conjunto Z.

Se as pressões locais superiores em Z não passam de s, então P_Z ≤ s; se
as inferiores são ao menos s (e μ(Z) > 0), então P_Z ≥ s. A auditoria
calcula as locais em pontos amostrados de Z, o expoente crítico das
coberturas e verifica as duas direções com uma tolerância.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from translocal_entropy.entropy.rates import Schedule
from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.maps.potentials import PotentialSpec
from translocal_entropy.measures.bowen import ball_measure
from translocal_entropy.measures.descriptors import MeasureDescriptor, MeasureKind, require_certificate
from translocal_entropy.measures.local import local_pressure, translocal_local_pressure
from translocal_entropy.phase_space.points import BallSpec, PhasePoint, SpaceKind, array_to_points
from translocal_entropy.pressure.covers import CoverBuilder
from translocal_entropy.pressure.critical import CriticalExponent, ExponentVariant, critical_exponent
from translocal_entropy.pressure.regions import RegionSpec
from translocal_entropy.utils.constants import (
    AUDIT_TOLERANCE,
    DEFAULT_AUDIT_SAMPLES,
    DEFAULT_COVER_DEPTH,
    DEFAULT_COVER_RADIUS,
    DEFAULT_COVER_WINDOW,
    DEFAULT_S_GRID,
    TWO_PI,
)
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AuditReport:
    """
    Resultado de uma auditoria.

    Attributes:
        points (tuple[PhasePoint, ...]): Pontos amostrados de Z.
        uppers (tuple[float, ...]): Pressões locais superiores nos pontos.
        lowers (tuple[float, ...]): Pressões locais inferiores nos pontos.
        upper_pressure (CriticalExponent): P_Z (ou P̄_{Z,ω}).
        lower_pressure (CriticalExponent): P_Z (ou P̲_{Z,ω}).
        omega (float | None): A taxa ω da versão translocal.
        tolerance (float): Tolerância das comparações.
    """
    points: tuple[PhasePoint, ...]
    uppers: tuple[float, ...]
    lowers: tuple[float, ...]
    upper_pressure: CriticalExponent
    lower_pressure: CriticalExponent
    omega: float | None
    tolerance: float

    @property
    def upper_bound_holds(self) -> bool:
        return self.upper_pressure.value <= max(self.uppers) + self.tolerance

    @property
    def lower_bound_holds(self) -> bool:
        return self.lower_pressure.value >= min(self.lowers) - self.tolerance

    @property
    def passed(self) -> bool:
        return self.upper_bound_holds and self.lower_bound_holds

    def rows(self) -> list[tuple[str, str]]:
        """
        Linhas (rótulo, valor) para a tabela da CLI.
        """
        label = 'P_Z' if self.omega is None else f'P_Z,ω (ω={self.omega:g})'
        return [
            ('pontos amostrados', str(len(self.points))),
            ('locais superiores', f'[{min(self.uppers):.4f}, {max(self.uppers):.4f}]'),
            ('locais inferiores', f'[{min(self.lowers):.4f}, {max(self.lowers):.4f}]'),
            (f'{label} superior', f'{self.upper_pressure.value:.4f}'),
            (f'{label} inferior', f'{self.lower_pressure.value:.4f}'),
            ('cota superior', 'ok' if self.upper_bound_holds else 'FALHA'),
            ('cota inferior', 'ok' if self.lower_bound_holds else 'FALHA'),
        ]


def _halton_in_ball(system: SystemDescriptor, ball: BallSpec, count: int) -> list[PhasePoint]:
    metric = system.metric
    center = np.asarray(ball.center.coords, dtype=float)
    dimension = center.size
    unit = qmc.Halton(d=dimension, scramble=False).random(count + 1)[1:]
    match metric.kind:
        case SpaceKind.CIRCLE | SpaceKind.TORUS:
            radius = min(ball.radius, 0.5)
            states = (center + (2.0 * unit - 1.0) * radius) % 1.0
        case SpaceKind.INTERVAL:
            states = np.clip(center + (2.0 * unit - 1.0) * ball.radius, 0.0, 1.0)
        case SpaceKind.DISK:
            x0, y0 = center[0] * math.cos(center[1]), center[0] * math.sin(center[1])
            rho = ball.radius * np.sqrt(unit[:, 0])
            x = x0 + rho * np.cos(TWO_PI * unit[:, 1])
            y = y0 + rho * np.sin(TWO_PI * unit[:, 1])
            radius = np.minimum(np.hypot(x, y), 1.0)
            states = np.stack((radius, np.mod(np.arctan2(y, x), TWO_PI)), axis=-1)
    return list(array_to_points(states, metric))


def sample_region(system: SystemDescriptor, region: RegionSpec, count: int) -> list[PhasePoint]:
    """
    Pontos determinísticos de Z: os pontos explícitos e, em cada bola,
    pontos de Halton (sem o primeiro, que é o canto da caixa).
    """
    if count < 1:
        raise ContractViolationError(f' ERRO: A amostra deve ter ao menos um ponto, recebido {count}.')
    points = list(region.points)
    if region.balls:
        share = max(math.ceil(count / len(region.balls)), 1)
        for ball in region.balls:
            points.extend(_halton_in_ball(system, ball, share))
    return points


def _region_mass(measure: MeasureDescriptor, region: RegionSpec, system: SystemDescriptor) -> float:
    mass = sum(ball_measure(measure, ball, system.metric).value for ball in region.balls)
    if measure.kind is MeasureKind.DIRAC and measure.point in region.points:
        mass += 1.0
    return min(mass, 1.0)


def ma_wen_audit(
    system: SystemDescriptor,
    measure: MeasureDescriptor,
    potential: PotentialSpec,
    region: RegionSpec,
    schedule: Schedule,
    omega: float | None = None,
    samples: int = DEFAULT_AUDIT_SAMPLES,
    radius: float = DEFAULT_COVER_RADIUS,
    n_window: tuple[int, ...] = DEFAULT_COVER_WINDOW,
    s_grid: tuple[float, ...] = DEFAULT_S_GRID,
    tolerance: float = AUDIT_TOLERANCE,
    budget: int | None = None,
) -> AuditReport:
    """
    Audita as desigualdades entre pressões locais e a pressão de Z.

    Args:
        system (SystemDescriptor): O sistema.
        measure (MeasureDescriptor): Medida invariante certificada.
        potential (PotentialSpec): O potencial φ.
        region (RegionSpec): O conjunto Z, com μ(Z) > 0.
        schedule (Schedule): Cronograma das pressões locais.
        omega (float | None, optional): Ativa a versão translocal.
        samples (int, optional): Pontos amostrados de Z.
        radius (float, optional): Raio r das bolas de Bowen das coberturas.
        n_window (tuple[int, ...], optional): Os N das coberturas.
        s_grid (tuple[float, ...], optional): Grade inicial de s.
        tolerance (float, optional): Tolerância das duas comparações.
        budget (int | None, optional): Limite de pontos das amostras.

    Raises:
        ContractViolationError: Sem certificado, com μ(Z) = 0 ou amostra vazia.
        UnbracketedError: Se o expoente crítico não for localizado.

    Returns:
        AuditReport: Os valores locais, as pressões e o veredito.
    """
    require_certificate(system, measure)
    region.check_system(system)
    if _region_mass(measure, region, system) <= 0.0:
        raise ContractViolationError(' ERRO: A auditoria exige μ(Z) > 0.')
    points = sample_region(system, region, samples)
    uppers, lowers = [], []
    for point in points:
        if omega is None:
            upper, lower = local_pressure(system, measure, potential, point, schedule)
        else:
            upper, lower = translocal_local_pressure(system, measure, potential, point, omega, schedule)
        uppers.append(upper.value)
        lowers.append(lower.value)
    top = max(n_window) + DEFAULT_COVER_DEPTH
    if omega is None:
        builder = CoverBuilder(system, region, potential, top, radius=radius, budget=budget)
        pressure = critical_exponent(builder.weight, n_window, ExponentVariant.BOWEN_BALL, s_grid)
        upper_pressure = lower_pressure = pressure
    else:
        builder = CoverBuilder(system, region, potential, top, omega=omega, budget=budget)
        upper_pressure = critical_exponent(builder.weight, n_window, ExponentVariant.TRANSLOCAL_UPPER, s_grid)
        lower_pressure = critical_exponent(builder.weight, n_window, ExponentVariant.TRANSLOCAL_LOWER, s_grid)
    report = AuditReport(
        points=tuple(points),
        uppers=tuple(uppers),
        lowers=tuple(lowers),
        upper_pressure=upper_pressure,
        lower_pressure=lower_pressure,
        omega=omega,
        tolerance=tolerance,
    )
    if not report.passed:
        logger.warning('Auditoria falhou em %s: %s.', system.identifier, report.rows())
    return report
