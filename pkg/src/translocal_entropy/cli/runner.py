"""
Despacho dos experimentos para os estimadores e montagem dos relatórios.

Cada tipo de experimento tem um manipulador que acrescenta linhas a um
`ExperimentOutcome` à medida que as células terminam; assim, um orçamento
excedido no meio da varredura ainda deixa as linhas já calculadas,
marcadas como incompletas.
"""
from __future__ import annotations

import logging
from typing import Callable

from translocal_entropy.cli.config import ExperimentConfig, ExperimentKind, RunConfig
from translocal_entropy.cli.expectations import expectation, kraft_expectation
from translocal_entropy.cli.report import ExperimentOutcome, ReportRow, RunReport, point_label
from translocal_entropy.cli.tables import render_box
from translocal_entropy.entropy.estimators import restricted_entropy, translocal_entropy, yz_entropy_function
from translocal_entropy.entropy.lyapunov import lyapunov_exponent
from translocal_entropy.maps.catalogue import list_systems
from translocal_entropy.maps.potentials import POTENTIAL_IDENTIFIERS
from translocal_entropy.measures.descriptors import MEASURE_IDENTIFIERS
from translocal_entropy.measures.local import brin_katok, local_pressure, translocal_local_pressure
from translocal_entropy.phase_space.points import BallSpec, PhasePoint
from translocal_entropy.pressure.audit import AuditReport, ma_wen_audit
from translocal_entropy.pressure.covers import CoverBuilder
from translocal_entropy.pressure.critical import ExponentVariant, critical_exponent
from translocal_entropy.pressure.regions import RegionSpec
from translocal_entropy.symbolic.kraft import kraft_entropy
from translocal_entropy.utils.constants import DEFAULT_COVER_DEPTH
from translocal_entropy.utils.errors import BudgetExceededError, TranslocalError

__status__ = 'Production'

logger = logging.getLogger(__name__)

Handler = Callable[[ExperimentConfig, ExperimentOutcome], None]


def region_label(region: RegionSpec) -> str:
    balls = [f'B({point_label(ball.center)};{ball.radius:.6g})' for ball in region.balls]
    return ' + '.join(balls + [point_label(point) for point in region.points])


def _base_fields(config: ExperimentConfig, point: PhasePoint | None, omega: float | None = None) -> dict:
    return {
        'experiment': config.name,
        'system': config.system.identifier if config.system is not None else '',
        'point': point_label(point),
        'omega': omega,
        's': None,
        'potential': config.potential.identifier,
    }


def _note_gap(outcome: ExperimentOutcome, label: str, upper: float, lower: float) -> None:
    """
    As linhas trazem o envelope superior; um inferior distante vira aviso.
    """
    if abs(upper - lower) > outcome.tolerance * max(abs(upper), 0.5):
        outcome.warnings.append(f'{label}: envelope inferior {lower:.6g} distante do superior {upper:.6g}.')


def _omegas(config: ExperimentConfig) -> tuple[float | None, ...]:
    return config.omegas or (None,)


def _restricted(config: ExperimentConfig, outcome: ExperimentOutcome) -> None:
    for point in config.points:
        estimate = restricted_entropy(config.system, BallSpec(point, config.radius), config.schedule)
        outcome.rows.append(ReportRow.build(
            expectation(config.kind.value, config.system, point),
            **_base_fields(config, point),
            n_min=estimate.n_window[0], n_max=estimate.n_window[1], epsilon=estimate.epsilon,
            value=estimate.value, residual=estimate.residual, warnings=estimate.warnings,
        ))


def _yz(config: ExperimentConfig, outcome: ExperimentOutcome) -> None:
    for point in config.points:
        estimate = yz_entropy_function(config.system, point, config.deltas, config.schedule)
        outcome.rows.append(ReportRow.build(
            expectation(config.kind.value, config.system, point),
            **_base_fields(config, point),
            n_min=estimate.n_window[0], n_max=estimate.n_window[1], epsilon=estimate.epsilon,
            value=estimate.value, residual=estimate.residual, warnings=estimate.warnings,
        ))


def _translocal(config: ExperimentConfig, outcome: ExperimentOutcome) -> None:
    for point in config.points:
        for omega in config.omegas:
            upper, lower = translocal_entropy(config.system, point, omega, config.schedule)
            _note_gap(outcome, f'{point_label(point)} ω={omega:g}', upper.value, lower.value)
            outcome.rows.append(ReportRow.build(
                expectation(config.kind.value, config.system, point, omega),
                **_base_fields(config, point, omega),
                n_min=upper.n_window[0], n_max=upper.n_window[1], epsilon=upper.epsilon,
                value=upper.value, residual=upper.residual, warnings=upper.warnings + lower.warnings,
            ))


def _lyapunov(config: ExperimentConfig, outcome: ExperimentOutcome) -> None:
    n = config.schedule.n_values[-1]
    for point in config.points:
        upper, lower = lyapunov_exponent(config.system, point, n)
        _note_gap(outcome, point_label(point), upper, lower)
        outcome.rows.append(ReportRow.build(
            expectation(config.kind.value, config.system, point),
            **_base_fields(config, point),
            n_min=n // 2 + 1, n_max=n, epsilon=None,
            value=upper, residual=upper - lower,
        ))


def _local(config: ExperimentConfig, outcome: ExperimentOutcome) -> None:
    for point in config.points:
        omegas = _omegas(config) if config.kind is ExperimentKind.TRANSLOCAL_PRESSURE else (None,)
        for omega in omegas:
            match config.kind:
                case ExperimentKind.BRIN_KATOK:
                    upper, lower = brin_katok(config.system, config.measure, point, config.schedule)
                case ExperimentKind.LOCAL_PRESSURE:
                    upper, lower = local_pressure(config.system, config.measure, config.potential, point, config.schedule)
                case _:
                    upper, lower = translocal_local_pressure(
                        config.system, config.measure, config.potential, point, omega, config.schedule,
                    )
            _note_gap(outcome, point_label(point), upper.value, lower.value)
            outcome.rows.append(ReportRow.build(
                expectation(config.kind.value, config.system, point, omega, config.potential, config.measure),
                **_base_fields(config, point, omega),
                n_min=upper.n_window[0], n_max=upper.n_window[1], epsilon=upper.epsilon,
                value=upper.value, residual=upper.residual, warnings=upper.warnings + lower.warnings,
            ))


def _pressure(config: ExperimentConfig, outcome: ExperimentOutcome) -> None:
    top = max(config.n_window) + DEFAULT_COVER_DEPTH
    budget = config.schedule.point_budget
    for omega in _omegas(config):
        if omega is None:
            builder = CoverBuilder(config.system, config.region, config.potential, top, radius=config.radius, budget=budget)
            variants = (ExponentVariant.BOWEN_BALL,)
        else:
            builder = CoverBuilder(config.system, config.region, config.potential, top, omega=omega, budget=budget)
            variants = (ExponentVariant.TRANSLOCAL_UPPER, ExponentVariant.TRANSLOCAL_LOWER)
        outcome.warnings.extend(builder.surrogate.warnings)
        exponents = [critical_exponent(builder.weight, config.n_window, variant, config.s_grid) for variant in variants]
        upper = exponents[0]
        _note_gap(outcome, f'ω={omega}', upper.value, exponents[-1].value)
        fields = _base_fields(config, None, omega)
        fields['point'] = region_label(config.region)
        outcome.rows.append(ReportRow.build(
            expectation(config.kind.value, config.system, None, omega, config.potential),
            **fields,
            n_min=min(config.n_window), n_max=max(config.n_window),
            epsilon=config.radius if omega is None else None,
            value=upper.value, residual=upper.width / 2.0,
        ))


def _kraft(config: ExperimentConfig, outcome: ExperimentOutcome) -> None:
    source = config.family if config.family is not None else config.lengths
    solution = kraft_entropy(source)
    label = config.family.identifier if config.family is not None else ','.join(str(n) for n in config.lengths)
    outcome.rows.append(ReportRow.build(
        None if config.family is not None else kraft_expectation(config.lengths),
        experiment=config.name, system=f'kraft:{label}', point='', omega=None, s=None, potential='',
        n_min=None, n_max=solution.truncation_index, epsilon=None,
        value=solution.h, residual=solution.residual,
    ))


def audit_experiment(config: ExperimentConfig) -> list[AuditReport]:
    """
    Uma auditoria por ω da grade (ou uma só, sem ω).
    """
    return [
        ma_wen_audit(
            config.system, config.measure, config.potential, config.region, config.schedule,
            omega=omega, samples=config.samples, radius=config.radius, n_window=config.n_window,
            s_grid=config.s_grid, budget=config.schedule.point_budget,
        )
        for omega in _omegas(config)
    ]


def _audit(config: ExperimentConfig, outcome: ExperimentOutcome) -> None:
    verdicts = []
    for report in audit_experiment(config):
        fields = _base_fields(config, None, report.omega)
        fields['point'] = region_label(config.region)
        for suffix, pressure, local in (
            ('upper', report.upper_pressure, max(report.uppers)),
            ('lower', report.lower_pressure, min(report.lowers)),
        ):
            outcome.rows.append(ReportRow(
                **{**fields, 'experiment': f'{config.name}/{suffix}'},
                n_min=min(config.n_window), n_max=max(config.n_window),
                epsilon=config.radius if report.omega is None else None,
                value=pressure.value, residual=abs(pressure.value - local),
            ))
        title = 'Auditoria' if report.omega is None else f'Auditoria translocal (ω = {report.omega:g})'
        outcome.tables.append((f'{title}: {config.name}', report.rows()))
        verdicts.append(report.passed)
    outcome.verdict = all(verdicts)


HANDLERS: dict[ExperimentKind, Handler] = {
    ExperimentKind.RESTRICTED_ENTROPY: _restricted,
    ExperimentKind.YZ_FUNCTION: _yz,
    ExperimentKind.TRANSLOCAL: _translocal,
    ExperimentKind.LYAPUNOV: _lyapunov,
    ExperimentKind.BRIN_KATOK: _local,
    ExperimentKind.LOCAL_PRESSURE: _local,
    ExperimentKind.TRANSLOCAL_PRESSURE: _local,
    ExperimentKind.PRESSURE: _pressure,
    ExperimentKind.KRAFT: _kraft,
    ExperimentKind.AUDIT: _audit,
}


def run_experiment(config: ExperimentConfig) -> ExperimentOutcome:
    """
    Executa um experimento, guardando as linhas mesmo se ele for interrompido.

    Um orçamento excedido marca o resultado como incompleto; outras falhas
    numéricas da biblioteca viram `error` e reprovam o experimento.
    """
    outcome = ExperimentOutcome(config.name, config.kind.value, config.tolerance)
    logger.info('Experimento "%s" (%s).', config.name, config.kind.value)
    try:
        HANDLERS[config.kind](config, outcome)
    except BudgetExceededError as error:
        outcome.incomplete = True
        outcome.warnings.append(str(error).strip())
        logger.warning('Experimento "%s" interrompido: %s', config.name, str(error).strip())
    except TranslocalError as error:
        outcome.error = str(error).strip()
        logger.error('Experimento "%s" falhou: %s', config.name, outcome.error)
    return outcome


def run(config: RunConfig, only: ExperimentKind | None = None) -> RunReport:
    """
    Executa os experimentos de um arquivo e grava os relatórios pedidos.

    Args:
        config (RunConfig): A configuração validada.
        only (ExperimentKind | None, optional): Restringe a um tipo.

    Returns:
        RunReport: As linhas e os vereditos, na ordem do arquivo.
    """
    report = RunReport()
    for experiment in config.experiments:
        if only is None or experiment.kind is only:
            report.outcomes.append(run_experiment(experiment))
    report.write(config.csv_path, config.json_path)
    return report


def list_catalogue() -> str:
    """
    Tabelas dos sistemas, medidas e potenciais disponíveis.
    """
    sections = (
        ('Sistemas', list_systems()),
        ('Medidas', list(MEASURE_IDENTIFIERS.items())),
        ('Potenciais', list(POTENTIAL_IDENTIFIERS.items())),
    )
    return '\n'.join(render_box(title, rows) for title, rows in sections)
