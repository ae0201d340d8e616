"""
Linhas de relatório, CSV determinístico e resumo JSON.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from translocal_entropy.cli.expectations import Expectation
from translocal_entropy.phase_space.points import PhasePoint, SpaceKind
from translocal_entropy.utils.constants import REL_ERROR_FLOOR, REPORT_COLUMNS

__status__ = 'Production'

logger = logging.getLogger(__name__)


def relative_error(value: float, expected: float) -> float:
    """
    |v − e| / max(|e|, 0.5); o piso evita divisões por esperados nulos.
    """
    return abs(value - expected) / max(abs(expected), REL_ERROR_FLOOR)


def point_label(point: PhasePoint | None) -> str:
    if point is None:
        return ''
    if point.kind is SpaceKind.SYMBOLIC:
        future = ''.join(str(s) for s in point.symbols)
        return f'{"".join(str(s) for s in point.past)}|{future}' if point.past else future
    return ','.join(f'{c:.10g}' for c in point.coords)


def _cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, float):
        return 'inf' if math.isinf(value) else f'{value:.10g}'
    return str(value)


@dataclass(frozen=True)
class ReportRow:
    """
    Uma célula de varredura já avaliada.

    Attributes:
        experiment (str): Nome do experimento.
        system (str): Identificador do sistema.
        point (str): O ponto (ou a região) da célula.
        n_min (int | None): Início da janela em n (ou N).
        n_max (int | None): Fim da janela.
        epsilon (float | None): O ε (ou o raio r das coberturas).
        omega (float | None): O ω.
        s (float | None): O s das células de peso.
        potential (str): Identificador do potencial.
        value (float): O valor estimado.
        residual (float): Resíduo ou largura do diagnóstico.
        expected (float | None): A forma fechada registrada.
        rel_error (float | None): Erro relativo, presente sse há esperado.
        provenance (str): Referência da forma fechada.
        warnings (tuple[str, ...]): Avisos da célula (fora do CSV).
    """
    experiment: str
    system: str
    point: str
    n_min: int | None
    n_max: int | None
    epsilon: float | None
    omega: float | None
    s: float | None
    potential: str
    value: float
    residual: float
    expected: float | None = None
    rel_error: float | None = None
    provenance: str = ''
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def build(cls, expectation: Expectation | None = None, **fields: Any) -> ReportRow:
        """
        Preenche `expected`, `rel_error` e `provenance` a partir do registro.
        """
        if expectation is None:
            return cls(**fields)
        return cls(
            **fields,
            expected=expectation.value,
            rel_error=relative_error(fields['value'], expectation.value),
            provenance=expectation.provenance,
        )

    def passes(self, tolerance: float) -> bool | None:
        if self.rel_error is None:
            return None
        return self.rel_error <= tolerance

    def as_csv(self) -> list[str]:
        return [_cell(getattr(self, column)) for column in REPORT_COLUMNS]


@dataclass
class ExperimentOutcome:
    """
    Linhas e veredito de um experimento.

    Attributes:
        name (str): Nome do experimento.
        kind (str): O tipo.
        tolerance (float): Erro relativo máximo aceito.
        rows (list[ReportRow]): As linhas, na ordem da varredura.
        warnings (list[str]): Avisos acumulados.
        incomplete (bool): Se o orçamento interrompeu a varredura.
        verdict (bool | None): Veredito próprio (auditorias); None usa as linhas.
        error (str | None): Falha numérica que interrompeu o experimento.
        tables (list[tuple[str, list]]): Tabelas (título, linhas) para a tela.
    """
    name: str
    kind: str
    tolerance: float
    rows: list[ReportRow] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    incomplete: bool = False
    verdict: bool | None = None
    error: str | None = None
    tables: list[tuple[str, list]] = field(default_factory=list)

    @property
    def checked(self) -> list[ReportRow]:
        return [row for row in self.rows if row.rel_error is not None]

    @property
    def passed(self) -> bool | None:
        """
        True/False contra as formas fechadas; None se nada foi conferido.
        """
        if self.error is not None:
            return False
        if self.verdict is not None:
            return self.verdict
        checked = self.checked
        if not checked:
            return None
        return all(row.passes(self.tolerance) for row in checked)

    def summary(self) -> dict[str, Any]:
        checked = self.checked
        values = [row.value for row in self.rows if math.isfinite(row.value)]
        return {
            'kind': self.kind,
            'rows': len(self.rows),
            'checked': len(checked),
            'passed': self.passed,
            'incomplete': self.incomplete,
            'tolerance': self.tolerance,
            'max_rel_error': max((row.rel_error for row in checked), default=None),
            'min_value': min(values, default=None),
            'max_value': max(values, default=None),
            'error': self.error,
            'warnings': sorted(set(self.warnings) | {w for row in self.rows for w in row.warnings}),
        }


@dataclass
class RunReport:
    """
    Resultado completo de `run`.
    """
    outcomes: list[ExperimentOutcome] = field(default_factory=list)

    @property
    def rows(self) -> list[ReportRow]:
        return [row for outcome in self.outcomes for row in outcome.rows]

    @property
    def incomplete(self) -> bool:
        return any(outcome.incomplete for outcome in self.outcomes)

    @property
    def passed(self) -> bool:
        return all(outcome.passed is not False for outcome in self.outcomes)

    def to_csv(self) -> str:
        """
        CSV com as colunas fixas, na ordem das varreduras.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(REPORT_COLUMNS)
        writer.writerows(row.as_csv() for row in self.rows)
        return buffer.getvalue()

    def to_summary(self) -> dict[str, Any]:
        return {
            'passed': self.passed,
            'incomplete': self.incomplete,
            'experiments': {outcome.name: outcome.summary() for outcome in self.outcomes},
        }

    def write(self, csv_path: Path | None, json_path: Path | None) -> None:
        if csv_path is not None:
            csv_path.parent.mkdir(parents=True, exist_ok=True)
            csv_path.write_text(self.to_csv(), encoding='utf-8', newline='')
            logger.info('CSV salvo em %s.', csv_path)
        if json_path is not None:
            json_path.parent.mkdir(parents=True, exist_ok=True)
            with json_path.open('w', encoding='utf-8') as file:
                json.dump(self.to_summary(), file, indent=4, ensure_ascii=False)
            logger.info('Resumo salvo em %s.', json_path)

    def table_rows(self) -> list[Sequence[str]]:
        """
        Linhas para a tabela de resumo da CLI.
        """
        rows: list[Sequence[str]] = [('experimento', 'linhas', 'conferidas', 'veredito')]
        for outcome in self.outcomes:
            verdict = {True: 'ok', False: 'FALHA', None: '-'}[outcome.passed]
            if outcome.incomplete:
                verdict += ' (incompleto)'
            rows.append((outcome.name, str(len(outcome.rows)), str(len(outcome.checked)), verdict))
        return rows
