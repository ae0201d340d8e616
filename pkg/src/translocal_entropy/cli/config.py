"""
Leitura e validação dos arquivos de experimento (INI).

Cada seção cujo nome começa por `experiment` define um experimento; a
seção `[output]` nomeia os arquivos `csv` e `json`. Exemplo::

    [output]
    csv = tripling.csv
    json = tripling.json

    [experiment tripling-translocal]
    kind = translocal
    system = tripling
    points = 0.1234; 0.4321
    omegas = 0, 0.25, 0.5
    n_values = 6, 7, 8, 9, 10
    epsilons = 0.05, 0.02

Todo erro vira `ConfigError` com o campo e a linha aproximada.
"""
from __future__ import annotations

import configparser
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from translocal_entropy.entropy.rates import Schedule
from translocal_entropy.maps.catalogue import SystemDescriptor, get_system
from translocal_entropy.maps.potentials import PotentialSpec, parse_potential
from translocal_entropy.measures.descriptors import MeasureDescriptor, parse_measure
from translocal_entropy.phase_space.points import BallSpec, PhasePoint, parse_point
from translocal_entropy.pressure.regions import RegionSpec
from translocal_entropy.symbolic.families import CodeWordFamily, parse_family
from translocal_entropy.utils.constants import (
    DEFAULT_AUDIT_SAMPLES,
    DEFAULT_COVER_RADIUS,
    DEFAULT_COVER_WINDOW,
    DEFAULT_EPSILONS,
    DEFAULT_N_VALUES,
    DEFAULT_S_GRID,
    DEFAULT_TOLERANCE,
)
from translocal_entropy.utils.errors import ConfigError, ContractViolationError

__status__ = 'Production'

logger = logging.getLogger(__name__)

EXPERIMENT_PREFIX = 'experiment'
OUTPUT_SECTION = 'output'


class ExperimentKind(Enum):
    RESTRICTED_ENTROPY = 'restricted-entropy'
    YZ_FUNCTION = 'yz-function'
    TRANSLOCAL = 'translocal'
    LYAPUNOV = 'lyapunov'
    BRIN_KATOK = 'brin-katok'
    LOCAL_PRESSURE = 'local-pressure'
    TRANSLOCAL_PRESSURE = 'translocal-pressure'
    PRESSURE = 'pressure'
    KRAFT = 'kraft'
    AUDIT = 'audit'


NEEDS_SYSTEM = frozenset(ExperimentKind) - {ExperimentKind.KRAFT}
NEEDS_MEASURE = frozenset({
    ExperimentKind.BRIN_KATOK, ExperimentKind.LOCAL_PRESSURE,
    ExperimentKind.TRANSLOCAL_PRESSURE, ExperimentKind.AUDIT,
})
NEEDS_OMEGA = frozenset({ExperimentKind.TRANSLOCAL, ExperimentKind.TRANSLOCAL_PRESSURE})


@dataclass(frozen=True, eq=False)
class ExperimentConfig:
    """
    Um experimento validado.

    Attributes:
        name (str): Nome da seção.
        kind (ExperimentKind): O estimador.
        system (SystemDescriptor | None): O sistema (ausente em `kraft`).
        points (tuple[PhasePoint, ...]): Pontos avaliados.
        omegas (tuple[float, ...]): Grade de ω (vazia = sem ω).
        potential (PotentialSpec): O potencial φ.
        measure (MeasureDescriptor | None): A medida invariante.
        schedule (Schedule): O cronograma.
        deltas (tuple[float, ...]): Escala δ da função de entropia.
        radius (float): Raio das bolas em `restricted-entropy` e nas coberturas.
        n_window (tuple[int, ...]): Os N das coberturas.
        s_grid (tuple[float, ...]): Grade inicial de s.
        region (RegionSpec | None): O conjunto Z das pressões e auditorias.
        lengths (tuple[int, ...]): Comprimentos para `kraft`.
        family (CodeWordFamily | None): Família para `kraft`.
        samples (int): Pontos amostrados em `audit`.
        tolerance (float): Erro relativo máximo aceito.
        line (int | None): Linha da seção no arquivo.
    """
    name: str
    kind: ExperimentKind
    system: SystemDescriptor | None = None
    points: tuple[PhasePoint, ...] = ()
    omegas: tuple[float, ...] = ()
    potential: PotentialSpec = field(default_factory=PotentialSpec.zero)
    measure: MeasureDescriptor | None = None
    schedule: Schedule = field(default_factory=Schedule)
    deltas: tuple[float, ...] = ()
    radius: float = DEFAULT_COVER_RADIUS
    n_window: tuple[int, ...] = DEFAULT_COVER_WINDOW
    s_grid: tuple[float, ...] = DEFAULT_S_GRID
    region: RegionSpec | None = None
    lengths: tuple[int, ...] = ()
    family: CodeWordFamily | None = None
    samples: int = DEFAULT_AUDIT_SAMPLES
    tolerance: float = DEFAULT_TOLERANCE
    line: int | None = None


@dataclass(frozen=True)
class RunConfig:
    """
    Um arquivo de experimentos.

    Attributes:
        experiments (tuple[ExperimentConfig, ...]): Na ordem do arquivo.
        csv_path (Path | None): Destino do CSV.
        json_path (Path | None): Destino do resumo JSON.
    """
    experiments: tuple[ExperimentConfig, ...]
    csv_path: Path | None = None
    json_path: Path | None = None


class _Locator:
    """
    Linhas aproximadas de seções e chaves no texto original.
    """

    def __init__(self, text: str) -> None:
        self._lines = text.splitlines()

    def section(self, name: str) -> int | None:
        pattern = re.compile(rf'^\s*\[\s*{re.escape(name)}\s*\]')
        for number, line in enumerate(self._lines, start=1):
            if pattern.match(line):
                return number
        return None

    def key(self, section: str, key: str) -> int | None:
        start = self.section(section)
        if start is None:
            return None
        pattern = re.compile(rf'^\s*{re.escape(key)}\s*[=:]')
        for number, line in enumerate(self._lines[start:], start=start + 1):
            if line.lstrip().startswith('['):
                break
            if pattern.match(line):
                return number
        return start


def _floats(raw: str) -> tuple[float, ...]:
    return tuple(float(value) for value in raw.replace(';', ',').split(',') if value.strip())


def _ints(raw: str) -> tuple[int, ...]:
    return tuple(int(value) for value in raw.replace(';', ',').split(',') if value.strip())


def _region(raw: str, system: SystemDescriptor) -> RegionSpec:
    """
    `whole[:âncora]`, `ball:<centro>:<raio>` ou `points:<p1>;<p2>`,
    combinados por ` + `.
    """
    region: RegionSpec | None = None
    for part in raw.split('+'):
        head, _, tail = part.strip().partition(':')
        match head:
            case 'whole':
                anchor = parse_point(tail or _origin(system), system.metric)
                piece = RegionSpec.whole_space(system, anchor)
            case 'ball':
                center, _, radius = tail.rpartition(':')
                piece = RegionSpec(balls=(BallSpec(parse_point(center, system.metric), float(radius)),))
            case 'points':
                piece = RegionSpec(points=tuple(parse_point(p, system.metric) for p in tail.split(';')))
            case _:
                raise ValueError(f'região desconhecida "{part.strip()}"')
        region = piece if region is None else region.union(piece)
    return region


def _origin(system: SystemDescriptor) -> str:
    return ','.join(['0'] * system.metric.dimension)


def _experiment(name: str, section: configparser.SectionProxy, locator: _Locator) -> ExperimentConfig:
    def fail(key: str, message: str) -> ConfigError:
        return ConfigError(key, message, locator.key(name, key), section=name)

    raw_kind = section.get('kind')
    if raw_kind is None:
        raise fail('kind', 'campo obrigatório ausente.')
    try:
        kind = ExperimentKind(raw_kind.strip())
    except ValueError:
        raise fail('kind', f'tipo desconhecido "{raw_kind.strip()}".') from None

    values: dict = {'name': name, 'kind': kind, 'line': locator.section(name)}
    current = 'system'
    try:
        system = None
        if kind in NEEDS_SYSTEM:
            if 'system' not in section:
                raise fail('system', 'campo obrigatório ausente.')
            system = get_system(section['system'])
            values['system'] = system
        current = 'points'
        if 'points' in section and system is not None:
            values['points'] = tuple(parse_point(p, system.metric) for p in section['points'].split(';'))
        current = 'omegas'
        if 'omegas' in section:
            values['omegas'] = _floats(section['omegas'])
            if any(omega < 0.0 for omega in values['omegas']):
                raise fail('omegas', 'ω deve ser não negativo.')
        elif kind in NEEDS_OMEGA:
            raise fail('omegas', 'campo obrigatório ausente.')
        current = 'potential'
        if 'potential' in section:
            values['potential'] = parse_potential(section['potential'])
        current = 'measure'
        if 'measure' in section and system is not None:
            values['measure'] = parse_measure(section['measure'], system.metric)
        elif kind in NEEDS_MEASURE:
            raise fail('measure', 'campo obrigatório ausente.')
        current = 'n_values'
        n_values = _ints(section['n_values']) if 'n_values' in section else DEFAULT_N_VALUES
        current = 'epsilons'
        epsilons = _floats(section['epsilons']) if 'epsilons' in section else DEFAULT_EPSILONS
        current = 'budget'
        budget = int(section['budget']) if 'budget' in section else None
        current = 'n_values'
        values['schedule'] = Schedule(n_values, epsilons, budget)
        for key, parser in (('deltas', _floats), ('n_window', _ints), ('s_grid', _floats), ('lengths', _ints)):
            current = key
            if key in section:
                values[key] = parser(section[key])
        for key, parser in (('radius', float), ('samples', int), ('tolerance', float)):
            current = key
            if key in section:
                values[key] = parser(section[key])
        current = 'family'
        if 'family' in section:
            values['family'] = parse_family(section['family'])
        current = 'region'
        if 'region' in section and system is not None:
            values['region'] = _region(section['region'], system)
    except ConfigError:
        raise
    except (ContractViolationError, ValueError) as error:
        raise fail(current, str(error).strip()) from error
    return _check_required(ExperimentConfig(**values), fail)


def _check_required(config: ExperimentConfig, fail) -> ExperimentConfig:
    match config.kind:
        case ExperimentKind.KRAFT:
            if not config.lengths and config.family is None:
                raise fail('lengths', 'informe `lengths` ou `family`.')
        case ExperimentKind.PRESSURE | ExperimentKind.AUDIT:
            if config.region is None:
                raise fail('region', 'campo obrigatório ausente.')
        case ExperimentKind.YZ_FUNCTION:
            if not config.deltas:
                raise fail('deltas', 'campo obrigatório ausente.')
            if not config.points:
                raise fail('points', 'campo obrigatório ausente.')
        case _:
            if not config.points:
                raise fail('points', 'campo obrigatório ausente.')
    return config


def parse_config(text: str, base: Path | None = None) -> RunConfig:
    """
    Valida o texto de um arquivo de experimentos.

    Args:
        text (str): O conteúdo INI.
        base (Path | None, optional): Diretório contra o qual caminhos
            relativos de saída são resolvidos.

    Raises:
        ConfigError: Com o campo e a linha do primeiro problema.

    Returns:
        RunConfig: Os experimentos validados.
    """
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as error:
        raise ConfigError('arquivo', str(error).strip(), getattr(error, 'lineno', None)) from error
    locator = _Locator(text)
    experiments = tuple(
        _experiment(name, parser[name], locator)
        for name in parser.sections()
        if name.startswith(EXPERIMENT_PREFIX)
    )
    if not experiments:
        raise ConfigError('experiment', 'nenhuma seção [experiment ...] encontrada.')
    paths: dict[str, Path | None] = {'csv': None, 'json': None}
    if parser.has_section(OUTPUT_SECTION):
        for key in paths:
            if key in parser[OUTPUT_SECTION]:
                path = Path(parser[OUTPUT_SECTION][key])
                paths[key] = path if base is None or path.is_absolute() else base / path
    logger.debug('Configuração com %d experimento(s).', len(experiments))
    return RunConfig(experiments, paths['csv'], paths['json'])


def load_config(path: str | Path) -> RunConfig:
    """
    Lê e valida um arquivo de experimentos.

    Raises:
        ConfigError: Se o arquivo não puder ser lido ou for inválido.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as error:
        raise ConfigError('arquivo', f'não foi possível ler "{path}" ({error.strerror}).') from error
    return parse_config(text, path.parent)
