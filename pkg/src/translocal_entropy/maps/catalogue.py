"""
Catálogo de sistemas dinâmicos endereçáveis por identificador.

O catálogo segue o padrão de um dicionário de fábricas: cada identificador
base aponta para uma função que constrói o `SystemDescriptor`, e
identificadores parametrizados (`toral:<matriz>`, `fullshift:<k>`,
`codedshift:<família>`, `iterate:<R>:<id>`, `product:<id>,<id>`) são
decompostos por `get_system`. Novos sistemas entram no catálogo sem que
nenhuma linha dos estimadores precise ser alterada.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable

import numpy as np

from translocal_entropy.maps.rules import (
    DiskRule,
    IterateRule,
    MapRule,
    PiecewiseRule,
    ProductRule,
    ShiftRule,
    StaircaseRule,
    ToralRule,
    affine_branch,
    Branch,
)
from translocal_entropy.phase_space.points import MetricSpec, SpaceKind
from translocal_entropy.symbolic.families import CodeWordFamily, parse_family
from translocal_entropy.symbolic.language import admissible_words, coded_language_count
from translocal_entropy.utils.constants import DEFAULT_STAIRCASE_LEVELS, DEFAULT_SYMBOLIC_BETA
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'


@dataclass(frozen=True, eq=False)
class SystemDescriptor:
    """
    Descrição completa de um sistema dinâmico do catálogo.

    Attributes:
        identifier (str): Identificador textual (usado pela CLI).
        metric (MetricSpec): Espaço de fase e métrica.
        rule (MapRule): A regra de evolução.
        provenance (str): Descrição em uma linha da origem do sistema.
        known_entropy (float | None): Entropia topológica, quando conhecida.
        matrix (np.ndarray | None): Matriz inteira dos sistemas tórais.
        family (CodeWordFamily | None): Família de palavras-código dos
            deslocamentos codificados.
        base (SystemDescriptor | None): O sistema iterado, em f^R.
        power (int): O expoente R dos iterados (1 nos demais).
        factors (tuple[SystemDescriptor, ...]): Os fatores de um produto.
    """
    identifier: str
    metric: MetricSpec
    rule: MapRule
    provenance: str
    known_entropy: float | None = None
    matrix: np.ndarray | None = field(default=None, repr=False)
    family: CodeWordFamily | None = None
    base: SystemDescriptor | None = field(default=None, repr=False)
    power: int = 1
    factors: tuple[SystemDescriptor, ...] = field(default=(), repr=False)

    @property
    def kind(self) -> SpaceKind:
        return self.metric.kind

    @property
    def lipschitz(self) -> float:
        return self.rule.lipschitz

    @property
    def is_symbolic(self) -> bool:
        return self.metric.kind is SpaceKind.SYMBOLIC

    @property
    def is_toral(self) -> bool:
        return self.matrix is not None

    def language_count(self, prefix: tuple[int, ...], length: int) -> int:
        """
        Número de palavras admissíveis de comprimento `length` que começam por `prefix`.

        Raises:
            ContractViolationError: Se o sistema não for simbólico.
        """
        if not self.is_symbolic:
            raise ContractViolationError(f' ERRO: {self.identifier} não é um deslocamento.')
        if self.family is not None:
            return coded_language_count(self.family, length, prefix=prefix)
        if len(prefix) >= length:
            return 1
        return self.metric.alphabet_size ** (length - len(prefix))


_CIRCLE = MetricSpec(SpaceKind.CIRCLE)
_INTERVAL = MetricSpec(SpaceKind.INTERVAL)
_DISK = MetricSpec(SpaceKind.DISK)


def _tripling() -> SystemDescriptor:
    branches = [affine_branch(i / 3, (i + 1) / 3, 3.0, -float(i)) for i in range(3)]
    return SystemDescriptor(
        identifier='tripling',
        metric=_CIRCLE,
        rule=PiecewiseRule(branches, periodic=True, lipschitz=3.0),
        provenance='x -> 3x mod 1 no círculo; h_top = log 3, expoente de Lyapunov log 3 em todo ponto',
        known_entropy=math.log(3.0),
    )


def _three_branch() -> SystemDescriptor:
    branches = [
        affine_branch(0.0, 0.5, 2.0, 0.0),
        affine_branch(0.5, 0.75, 4.0, -2.0),
        affine_branch(0.75, 1.0, 4.0, -3.0),
    ]
    return SystemDescriptor(
        identifier='g3branch',
        metric=_CIRCLE,
        rule=PiecewiseRule(branches, periodic=True, lipschitz=4.0),
        provenance='mapa de três ramos 2x, 4x-2, 4x-3; h_top = log 3 com Lyapunov variável',
        known_entropy=math.log(3.0),
    )


def _pomeau_manneville() -> SystemDescriptor:
    branches = [
        Branch(
            left=0.0,
            right=0.5,
            formula=lambda x: x / (1.0 - x),
            slope=lambda x: 1.0 / (1.0 - x) ** 2,
        ),
        affine_branch(0.5, 1.0, 2.0, -1.0),
    ]
    return SystemDescriptor(
        identifier='pomeau-manneville',
        metric=_INTERVAL,
        rule=PiecewiseRule(branches, periodic=False, lipschitz=4.0),
        provenance='x/(1-x) e 2x-1; ponto fixo neutro em 0 com entropia translocal nula',
        known_entropy=math.log(2.0),
    )


def _sqrt_map() -> SystemDescriptor:
    branches = [
        Branch(
            left=0.0,
            right=0.5,
            formula=lambda x: np.sqrt(2.0 * x),
            slope=lambda x: 1.0 / np.sqrt(2.0 * x),
        ),
        affine_branch(0.5, 1.0, 2.0, -1.0),
    ]
    return SystemDescriptor(
        identifier='sqrtmap',
        metric=_INTERVAL,
        rule=PiecewiseRule(branches, periodic=False, lipschitz=math.inf),
        provenance='sqrt(2x) e 2x-1; entropia translocal log 2 em 0 para todo omega',
        known_entropy=math.log(2.0),
    )


def _identity() -> SystemDescriptor:
    return SystemDescriptor(
        identifier='identity',
        metric=_CIRCLE,
        rule=PiecewiseRule([affine_branch(0.0, 1.0, 1.0, 0.0)], periodic=True, lipschitz=1.0),
        provenance='identidade do círculo; entropia e expoente de Lyapunov nulos',
        known_entropy=0.0,
    )


def _staircase(levels: int = DEFAULT_STAIRCASE_LEVELS) -> SystemDescriptor:
    return SystemDescriptor(
        identifier='staircase' if levels == DEFAULT_STAIRCASE_LEVELS else f'staircase:{levels}',
        metric=_INTERVAL,
        rule=StaircaseRule(levels),
        provenance='escada de entropia infinita; h_top(x) = log(2n+1) em (2^-n, 2^(1-n)]',
        known_entropy=math.inf,
    )


def _disk() -> SystemDescriptor:
    return SystemDescriptor(
        identifier='disk',
        metric=_DISK,
        rule=DiskRule(angle_factor=3, radial=True),
        provenance='(r, phi) -> (r(2-r), 3 phi); h_omega(0) = log 3 (1 - omega/log 2)',
        known_entropy=math.log(3.0),
    )


def _disk_rotation() -> SystemDescriptor:
    return SystemDescriptor(
        identifier='disk-rotation',
        metric=_DISK,
        rule=DiskRule(angle_factor=3, radial=False),
        provenance='(r, phi) -> (r, 3 phi); entropia local log 3 no centro',
        known_entropy=math.log(3.0),
    )


def toral_system(matrix: list[list[int]] | np.ndarray) -> SystemDescriptor:
    """
    Constrói o automorfismo do toro associado a uma matriz inteira.
    """
    rule = ToralRule(np.asarray(matrix))
    array = rule.matrix
    moduli = np.abs(np.linalg.eigvals(array))
    entropy = float(np.sum(np.log(moduli[moduli > 1.0])))
    literal = json.dumps(array.astype(int).tolist(), separators=(',', ':'))
    return SystemDescriptor(
        identifier=f'toral:{literal}',
        metric=MetricSpec(SpaceKind.TORUS, dimension=array.shape[0]),
        rule=rule,
        provenance='automorfismo do toro; h_omega = soma de (log|lambda_i| - omega) sobre log|lambda_i| >= omega',
        known_entropy=entropy,
        matrix=array,
    )


def full_shift(alphabet_size: int, beta: float = DEFAULT_SYMBOLIC_BETA) -> SystemDescriptor:
    """
    O deslocamento completo unilateral sobre `alphabet_size` símbolos.
    """
    if alphabet_size < 2:
        raise ContractViolationError(' ERRO: O deslocamento completo exige ao menos 2 símbolos.')
    return SystemDescriptor(
        identifier=f'fullshift:{alphabet_size}',
        metric=MetricSpec(SpaceKind.SYMBOLIC, beta=beta, alphabet_size=alphabet_size),
        rule=ShiftRule(beta),
        provenance=f'deslocamento completo em {alphabet_size} símbolos; h_top = log {alphabet_size}',
        known_entropy=math.log(alphabet_size),
    )


def coded_shift(family: CodeWordFamily, beta: float = DEFAULT_SYMBOLIC_BETA) -> SystemDescriptor:
    """
    O deslocamento codificado gerado por uma família de palavras-código.
    """
    return SystemDescriptor(
        identifier=f'codedshift:{family.identifier}',
        metric=MetricSpec(
            SpaceKind.SYMBOLIC,
            beta=beta,
            alphabet_size=family.alphabet_size,
            words=partial(admissible_words, family),
        ),
        rule=ShiftRule(beta),
        provenance='deslocamento codificado; entropia resolve soma_k exp(-h |C_k|) = 1',
        family=family,
    )


def iterate_system(system: SystemDescriptor, power: int) -> SystemDescriptor:
    """
    O sistema f^R, com derivada composta.
    """
    known = None if system.known_entropy is None else power * system.known_entropy
    matrix = None if system.matrix is None else np.linalg.matrix_power(system.matrix.astype(int), power).astype(float)
    return SystemDescriptor(
        identifier=f'iterate:{power}:{system.identifier}',
        metric=system.metric,
        rule=IterateRule(system.rule, power),
        provenance=f'iterado {power} de {system.identifier}',
        known_entropy=known,
        matrix=matrix,
        family=system.family,
        base=system,
        power=power,
    )


def product_system(first: SystemDescriptor, second: SystemDescriptor) -> SystemDescriptor:
    """
    O produto cartesiano de dois mapas do círculo, agindo em T².
    """
    for factor in (first, second):
        if factor.kind is not SpaceKind.CIRCLE:
            raise ContractViolationError(f' ERRO: Produto exige mapas do círculo ({factor.identifier}).')
    known = None
    if first.known_entropy is not None and second.known_entropy is not None:
        known = first.known_entropy + second.known_entropy
    return SystemDescriptor(
        identifier=f'product:{first.identifier},{second.identifier}',
        metric=MetricSpec(SpaceKind.TORUS, dimension=2),
        rule=ProductRule([first.rule, second.rule]),
        provenance=f'produto cartesiano {first.identifier} x {second.identifier}',
        known_entropy=known,
        factors=(first, second),
    )


BASE_SYSTEMS: dict[str, Callable[[], SystemDescriptor]] = {
    'tripling': _tripling,
    'g3branch': _three_branch,
    'pomeau-manneville': _pomeau_manneville,
    'sqrtmap': _sqrt_map,
    'staircase': _staircase,
    'disk': _disk,
    'disk-rotation': _disk_rotation,
    'identity': _identity,
}

PARAMETRIC_SYSTEMS: dict[str, str] = {
    'toral:<matriz>': 'automorfismo do toro, ex. toral:[[2,1],[1,1]]',
    'fullshift:<k>': 'deslocamento completo em k símbolos',
    'codedshift:<família>': 'deslocamento codificado, ex. codedshift:linear:1,0 ou codedshift:words:0,01',
    'staircase:<níveis>': 'escada truncada com outro número de níveis',
    'iterate:<R>:<id>': 'iterado f^R de um sistema do catálogo',
    'product:<id>,<id>': 'produto cartesiano de dois mapas do círculo',
}


def get_system(identifier: str) -> SystemDescriptor:
    """
    Resolve um identificador do catálogo.

    Args:
        identifier (str): Identificador base ou parametrizado.

    Raises:
        ContractViolationError: Se o identificador não existir no catálogo.

    Returns:
        SystemDescriptor: O sistema correspondente.
    """
    name = identifier.strip()
    if name in BASE_SYSTEMS:
        return BASE_SYSTEMS[name]()
    head, _, tail = name.partition(':')
    try:
        match head:
            case 'toral':
                return toral_system(json.loads(tail))
            case 'fullshift':
                return full_shift(int(tail))
            case 'codedshift':
                return coded_shift(parse_family(tail))
            case 'staircase':
                return _staircase(int(tail))
            case 'iterate':
                power, _, base = tail.partition(':')
                return iterate_system(get_system(base), int(power))
            case 'product':
                first, _, second = tail.partition(',')
                return product_system(get_system(first), get_system(second))
    except (ValueError, TypeError, json.JSONDecodeError) as error:
        if isinstance(error, ContractViolationError):
            raise
        raise ContractViolationError(f' ERRO: Identificador de sistema inválido: "{identifier}" ({error}).') from error
    raise ContractViolationError(f' ERRO: Sistema desconhecido no catálogo: "{identifier}".')


def list_systems() -> list[tuple[str, str]]:
    """
    Pares (identificador, proveniência) de todos os sistemas do catálogo.
    """
    listing = [(name, factory().provenance) for name, factory in BASE_SYSTEMS.items()]
    listing.extend(PARAMETRIC_SYSTEMS.items())
    return listing
