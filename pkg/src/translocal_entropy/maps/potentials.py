"""
Potenciais contínuos φ e somas de Birkhoff ao longo de órbitas.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from translocal_entropy.maps.catalogue import SystemDescriptor
from translocal_entropy.phase_space.points import SpaceKind
from translocal_entropy.utils.errors import ContractViolationError

__status__ = 'Production'


class PotentialKind(Enum):
    ZERO = 'zero'
    CONSTANT = 'constant'
    GEOMETRIC = 'geometric'
    TABLE = 'table'


@dataclass(frozen=True)
class PotentialSpec:
    """
    Um potencial φ: X → ℝ.

    Attributes:
        kind (PotentialKind): A variante.
        parameter (float): c para o constante, t para o geométrico −t·log|f'|.
        table (tuple[float, ...]): Valores numa grade uniforme de [0, 1],
            interpolados linearmente (variante tabelada).
    """
    kind: PotentialKind = PotentialKind.ZERO
    parameter: float = 0.0
    table: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.kind is PotentialKind.TABLE:
            if len(self.table) < 2 or not np.all(np.isfinite(self.table)):
                raise ContractViolationError(' ERRO: Potencial tabelado exige ao menos 2 valores finitos.')
        elif not np.isfinite(self.parameter):
            raise ContractViolationError(' ERRO: Parâmetro do potencial deve ser finito.')

    @classmethod
    def zero(cls) -> PotentialSpec:
        return cls(PotentialKind.ZERO)

    @classmethod
    def constant(cls, value: float) -> PotentialSpec:
        return cls(PotentialKind.CONSTANT, float(value))

    @classmethod
    def geometric(cls, t: float) -> PotentialSpec:
        return cls(PotentialKind.GEOMETRIC, float(t))

    @property
    def identifier(self) -> str:
        match self.kind:
            case PotentialKind.ZERO:
                return 'zero'
            case PotentialKind.TABLE:
                return 'table:' + ','.join(f'{v:g}' for v in self.table)
        return f'{self.kind.value}:{self.parameter:g}'

    @property
    def is_constant(self) -> bool:
        return self.kind in (PotentialKind.ZERO, PotentialKind.CONSTANT)

    def check_system(self, system: SystemDescriptor) -> None:
        """
        Valida que o potencial pode ser avaliado sobre o sistema.

        Raises:
            ContractViolationError: Se a variante não for compatível com o espaço.
        """
        if self.kind is PotentialKind.GEOMETRIC and not system.rule.has_derivative:
            raise ContractViolationError(
                f' ERRO: O potencial geométrico exige regra de derivada ({system.identifier}).'
            )
        if self.kind is PotentialKind.TABLE and system.kind not in (SpaceKind.CIRCLE, SpaceKind.INTERVAL):
            raise ContractViolationError(' ERRO: Potencial tabelado só é definido em espaços unidimensionais.')

    def evaluate(self, system: SystemDescriptor, states: np.ndarray) -> np.ndarray:
        """
        Avalia φ sobre um lote de estados de forma (N, k).
        """
        count = states.shape[0]
        match self.kind:
            case PotentialKind.ZERO:
                return np.zeros(count)
            case PotentialKind.CONSTANT:
                return np.full(count, self.parameter)
            case PotentialKind.GEOMETRIC:
                self.check_system(system)
                with np.errstate(divide='ignore'):
                    values = -self.parameter * np.log(np.abs(system.rule.derivative(states)))
                if not np.all(np.isfinite(values)):
                    raise ContractViolationError(' ERRO: Potencial geométrico não finito ao longo da órbita.')
                return values
            case PotentialKind.TABLE:
                self.check_system(system)
                grid = np.linspace(0.0, 1.0, len(self.table))
                return np.interp(states[:, 0], grid, np.asarray(self.table))


def birkhoff_sums(
    system: SystemDescriptor,
    potential: PotentialSpec,
    states: np.ndarray,
    n: int,
) -> np.ndarray:
    """
    Somas de Birkhoff acumuladas S_mφ(x) = Σ_{j<m} φ(f^j x) para m = 1, ..., n.

    Args:
        system (SystemDescriptor): O sistema.
        potential (PotentialSpec): O potencial.
        states (np.ndarray): Lote de forma (N, k).
        n (int): Maior comprimento.

    Returns:
        np.ndarray: Matriz (N, n) cuja coluna m−1 é S_mφ.
    """
    count = states.shape[0]
    if potential.is_constant:
        return np.outer(np.ones(count), potential.parameter * np.arange(1, n + 1))
    sums = np.empty((count, n))
    total = np.zeros(count)
    current = states
    for m in range(n):
        total = total + potential.evaluate(system, current)
        sums[:, m] = total
        if m < n - 1:
            current = system.rule.apply(current)
    return sums


def birkhoff_sum(system: SystemDescriptor, potential: PotentialSpec, states: np.ndarray, n: int) -> np.ndarray:
    """
    S_nφ(x) para cada estado do lote.
    """
    return birkhoff_sums(system, potential, states, n)[:, -1]


def parse_potential(text: str) -> PotentialSpec:
    """
    Interpreta `zero`, `constant:<c>`, `geometric:<t>` ou `table:<v1>,<v2>,...`.

    Raises:
        ContractViolationError: Se o identificador for malformado.
    """
    head, _, tail = text.strip().partition(':')
    try:
        match head:
            case 'zero':
                return PotentialSpec.zero()
            case 'constant':
                return PotentialSpec.constant(float(tail))
            case 'geometric':
                return PotentialSpec.geometric(float(tail))
            case 'table':
                return PotentialSpec(PotentialKind.TABLE, table=tuple(float(v) for v in tail.split(',')))
    except ValueError as error:
        if isinstance(error, ContractViolationError):
            raise
        raise ContractViolationError(f' ERRO: Potencial inválido: "{text}".') from error
    raise ContractViolationError(f' ERRO: Potencial desconhecido: "{text}".')


POTENTIAL_IDENTIFIERS: dict[str, str] = {
    'zero': 'potencial nulo; a pressão local coincide com a entropia de Brin–Katok',
    'constant:<c>': 'potencial constante; P(φ + c) = P(φ) + c',
    'geometric:<t>': '−t·log|f\'|, exige regra de derivada; no tripling P = (1 − t)·log 3, nula em t = 1',
    'table:<v1>,<v2>,...': 'interpolação linear em pontos igualmente espaçados de [0,1]; potencial contínuo das auditorias de cobertura',
}
