"""
Extração do expoente crítico em que o peso das coberturas cai de ∞ para 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np
from scipy import optimize, stats

from translocal_entropy.entropy.sweeps import run_cells
from translocal_entropy.pressure.covers import CoverWeight
from translocal_entropy.utils.constants import DEFAULT_BISECTION_TOLERANCE, DEFAULT_S_GRID, MIN_RATE_POINTS
from translocal_entropy.utils.errors import ContractViolationError, UnbracketedError

__status__ = 'Production'

logger = logging.getLogger(__name__)


class ExponentVariant(Enum):
    BOWEN_BALL = 'bowen-ball'
    TRANSLOCAL_UPPER = 'translocal-upper'
    TRANSLOCAL_LOWER = 'translocal-lower'


@dataclass(frozen=True)
class CriticalExponent:
    """
    O expoente crítico e o intervalo que o contém.

    Attributes:
        value (float): O s crítico.
        bracket (tuple[float, float]): Intervalo final da bissecção.
        variant (ExponentVariant): A variante.
        n_window (tuple[int, ...]): Os N usados na tendência.
        trends (dict[float, float]): Tendência observada em cada s avaliado.
    """
    value: float
    bracket: tuple[float, float]
    variant: ExponentVariant
    n_window: tuple[int, ...]
    trends: dict[float, float] = field(default_factory=dict)

    @property
    def width(self) -> float:
        return self.bracket[1] - self.bracket[0]


def n_trend(log_weights: Sequence[float], n_window: Sequence[int], variant: ExponentVariant) -> float:
    """
    Inclinação de log M em função de N.

    A variante de Bowen usa a reta de mínimos quadrados (limite monótono);
    as translocais usam a maior (limsup) ou a menor (liminf) das
    inclinações entre N consecutivos.
    """
    ns = np.asarray(n_window, dtype=float)
    values = np.asarray(log_weights, dtype=float)
    if variant is ExponentVariant.BOWEN_BALL:
        return float(stats.linregress(ns, values).slope)
    slopes = np.diff(values) / np.diff(ns)
    return float(slopes.max() if variant is ExponentVariant.TRANSLOCAL_UPPER else slopes.min())


def critical_exponent(
    weigh: Callable[[float, int], CoverWeight],
    n_window: Sequence[int],
    variant: ExponentVariant | str = ExponentVariant.BOWEN_BALL,
    s_grid: Sequence[float] = DEFAULT_S_GRID,
    tolerance: float = DEFAULT_BISECTION_TOLERANCE,
) -> CriticalExponent:
    """
    Localiza o s em que a tendência em N de log M muda de sinal.

    Args:
        weigh (Callable[[float, int], CoverWeight]): Peso da cobertura em
            (s, N), tipicamente `CoverBuilder.weight`.
        n_window (Sequence[int]): Os N, crescentes (ao menos três).
        variant (ExponentVariant | str, optional): A variante.
        s_grid (Sequence[float], optional): Grade inicial de s, crescente.
        tolerance (float, optional): Tolerância da bissecção em s.

    Raises:
        ContractViolationError: Se a janela ou a grade forem inválidas.
        UnbracketedError: Se nenhuma troca de sinal ocorrer na grade.

    Returns:
        CriticalExponent: O expoente, o intervalo final e as tendências.
    """
    variant = ExponentVariant(variant)
    window = tuple(int(n) for n in n_window)
    if len(window) < MIN_RATE_POINTS or any(b <= a for a, b in zip(window, window[1:])):
        raise ContractViolationError(f' ERRO: A janela de N deve ter ao menos {MIN_RATE_POINTS} valores crescentes.')
    grid = sorted(float(s) for s in s_grid)
    if len(grid) < 2:
        raise ContractViolationError(' ERRO: A grade de s exige ao menos dois valores.')
    trends: dict[float, float] = {}

    def trend(s: float) -> float:
        if s not in trends:
            trends[s] = n_trend([weigh(s, n).log_value for n in window], window, variant)
        return trends[s]

    for s, value in zip(grid, run_cells(trend, grid)):
        trends[s] = value
    for low, high in zip(grid, grid[1:]):
        if trends[low] > 0.0 >= trends[high]:
            break
    else:
        raise UnbracketedError(trends)
    if trends[high] == 0.0:
        root = high
    else:
        root = optimize.bisect(trend, low, high, xtol=tolerance)
    bracket = (max(low, root - tolerance), min(high, root + tolerance))
    logger.debug('Expoente crítico %s: %.4f em [%.4f, %.4f].', variant.value, root, *bracket)
    return CriticalExponent(root, bracket, variant, window, dict(sorted(trends.items())))
