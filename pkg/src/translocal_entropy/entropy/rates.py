"""
Cronogramas de varredura e estimação de taxas de crescimento exponencial.

Os limites superior e inferior em n são substituídos por envelopes de
inclinações: ajusta-se uma reta por mínimos quadrados em cada janela de
três valores consecutivos de n na metade final do cronograma; o limsup é a
maior inclinação e o liminf a menor. Os dados iniciais, onde as bolas ainda
estão encolhendo mais rápido do que a dinâmica expande, ficam fora da cauda.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np
from scipy import stats

from translocal_entropy.utils.constants import (
    DEFAULT_EPSILONS,
    DEFAULT_N_VALUES,
    MIN_RATE_POINTS,
    RATE_WINDOW,
)
from translocal_entropy.utils.errors import ContractViolationError
from translocal_entropy.utils.settings import current_settings

__status__ = 'Production'


class RateMode(Enum):
    LIMSUP = 'limsup'
    LIMINF = 'liminf'


@dataclass(frozen=True)
class Schedule:
    """
    Substituto finito dos limites n → ∞ e ε → 0.

    Attributes:
        n_values (tuple[int, ...]): Valores de n, estritamente crescentes.
        epsilons (tuple[float, ...]): Escala ε, estritamente decrescente.
        point_budget (int | None): Pontos por célula (None usa o orçamento global).
    """
    n_values: tuple[int, ...] = DEFAULT_N_VALUES
    epsilons: tuple[float, ...] = DEFAULT_EPSILONS
    point_budget: int | None = None

    def __post_init__(self) -> None:
        if len(self.n_values) < MIN_RATE_POINTS:
            raise ContractViolationError(f' ERRO: O cronograma exige ao menos {MIN_RATE_POINTS} valores de n.')
        if self.n_values[0] < 1 or any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
            raise ContractViolationError(' ERRO: Valores de n devem ser positivos e crescentes.')
        if not self.epsilons or any(e <= 0.0 for e in self.epsilons):
            raise ContractViolationError(' ERRO: A escala ε deve conter valores positivos.')
        if any(b >= a for a, b in zip(self.epsilons, self.epsilons[1:])):
            raise ContractViolationError(' ERRO: A escala ε deve ser decrescente.')
        if self.point_budget is not None and self.point_budget <= 0:
            raise ContractViolationError(' ERRO: O orçamento de pontos deve ser positivo.')

    @property
    def budget(self) -> int:
        return current_settings().point_budget if self.point_budget is None else self.point_budget

    @property
    def window(self) -> tuple[int, int]:
        return self.n_values[0], self.n_values[-1]

    def with_n_values(self, n_values: Sequence[int]) -> Schedule:
        return Schedule(tuple(n_values), self.epsilons, self.point_budget)


def default_schedule() -> Schedule:
    """
    O cronograma padrão: n ∈ {6, ..., 14}, ε ∈ {0.05, 0.02, 0.01}.
    """
    return Schedule()


@dataclass(frozen=True)
class RateEstimate:
    """
    Estimativa de uma taxa de crescimento exponencial.

    Attributes:
        value (float): A taxa (após o corte em 0 quando pedido).
        n_window (tuple[int, int]): A janela (n_min, n_max) da cauda usada.
        epsilon (float | None): O ε da estimativa reportada.
        residual (float): Resíduo RMS do ajuste escolhido (≥ 0).
        mode (RateMode): Envelope superior ou inferior.
        epsilon_trend (tuple[float, ...]): Valores ao longo da escala ε.
        warnings (tuple[str, ...]): Avisos herdados das células.
    """
    value: float
    n_window: tuple[int, int]
    epsilon: float | None
    residual: float
    mode: RateMode
    epsilon_trend: tuple[float, ...] = ()
    warnings: tuple[str, ...] = field(default=())

    @property
    def flagged(self) -> bool:
        return bool(self.warnings)


def _window_fit(ns: np.ndarray, values: np.ndarray) -> tuple[float, float]:
    if not np.all(np.isfinite(values)):
        return (math.inf, 0.0) if np.any(values == math.inf) else (-math.inf, 0.0)
    fit = stats.linregress(ns, values)
    predicted = fit.intercept + fit.slope * ns
    residual = float(np.sqrt(np.mean((values - predicted) ** 2)))
    return float(fit.slope), residual


def growth_rate(
    log_counts: Sequence[tuple[int, float]],
    mode: RateMode | str = RateMode.LIMSUP,
    clamp: bool = False,
    epsilon: float | None = None,
) -> RateEstimate:
    """
    Taxa de crescimento de uma sequência (n, log c_n).

    Args:
        log_counts (Sequence[tuple[int, float]]): Pares (n, log c_n); o valor
            +∞ é aceito como marcador (bolas de medida nula).
        mode (RateMode | str, optional): `limsup` (maior inclinação) ou
            `liminf` (menor). Defaults to RateMode.LIMSUP.
        clamp (bool, optional): Aplica max{·, 0} depois da regressão.
            Defaults to False.
        epsilon (float | None, optional): ε associado, apenas registrado.

    Raises:
        ContractViolationError: Com menos de três pontos.

    Returns:
        RateEstimate: A inclinação escolhida, a janela e o resíduo.
    """
    mode = RateMode(mode)
    if len(log_counts) < MIN_RATE_POINTS:
        raise ContractViolationError(
            f' ERRO: A taxa exige ao menos {MIN_RATE_POINTS} pontos, recebidos {len(log_counts)}.'
        )
    data = sorted(log_counts)
    start = min(len(data) // 2, len(data) - MIN_RATE_POINTS)
    tail = data[start:]
    ns = np.array([n for n, _ in tail], dtype=float)
    values = np.array([v for _, v in tail], dtype=float)
    fits = [
        _window_fit(ns[i:i + RATE_WINDOW], values[i:i + RATE_WINDOW])
        for i in range(len(tail) - RATE_WINDOW + 1)
    ]
    chooser = max if mode is RateMode.LIMSUP else min
    slope, residual = chooser(fits, key=lambda fit: fit[0])
    if clamp:
        slope = max(slope, 0.0)
    return RateEstimate(
        value=slope,
        n_window=(int(ns[0]), int(ns[-1])),
        epsilon=epsilon,
        residual=residual,
        mode=mode,
    )
